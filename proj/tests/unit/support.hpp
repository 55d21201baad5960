#pragma once

#include "qgdef/lie_algebra.hpp"
#include "qgdef/tensor.hpp"
#include "qgdef/uea.hpp"

#include <memory>
#include <random>
#include <string>

namespace qgdef::test {

inline std::shared_ptr<const LieAlgebra> algebra(const std::string& name) {
    return std::make_shared<const LieAlgebra>(
        load_lie_algebra_file(std::string(QGDEF_DATA_DIR) + "/" + name + ".json"));
}

inline Rational small_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    return frac(num(rng), den(rng));
}

inline Monomial random_monomial(std::mt19937& rng, int dim, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree), idx(0, dim - 1);
    Monomial m(dim, 0);
    for (int d = deg(rng); d > 0; --d)
        ++m[idx(rng)];
    return m;
}

inline UEElem random_element(std::mt19937& rng, int dim, int max_degree, int terms = 3) {
    UEElem a;
    for (int i = 0; i < terms; ++i)
        a.add(random_monomial(rng, dim, max_degree), small_rational(rng));
    return a;
}

inline TensorPoly random_tensor(std::mt19937& rng, int arity, int dim, int max_degree, int terms = 3) {
    TensorPoly t(arity, dim);
    std::uniform_int_distribution<int> deg(0, max_degree);
    for (int i = 0; i < terms; ++i) {
        std::vector<Monomial> legs;
        int budget = deg(rng);
        for (int l = 0; l < arity; ++l) {
            std::uniform_int_distribution<int> part(0, budget);
            int d = l + 1 == arity ? budget : part(rng);
            budget -= d;
            legs.push_back(random_monomial(rng, dim, 0));
            std::uniform_int_distribution<int> idx(0, dim - 1);
            for (; d > 0; --d)
                ++legs.back()[idx(rng)];
        }
        t.add_term(concat_legs(legs), small_rational(rng));
    }
    return t;
}

} // namespace qgdef::test
