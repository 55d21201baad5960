#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace qgdef;

namespace {

// Straightens words by adjacent swaps x_j x_i -> x_i x_j + [x_j, x_i] until sorted.
using Word = std::vector<int>;

UEElem oracle_normal_order(const LieAlgebra& L, std::map<Word, Rational> todo) {
    UEElem out;
    while (!todo.empty()) {
        auto [w, c] = *todo.begin();
        todo.erase(todo.begin());
        std::size_t i = 0;
        while (i + 1 < w.size() && w[i] <= w[i + 1])
            ++i;
        if (i + 1 >= w.size()) {
            Monomial m(L.dim(), 0);
            for (int x : w)
                ++m[x];
            out.add(m, c);
            continue;
        }
        Word swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        todo[swapped] += c;
        for (const auto& [k, v] : L.bracket(w[i], w[i + 1])) {
            Word shorter(w.begin(), w.begin() + i);
            shorter.push_back(k);
            shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
            todo[shorter] += c * v;
        }
        for (auto it = todo.begin(); it != todo.end();)
            it = sgn(it->second) == 0 ? todo.erase(it) : std::next(it);
    }
    return out;
}

Word word_of(const Monomial& m) {
    Word w;
    for (int i = 0; i < static_cast<int>(m.size()); ++i)
        for (int k = 0; k < m[i]; ++k)
            w.push_back(i);
    return w;
}

UEElem oracle_product(const LieAlgebra& L, const UEElem& a, const UEElem& b) {
    std::map<Word, Rational> words;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Word w = word_of(ma);
            Word wb = word_of(mb);
            w.insert(w.end(), wb.begin(), wb.end());
            words[w] += ca * cb;
        }
    return oracle_normal_order(L, words);
}

} // namespace

TEST_CASE("FE = EF - H in U(sl2)") {
    auto L = test::algebra("sl2");
    Uea U(L);
    UEElem expect;
    expect.add({1, 0, 1}, 1);
    expect.add({0, 1, 0}, -1);
    CHECK(U.multiply(U.generator(2), U.generator(0)) == expect);
}

TEST_CASE("PBW product agrees with the word-rewriting oracle") {
    std::mt19937 rng(7);
    for (const char* name : {"sl2", "sl3", "heisenberg"}) {
        CAPTURE(name);
        auto L = test::algebra(name);
        Uea U(L);
        for (int trial = 0; trial < 25; ++trial) {
            UEElem a = test::random_element(rng, L->dim(), 3);
            UEElem b = test::random_element(rng, L->dim(), 3);
            CHECK(U.multiply(a, b) == oracle_product(*L, a, b));
        }
    }
}

TEST_CASE("Hopf structure on random elements") {
    std::mt19937 rng(11);
    auto L = test::algebra("sl2");
    Uea U(L);
    const int d = L->dim();
    for (int trial = 0; trial < 20; ++trial) {
        UEElem a = test::random_element(rng, d, 3);
        UEElem b = test::random_element(rng, d, 3);
        TensorPoly da = coproduct(a, d);
        CHECK(coproduct_insert(da, 1) == coproduct_insert(da, 2));
        CHECK(counit_leg(da, 1) == embed(a, d));
        CHECK(counit_leg(da, 2) == embed(a, d));
        CHECK(U.antipode(U.multiply(a, b)) == U.multiply(U.antipode(b), U.antipode(a)));
        CHECK(coproduct(U.multiply(a, b), d) == tensor_mul(U, da, coproduct(b, d)));
    }
}

TEST_CASE("symmetrization and its inverse") {
    auto L = test::algebra("sl3");
    Uea U(L);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Monomial m = test::random_monomial(rng, L->dim(), 4);
        UEElem back;
        for (const auto& [mono, c] : U.symmetrized(m))
            back.add(U.sym_coordinates(mono), c);
        UEElem expect;
        expect.add(m, 1);
        CHECK(back == expect);
    }
    // σ(EF) = EF - H/2
    auto S = test::algebra("sl2");
    Uea V(S);
    UEElem expect;
    expect.add({1, 0, 1}, 1);
    expect.add({0, 1, 0}, frac(-1, 2));
    CHECK(V.symmetrized({1, 0, 1}) == expect);
}
