#include "support.hpp"

#include "qgdef/errors.hpp"
#include "qgdef/hseries.hpp"

#include <doctest.h>

using namespace qgdef;

namespace {

HSeries random_series(std::mt19937& rng, int arity, int dim, int order, bool unit_constant) {
    HSeries s = unit_constant ? HSeries::unit(arity, dim, order) : HSeries(arity, dim, order);
    for (int k = 1; k <= order; ++k)
        s.add_at(k, test::random_tensor(rng, arity, dim, 2, 2));
    return s;
}

} // namespace

TEST_CASE("series multiplication truncates and is associative") {
    auto L = test::algebra("sl2");
    Uea U(L);
    std::mt19937 rng(5);
    const int N = 3;
    HSeries a = random_series(rng, 2, 3, N, false);
    HSeries b = random_series(rng, 2, 3, N, false);
    HSeries c = random_series(rng, 2, 3, N, false);
    CHECK(series_mul(U, series_mul(U, a, b), c) == series_mul(U, a, series_mul(U, b, c)));
    HSeries ab = series_mul(U, a, b);
    CHECK(ab.order() == N);
    // a,b have no constant term, so the product starts at h^2
    CHECK(ab.coeff(0).is_zero());
    CHECK(ab.coeff(1).is_zero());
    CHECK(ab.coeff(2) == tensor_mul(U, a.coeff(1), b.coeff(1)));
}

TEST_CASE("inverse and exponential") {
    auto L = test::algebra("sl2");
    Uea U(L);
    std::mt19937 rng(9);
    const int N = 4;
    HSeries a = random_series(rng, 2, 3, N, true);
    HSeries one = HSeries::unit(2, 3, N);
    CHECK(series_mul(U, a, series_inverse(U, a)) == one);
    CHECK(series_mul(U, series_inverse(U, a), a) == one);

    HSeries x = random_series(rng, 1, 3, N, false);
    HSeries mx = x;
    mx.scale(-1);
    CHECK(series_mul(U, series_exp(U, x), series_exp(U, mx)) == HSeries::unit(1, 3, N));
    // exp(x) = 1 + x + x^2/2 + ... checked against the first terms
    HSeries e = series_exp(U, x);
    TensorPoly e2 = x.coeff(2);
    e2.add(tensor_mul(U, x.coeff(1), x.coeff(1)), frac(1, 2));
    CHECK(e.coeff(1) == x.coeff(1));
    CHECK(e.coeff(2) == e2);
}

TEST_CASE("flip_h negates odd coefficients") {
    std::mt19937 rng(1);
    HSeries a = random_series(rng, 2, 3, 3, true);
    HSeries f = flip_h(a);
    for (int k = 0; k <= 3; ++k) {
        TensorPoly expect = a.coeff(k);
        if (k % 2)
            expect.scale(-1);
        CHECK(f.coeff(k) == expect);
    }
    CHECK(flip_h(f) == a);
}

TEST_CASE("exceeding the degree cap is a config error") {
    auto L = test::algebra("sl2");
    Uea U(L);
    HSeries a(1, 3, 2, 1);
    a.add_at(1, embed(U.generator(0), 3));
    try {
        series_mul(U, a, a);
        FAIL("cap not enforced");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Config);
    }
    a.set_degree_cap(kNoDegreeCap);
    CHECK_FALSE(series_mul(U, a, a).coeff(2).is_zero());
}

TEST_CASE("pad and leg maps on series") {
    std::mt19937 rng(2);
    HSeries a = random_series(rng, 2, 3, 2, true);
    HSeries p = pad_right(a, 3);
    CHECK(p == leg_map(a, {1, 2}, 3));
    CHECK(pad_left(a, 3) == leg_map(a, {2, 3}, 3));
    CHECK(counit_leg(p, 3) == a);
}
