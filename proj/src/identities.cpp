#include "qgdef/identities.hpp"

#include "qgdef/errors.hpp"

namespace qgdef {

HSeries pent(const Uea& U, const HSeries& phi) {
    if (phi.arity() != 3)
        fail(ErrorKind::Internal, "pent expects an arity-3 series");
    HSeries lhs = series_mul(U, pad_left(phi, 4), coproduct_insert(phi, 2));
    lhs = series_mul(U, lhs, pad_right(phi, 4));
    lhs = series_mul(U, lhs, series_inverse(U, coproduct_insert(phi, 1)));
    return series_mul(U, lhs, series_inverse(U, coproduct_insert(phi, 3)));
}

HSeries twist_defect(const Uea& U, const HSeries& F, const HSeries& phi) {
    HSeries a = series_mul(U, pad_left(F, 3), coproduct_insert(F, 2));
    a = series_mul(U, a, phi);
    HSeries b = series_mul(U, pad_right(F, 3), coproduct_insert(F, 1));
    return series_sub(a, b);
}

std::pair<HSeries, HSeries> hexagon_defect(const Uea& U, const HSeries& R, const HSeries& phi) {
    HSeries r12 = leg_map(R, {1, 2}, 3);
    HSeries r13 = leg_map(R, {1, 3}, 3);
    HSeries r23 = leg_map(R, {2, 3}, 3);
    HSeries phi_inv = series_inverse(U, phi);

    HSeries a = series_mul(U, leg_map(phi, {3, 1, 2}, 3), r13);
    a = series_mul(U, a, leg_map(phi_inv, {1, 3, 2}, 3));
    a = series_mul(U, a, r23);
    a = series_mul(U, a, phi);

    HSeries b = series_mul(U, leg_map(phi_inv, {2, 3, 1}, 3), r13);
    b = series_mul(U, b, leg_map(phi, {2, 1, 3}, 3));
    b = series_mul(U, b, r12);
    b = series_mul(U, b, phi_inv);

    return {series_sub(coproduct_insert(R, 1), a), series_sub(coproduct_insert(R, 2), b)};
}

HSeries gauge_act(const Uea& U, const HSeries& u, const HSeries& F) {
    HSeries uu = series_mul(U, leg_map(u, {1}, 2), leg_map(u, {2}, 2));
    HSeries out = series_mul(U, uu, F);
    return series_mul(U, out, coproduct_insert(series_inverse(U, u), 1));
}

HSeries deformed_coproduct(const Uea& U, const HSeries& F, const UEElem& a) {
    HSeries d = HSeries::constant(coproduct(a, U.dim()), F.order(), F.degree_cap());
    return series_mul(U, series_mul(U, F, d), series_inverse(U, F));
}

HSeries multiply_legs(const Uea& U, const HSeries& a) {
    if (a.arity() != 2)
        fail(ErrorKind::Internal, "multiply_legs expects arity 2");
    HSeries out(1, a.dim(), a.order(), a.degree_cap());
    for (int k = 0; k <= a.order(); ++k) {
        UEElem acc;
        for (const auto& [key, c] : a.coeff(k))
            acc.add(U.multiply_monomials(a.coeff(k).leg(key, 0), a.coeff(k).leg(key, 1)), c);
        out.coeff(k) = embed(acc, a.dim());
    }
    return out;
}

HSeries twisted_antipode_element(const Uea& U, const HSeries& F) {
    // Σ F₂ S(F₁): swap legs, apply S on the new second leg, multiply.
    HSeries swapped = leg_map(F, {2, 1}, 2);
    HSeries s(2, F.dim(), F.order(), F.degree_cap());
    for (int k = 0; k <= F.order(); ++k) {
        TensorPoly& out = s.coeff(k);
        const TensorPoly& in = swapped.coeff(k);
        expand_legwise(in, [&](int l, const Monomial& m) -> const UEElem& {
            static thread_local UEElem id;
            if (l == 1)
                return U.antipode_monomial(m);
            id.clear();
            id.add(m, 1);
            return id;
        }, out);
    }
    return multiply_legs(U, s);
}

} // namespace qgdef
