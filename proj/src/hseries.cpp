#include "qgdef/hseries.hpp"

#include "qgdef/errors.hpp"

#include <algorithm>
#include <numeric>

namespace qgdef {

namespace {

template <class Fn>
HSeries map_coeffs(const HSeries& a, int arity, Fn&& fn) {
    HSeries out(arity, a.dim(), a.order(), a.degree_cap());
    for (int k = 0; k <= a.order(); ++k)
        out.coeff(k) = fn(a.coeff(k));
    return out;
}

void enforce_cap(const TensorPoly& t, int cap, int k) {
    if (cap == kNoDegreeCap)
        return;
    if (t.max_degree() > cap)
        fail(ErrorKind::Config, "degree cap " + std::to_string(cap) + " exceeded at order h^" + std::to_string(k) +
                                    " (total PBW degree " + std::to_string(t.max_degree()) + ")");
}

} // namespace

HSeries::HSeries(int arity, int dim, int order, int degree_cap)
    : arity_(arity), dim_(dim), degree_cap_(degree_cap) {
    if (order < 0)
        fail(ErrorKind::Config, "series order must be non-negative");
    coeffs_.assign(order + 1, TensorPoly(arity, dim));
}

HSeries HSeries::unit(int arity, int dim, int order, int degree_cap) {
    HSeries s(arity, dim, order, degree_cap);
    s.coeff(0) = TensorPoly::unit(arity, dim);
    return s;
}

HSeries HSeries::constant(const TensorPoly& c, int order, int degree_cap) {
    HSeries s(c.arity(), c.dim(), order, degree_cap);
    s.coeff(0) = c;
    return s;
}

void HSeries::add(const HSeries& other, const Rational& scale) {
    if (other.arity_ != arity_)
        fail(ErrorKind::Internal, "arity mismatch in series addition");
    int n = std::min(order(), other.order());
    coeffs_.resize(n + 1);
    for (int k = 0; k <= n; ++k)
        coeffs_[k].add(other.coeffs_[k], scale);
}

void HSeries::scale(const Rational& s) {
    for (auto& c : coeffs_)
        c.scale(s);
}

HSeries HSeries::truncated(int order) const {
    HSeries s = *this;
    s.coeffs_.resize(std::min(order, this->order()) + 1, TensorPoly(arity_, dim_));
    return s;
}

bool HSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const TensorPoly& t) { return t.is_zero(); });
}

std::optional<int> HSeries::first_nonzero_order() const {
    for (int k = 0; k <= order(); ++k)
        if (!coeffs_[k].is_zero())
            return k;
    return std::nullopt;
}

HSeries series_sub(const HSeries& a, const HSeries& b) {
    HSeries out = a;
    out.add(b, -1);
    return out;
}

HSeries series_mul(const Uea& U, const HSeries& a, const HSeries& b) {
    if (a.arity() != b.arity())
        fail(ErrorKind::Internal, "arity mismatch in series product");
    const int n = std::min(a.order(), b.order());
    const int cap = std::min(a.degree_cap(), b.degree_cap());
    HSeries out(a.arity(), a.dim(), n, cap);
    for (int k = 0; k <= n; ++k) {
        TensorPoly& acc = out.coeff(k);
        for (int i = 0; i <= k; ++i) {
            if (a.coeff(i).is_zero() || b.coeff(k - i).is_zero())
                continue;
            acc.add(tensor_mul(U, a.coeff(i), b.coeff(k - i)));
        }
        enforce_cap(acc, cap, k);
    }
    return out;
}

HSeries series_inverse(const Uea& U, const HSeries& a) {
    if (!(a.coeff(0) == TensorPoly::unit(a.arity(), a.dim())))
        fail(ErrorKind::Internal, "series inverse requires unit constant term");
    // b_k = −Σ_{i=1}^{k} a_i b_{k−i}
    HSeries out(a.arity(), a.dim(), a.order(), a.degree_cap());
    out.coeff(0) = a.coeff(0);
    for (int k = 1; k <= a.order(); ++k) {
        TensorPoly acc(a.arity(), a.dim());
        for (int i = 1; i <= k; ++i) {
            if (a.coeff(i).is_zero() || out.coeff(k - i).is_zero())
                continue;
            acc.add(tensor_mul(U, a.coeff(i), out.coeff(k - i)), -1);
        }
        enforce_cap(acc, a.degree_cap(), k);
        out.coeff(k) = std::move(acc);
    }
    return out;
}

HSeries series_exp(const Uea& U, const HSeries& a) {
    if (!a.coeff(0).is_zero())
        fail(ErrorKind::Internal, "series exponential requires zero constant term");
    HSeries out = HSeries::unit(a.arity(), a.dim(), a.order(), a.degree_cap());
    HSeries power = out;
    for (int k = 1; k <= a.order(); ++k) {
        power = series_mul(U, power, a);
        power.scale(Rational(1, k));
        out.add(power);
    }
    return out;
}

HSeries leg_map(const HSeries& a, const std::vector<int>& slots, int target_arity) {
    return map_coeffs(a, target_arity, [&](const TensorPoly& t) { return leg_map(t, slots, target_arity); });
}

HSeries coproduct_insert(const HSeries& a, int position) {
    return map_coeffs(a, a.arity() + 1, [&](const TensorPoly& t) { return coproduct_insert(t, position); });
}

HSeries counit_leg(const HSeries& a, int position) {
    return map_coeffs(a, a.arity() - 1, [&](const TensorPoly& t) { return counit_leg(t, position); });
}

HSeries tau(const HSeries& a) {
    return map_coeffs(a, a.arity(), [](const TensorPoly& t) { return tau(t); });
}

HSeries antipode_legs(const Uea& U, const HSeries& a) {
    return map_coeffs(a, a.arity(), [&](const TensorPoly& t) { return antipode_legs(U, t); });
}

HSeries theta_legs(const Uea& U, const HSeries& a) {
    return map_coeffs(a, a.arity(), [&](const TensorPoly& t) { return theta_legs(U, t); });
}

HSeries flip_h(const HSeries& a) {
    HSeries out = a;
    for (int k = 1; k <= a.order(); k += 2)
        out.coeff(k).scale(-1);
    return out;
}

HSeries weight_zero_part(const Uea& U, const HSeries& a) {
    return map_coeffs(a, a.arity(), [&](const TensorPoly& t) { return weight_zero_part(U, t); });
}

bool is_invariant(const Uea& U, const HSeries& a) {
    for (int k = 0; k <= a.order(); ++k)
        if (!is_invariant(U, a.coeff(k)))
            return false;
    return true;
}

bool is_weight_zero(const Uea& U, const HSeries& a) {
    for (int k = 0; k <= a.order(); ++k)
        if (!is_weight_zero(U, a.coeff(k)))
            return false;
    return true;
}

HSeries pad_right(const HSeries& a, int n) {
    std::vector<int> slots(a.arity());
    std::iota(slots.begin(), slots.end(), 1);
    return leg_map(a, slots, n);
}

HSeries pad_left(const HSeries& a, int n) {
    std::vector<int> slots(a.arity());
    std::iota(slots.begin(), slots.end(), n - a.arity() + 1);
    return leg_map(a, slots, n);
}

} // namespace qgdef
