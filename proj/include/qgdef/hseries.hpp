#pragma once

#include "qgdef/tensor.hpp"

#include <climits>
#include <optional>
#include <vector>

namespace qgdef {

inline constexpr int kNoDegreeCap = INT_MAX;

// Σ_{k=0}^{N} a_k h^k with a_k ∈ U(g)^{⊗n}.
class HSeries {
  public:
    HSeries() = default;
    HSeries(int arity, int dim, int order, int degree_cap = kNoDegreeCap);
    static HSeries unit(int arity, int dim, int order, int degree_cap = kNoDegreeCap);
    static HSeries constant(const TensorPoly& c, int order, int degree_cap = kNoDegreeCap);

    int arity() const { return arity_; }
    int dim() const { return dim_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    int degree_cap() const { return degree_cap_; }
    void set_degree_cap(int cap) { degree_cap_ = cap; }

    const TensorPoly& coeff(int k) const { return coeffs_.at(k); }
    TensorPoly& coeff(int k) { return coeffs_.at(k); }
    void add_at(int k, const TensorPoly& t, const Rational& scale = 1) { coeffs_.at(k).add(t, scale); }
    void add(const HSeries& other, const Rational& scale = 1);
    void scale(const Rational& s);

    HSeries truncated(int order) const;
    bool is_zero() const;
    // Smallest k with a_k ≠ 0.
    std::optional<int> first_nonzero_order() const;
    bool operator==(const HSeries& o) const { return arity_ == o.arity_ && coeffs_ == o.coeffs_; }

  private:
    int arity_ = 0;
    int dim_ = 0;
    int degree_cap_ = kNoDegreeCap;
    std::vector<TensorPoly> coeffs_;
};

HSeries series_sub(const HSeries& a, const HSeries& b);
HSeries series_mul(const Uea& U, const HSeries& a, const HSeries& b);
HSeries series_inverse(const Uea& U, const HSeries& a);
HSeries series_exp(const Uea& U, const HSeries& a);

HSeries leg_map(const HSeries& a, const std::vector<int>& slots, int target_arity);
HSeries coproduct_insert(const HSeries& a, int position);
HSeries counit_leg(const HSeries& a, int position);
HSeries tau(const HSeries& a);
HSeries antipode_legs(const Uea& U, const HSeries& a);
HSeries theta_legs(const Uea& U, const HSeries& a);
HSeries flip_h(const HSeries& a);
HSeries weight_zero_part(const Uea& U, const HSeries& a);
bool is_invariant(const Uea& U, const HSeries& a);
bool is_weight_zero(const Uea& U, const HSeries& a);
// Places a ∈ U^{⊗m} into the first legs of U^{⊗n} (a ⊗ 1 ⊗ ... ⊗ 1).
HSeries pad_right(const HSeries& a, int n);
HSeries pad_left(const HSeries& a, int n);

} // namespace qgdef
