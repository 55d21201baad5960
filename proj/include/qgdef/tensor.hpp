#pragma once

#include "qgdef/uea.hpp"
#include "qgdef/wedge_elem.hpp"

#include <functional>
#include <vector>

namespace qgdef {

// Concatenated exponent vectors of all legs (arity·dim bytes).
using TensorKey = std::vector<std::uint8_t>;

// Sparse element of U(g)^{⊗n}.
class TensorPoly {
  public:
    TensorPoly() = default;
    TensorPoly(int arity, int dim) : arity_(arity), dim_(dim) {}
    static TensorPoly unit(int arity, int dim);

    int arity() const { return arity_; }
    int dim() const { return dim_; }
    const LinComb<TensorKey>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const TensorKey& key, const Rational& c) { terms_.add(key, c); }
    void add(const TensorPoly& other, const Rational& scale = 1);
    void scale(const Rational& s) { terms_.scale(s); }
    Rational coeff(const TensorKey& key) const { return terms_.coeff(key); }

    Monomial leg(const TensorKey& key, int l) const;
    std::vector<int> leg_degrees(const TensorKey& key) const;
    int max_degree() const;

    bool operator==(const TensorPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

  private:
    int arity_ = 0;
    int dim_ = 0;
    LinComb<TensorKey> terms_;
};

TensorPoly make_key_tensor(int arity, int dim, const TensorKey& key, const Rational& c);
TensorKey concat_legs(const std::vector<Monomial>& legs);

// Applies a per-leg linear map given on monomials and expands the tensor product.
void expand_legwise(const TensorPoly& a, const std::function<const UEElem&(int, const Monomial&)>& per_leg,
                    TensorPoly& out, const Rational& scale = 1);

TensorPoly embed(const UEElem& a, int dim);
TensorPoly coproduct(const UEElem& a, int dim);
TensorPoly tensor_mul(const Uea& U, const TensorPoly& a, const TensorPoly& b);
TensorPoly tensor_outer(const TensorPoly& a, const TensorPoly& b);
// slots are 1-based; leg i goes to slot slots[i-1].
TensorPoly leg_map(const TensorPoly& a, const std::vector<int>& slots, int target_arity);
TensorPoly permute_legs(const TensorPoly& a, const std::vector<int>& slots);
TensorPoly coproduct_insert(const TensorPoly& a, int position);
TensorPoly counit_leg(const TensorPoly& a, int position);
TensorPoly tau(const TensorPoly& a);
TensorPoly antipode_legs(const Uea& U, const TensorPoly& a);
TensorPoly theta_legs(const Uea& U, const TensorPoly& a);
TensorPoly ad_legs(const Uea& U, const GVector& x, const TensorPoly& a);
// Per-generator exponent counts summed over legs.
Monomial content(const TensorKey& key, int dim);
bool is_invariant(const Uea& U, const TensorPoly& a);
bool is_weight_zero(const Uea& U, const TensorPoly& a);
TensorPoly weight_zero_part(const Uea& U, const TensorPoly& a);

// PBW ↔ symmetrized-basis coordinates, leg by leg.
TensorPoly to_sym(const Uea& U, const TensorPoly& a);
TensorPoly from_sym(const Uea& U, const TensorPoly& a);

// Wedge embedding ι_k = c_k Σ_σ sign(σ) x_σ with c_k = 2^{-k(k-1)/2}.
Rational wedge_embedding_factor(int k);
TensorPoly embed_wedge(const WedgeElem& w, int dim);

} // namespace qgdef
