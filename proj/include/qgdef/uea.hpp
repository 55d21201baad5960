#pragma once

#include "qgdef/lie_algebra.hpp"
#include "qgdef/rational.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qgdef {

// Exponent vector in the fixed basis order.
using Monomial = std::vector<std::uint8_t>;
using UEElem = LinComb<Monomial>;

struct ByteVecHash {
    std::size_t operator()(const std::vector<std::uint8_t>& v) const noexcept {
        return std::hash<std::string_view>{}(
            std::string_view(reinterpret_cast<const char*>(v.data()), v.size()));
    }
};

int degree(const Monomial& m);

// Binomial splitting Δ(x^e) = Σ_k C(e,k) x^k ⊗ x^{e−k}.
struct CoproductTerm {
    Monomial left, right;
    Rational coeff;
};
std::vector<CoproductTerm> monomial_coproduct(const Monomial& m);

// U(g) in PBW normal form together with memoized straightening tables.
class Uea {
  public:
    explicit Uea(std::shared_ptr<const LieAlgebra> algebra);

    const LieAlgebra& algebra() const { return *algebra_; }
    std::shared_ptr<const LieAlgebra> algebra_ptr() const { return algebra_; }
    int dim() const { return algebra_->dim(); }

    Monomial unit_monomial() const { return Monomial(dim(), 0); }
    UEElem one() const;
    UEElem generator(int i) const;
    UEElem from_gvector(const GVector& x) const;

    UEElem multiply(const UEElem& a, const UEElem& b) const;
    const UEElem& multiply_monomials(const Monomial& a, const Monomial& b) const;
    const UEElem& left_multiply(int i, const Monomial& m) const;

    UEElem antipode(const UEElem& a) const;
    const UEElem& antipode_monomial(const Monomial& m) const;
    static Rational counit(const UEElem& a);
    UEElem ad_action(const GVector& x, const UEElem& a) const;
    UEElem theta(const UEElem& a) const;
    const UEElem& theta_monomial(const Monomial& m) const;

    std::vector<Rational> weight(const Monomial& m) const;
    bool weight_zero(const Monomial& m) const;

    // σ(x^e): symmetrized product, written in the PBW basis.
    const UEElem& symmetrized(const Monomial& m) const;
    // Coordinates of a PBW monomial in the symmetrized basis {σ(x^e)}.
    const UEElem& sym_coordinates(const Monomial& m) const;

  private:
    using PairKey = std::vector<std::uint8_t>;
    PairKey pair_key(const Monomial& a, const Monomial& b) const;

    std::shared_ptr<const LieAlgebra> algebra_;
    std::vector<UEElem> theta_gen_;
    mutable std::recursive_mutex mutex_;
    mutable std::unordered_map<PairKey, UEElem, ByteVecHash> left_cache_;
    mutable std::unordered_map<PairKey, UEElem, ByteVecHash> mul_cache_;
    mutable std::unordered_map<Monomial, UEElem, ByteVecHash> antipode_cache_;
    mutable std::unordered_map<Monomial, UEElem, ByteVecHash> theta_cache_;
    mutable std::unordered_map<Monomial, UEElem, ByteVecHash> sym_cache_;
    mutable std::unordered_map<Monomial, UEElem, ByteVecHash> symco_cache_;
};

} // namespace qgdef
