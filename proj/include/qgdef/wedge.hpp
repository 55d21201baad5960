#pragma once

#include "qgdef/lie_algebra.hpp"
#include "qgdef/tensor.hpp"
#include "qgdef/wedge_elem.hpp"

#include <optional>
#include <vector>

namespace qgdef {

WedgeElem wedge_from_gvector(const GVector& x);
// Linear map on g applied to every factor.
WedgeElem wedge_theta(const LieAlgebra& L, const WedgeElem& w);
WedgeElem wedge_ad(const LieAlgebra& L, const GVector& x, const WedgeElem& w);
bool wedge_invariant(const LieAlgebra& L, const WedgeElem& w);
bool wedge_weight_zero(const LieAlgebra& L, const WedgeElem& w);

WedgeElem schouten(const LieAlgebra& L, const WedgeElem& a, const WedgeElem& b);
TensorPoly yang_baxter(const Uea& U, const WedgeElem& f);
TensorPoly yb_polarized(const Uea& U, const WedgeElem& f, const WedgeElem& chi);
// Bilinear term b(f,χ) = f23(χ12+χ13) + χ23(f12+f13) − f12(χ13+χ23) − χ12(f13+f23).
TensorPoly twist_quadratic_term(const Uea& U, const WedgeElem& f, const WedgeElem& chi);

// Structure constants of g*_f: [x^i, x^j] = Σ_k c^{ij}_k x^k.
struct DualBracket {
    std::vector<std::vector<SparseVec>> table;
    std::optional<std::array<int, 3>> jacobi_failure;
    bool satisfies_jacobi() const { return !jacobi_failure.has_value(); }
};
DualBracket dual_bracket(const LieAlgebra& L, const WedgeElem& f);

WedgeElem ce_differential(const LieAlgebra& L, const WedgeElem& f, const WedgeElem& u);

// Sector on ∧^k: ℋ-weight zero and, optionally, θ′ = (−1)^k θ with a fixed eigenvalue.
struct CeSector {
    bool h_invariant = true;
    std::optional<int> theta_prime;
};

std::vector<WedgeElem> wedge_sector_basis(const LieAlgebra& L, int k, const CeSector& sector);

struct H3Report {
    int dim_c2 = 0, dim_c3 = 0, dim_c4 = 0;
    int rank_d2 = 0, rank_d3 = 0;
    int h3_dim = 0;
    std::vector<WedgeElem> representatives;
    // Legs of f span an abelian subalgebra and [[f,f]] = 0, so F = e^{hf} solves the twist equation.
    bool exact_exponential = false;
};
H3Report h3_invariant_test(const LieAlgebra& L, const WedgeElem& f, const CeSector& sector);

// Solves [[f,χ]] = target for χ in the given ∧² sector; nullopt if no solution.
std::optional<WedgeElem> solve_ce(const LieAlgebra& L, const WedgeElem& f, const WedgeElem& target,
                                  const CeSector& sector);

} // namespace qgdef
