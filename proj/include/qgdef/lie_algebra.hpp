#pragma once

#include "qgdef/rational.hpp"
#include "qgdef/wedge_elem.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qgdef {

using SparseVec = std::vector<std::pair<int, Rational>>;

struct GVector {
    std::vector<Rational> coords;
};

struct PositiveRoot {
    std::vector<Rational> weight;
    int e = -1;
    int f = -1;
};

struct CartanData {
    std::vector<int> h_indices;
    std::vector<PositiveRoot> positive_roots;
    std::vector<SparseVec> theta;                   // θ(x_i)
    std::vector<std::vector<Rational>> basis_weight; // ℋ-weight of x_i
};

class LieAlgebra {
  public:
    // Validates antisymmetry, Jacobi and the Cartan data; throws Error(Config) on failure.
    LieAlgebra(std::vector<std::string> labels, std::vector<std::vector<SparseVec>> table,
               std::optional<CartanData> cartan);

    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const SparseVec& bracket(int i, int j) const { return table_[i][j]; }
    GVector bracket(const GVector& x, const GVector& y) const;
    GVector basis_vector(int i) const;

    bool has_cartan() const { return cartan_.has_value(); }
    const CartanData& cartan() const; // Error(Precondition) "missing Cartan data"

  private:
    std::vector<std::string> labels_;
    std::vector<std::vector<SparseVec>> table_;
    std::optional<CartanData> cartan_;
};

// Returns the first basis triple violating Jacobi for a full antisymmetric table, if any.
std::optional<std::array<int, 3>> jacobi_violation(const std::vector<std::vector<SparseVec>>& table);

LieAlgebra load_lie_algebra(const nlohmann::json& doc);
LieAlgebra load_lie_algebra_file(const std::string& path);
nlohmann::json lie_algebra_to_json(const LieAlgebra& L);

std::vector<std::vector<Rational>> killing_form(const LieAlgebra& L);
WedgeElem dj_r_matrix(const LieAlgebra& L);
GVector cartan_involution(const LieAlgebra& L, const GVector& x);

} // namespace qgdef
