#pragma once

#include "qgdef/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qgdef {

using SparseRow = std::vector<std::pair<int, Rational>>; // sorted by column, no zeros

// Incremental sparse row echelon form over Q. Lower column index = higher pivot priority.
class EchelonSolver {
  public:
    explicit EchelonSolver(int num_columns);

    // Returns false once the system has become inconsistent.
    bool add_equation(SparseRow row, Rational rhs);
    bool consistent() const { return consistent_; }
    int rank() const { return rank_; }
    int num_columns() const { return static_cast<int>(pivots_.size()); }
    // Free variables are set to zero.
    std::vector<Rational> solution() const;

  private:
    struct Row {
        SparseRow entries;
        Rational rhs;
    };
    std::vector<std::optional<Row>> pivots_;
    int rank_ = 0;
    bool consistent_ = true;
};

SparseRow make_row(std::vector<std::pair<int, Rational>> entries);

using DenseMatrix = std::vector<std::vector<Rational>>;

// Reduces in place; returns pivot columns.
std::vector<int> rref(DenseMatrix& m);
int matrix_rank(DenseMatrix m);
// Basis of {x : m x = 0}, with `cols` columns.
std::vector<std::vector<Rational>> nullspace(DenseMatrix m, int cols);

} // namespace qgdef
