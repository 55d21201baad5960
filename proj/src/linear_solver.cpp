#include "qgdef/linear_solver.hpp"

#include <algorithm>
#include <map>

namespace qgdef {

namespace {

// a − s·b on sorted sparse rows.
SparseRow axpy(const SparseRow& a, const Rational& s, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -s * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second - s * b[j].second;
            if (sgn(v) != 0)
                out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

SparseRow make_row(std::vector<std::pair<int, Rational>> entries) {
    std::map<int, Rational> acc;
    for (auto& [c, v] : entries)
        acc[c] += v;
    SparseRow row;
    for (auto& [c, v] : acc)
        if (sgn(v) != 0)
            row.emplace_back(c, v);
    return row;
}

EchelonSolver::EchelonSolver(int num_columns) : pivots_(num_columns) {}

bool EchelonSolver::add_equation(SparseRow row, Rational rhs) {
    while (!row.empty()) {
        int c = row.front().first;
        auto& p = pivots_[c];
        if (!p) {
            Rational inv = 1 / row.front().second;
            for (auto& e : row)
                e.second *= inv;
            rhs *= inv;
            p = Row{std::move(row), std::move(rhs)};
            ++rank_;
            return consistent_;
        }
        Rational s = row.front().second;
        row = axpy(row, s, p->entries);
        rhs -= s * p->rhs;
    }
    if (sgn(rhs) != 0)
        consistent_ = false;
    return consistent_;
}

std::vector<Rational> EchelonSolver::solution() const {
    std::vector<Rational> x(pivots_.size());
    for (int c = static_cast<int>(pivots_.size()) - 1; c >= 0; --c) {
        if (!pivots_[c])
            continue;
        Rational v = pivots_[c]->rhs;
        for (std::size_t k = 1; k < pivots_[c]->entries.size(); ++k) {
            const auto& [col, coef] = pivots_[c]->entries[k];
            if (sgn(x[col]) != 0)
                v -= coef * x[col];
        }
        x[c] = v;
    }
    return x;
}

std::vector<int> rref(DenseMatrix& m) {
    std::vector<int> pivots;
    if (m.empty())
        return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && sgn(m[p][c]) == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& v : m[r])
            v *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0)
                continue;
            Rational s = m[i][c];
            for (int j = c; j < cols; ++j)
                m[i][j] -= s * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int matrix_rank(DenseMatrix m) {
    return static_cast<int>(rref(m).size());
}

std::vector<std::vector<Rational>> nullspace(DenseMatrix m, int cols) {
    std::vector<std::vector<Rational>> basis;
    std::vector<int> piv = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : piv)
        is_pivot[c] = true;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace qgdef
