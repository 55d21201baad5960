#include "qgdef/wedge.hpp"

#include "qgdef/errors.hpp"
#include "qgdef/linear_solver.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace qgdef {

void WedgeElem::add_term(std::vector<int> indices, const Rational& c) {
    if (static_cast<int>(indices.size()) != degree_)
        fail(ErrorKind::Internal, "wedge term has wrong degree");
    int sign = 1;
    for (std::size_t i = 1; i < indices.size(); ++i)
        for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
            if (indices[j - 1] == indices[j])
                return;
            std::swap(indices[j - 1], indices[j]);
            sign = -sign;
        }
    terms_.add(indices, sign * c);
}

void WedgeElem::add(const WedgeElem& other, const Rational& scale) {
    if (other.is_zero())
        return;
    if (degree_ == 0 && terms_.empty())
        degree_ = other.degree_;
    if (other.degree_ != degree_)
        fail(ErrorKind::Internal, "wedge degree mismatch in addition");
    terms_.add(other.terms_, scale);
}

WedgeElem wedge_product(const WedgeElem& a, const WedgeElem& b) {
    WedgeElem out(a.degree() + b.degree());
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            std::vector<int> idx(ia);
            idx.insert(idx.end(), ib.begin(), ib.end());
            out.add_term(idx, ca * cb);
        }
    return out;
}

namespace {

// Expands Π_l image(i_l) multilinearly.
WedgeElem apply_factorwise(const WedgeElem& w, const std::function<SparseVec(int)>& image) {
    WedgeElem out(w.degree());
    for (const auto& [idx, c] : w.terms()) {
        std::vector<SparseVec> imgs;
        for (int i : idx)
            imgs.push_back(image(i));
        std::vector<int> cur(idx.size());
        std::function<void(std::size_t, Rational)> rec = [&](std::size_t l, Rational coef) {
            if (l == idx.size()) {
                out.add_term(cur, coef);
                return;
            }
            for (const auto& [k, v] : imgs[l]) {
                cur[l] = k;
                rec(l + 1, coef * v);
            }
        };
        rec(0, c);
    }
    return out;
}

std::vector<std::vector<int>> all_tuples(int dim, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < dim; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

struct WedgeCoords {
    std::vector<std::vector<int>> tuples;
    std::map<std::vector<int>, int> index;
    WedgeCoords(int dim, int k) : tuples(all_tuples(dim, k)) {
        for (int i = 0; i < static_cast<int>(tuples.size()); ++i)
            index[tuples[i]] = i;
    }
    std::vector<Rational> vec(const WedgeElem& w) const {
        std::vector<Rational> v(tuples.size());
        for (const auto& [idx, c] : w.terms())
            v[index.at(idx)] = c;
        return v;
    }
    WedgeElem elem(int k, const std::vector<Rational>& v) const {
        WedgeElem w(k);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (sgn(v[i]) != 0)
                w.add_term(tuples[i], v[i]);
        return w;
    }
};

} // namespace

WedgeElem wedge_from_gvector(const GVector& x) {
    WedgeElem w(1);
    for (int i = 0; i < static_cast<int>(x.coords.size()); ++i)
        if (sgn(x.coords[i]) != 0)
            w.add_term({i}, x.coords[i]);
    return w;
}

WedgeElem wedge_theta(const LieAlgebra& L, const WedgeElem& w) {
    const auto& cd = L.cartan();
    return apply_factorwise(w, [&](int i) { return cd.theta[i]; });
}

WedgeElem wedge_ad(const LieAlgebra& L, const GVector& x, const WedgeElem& w) {
    WedgeElem out(w.degree());
    for (const auto& [idx, c] : w.terms())
        for (std::size_t l = 0; l < idx.size(); ++l)
            for (int a = 0; a < L.dim(); ++a) {
                if (sgn(x.coords[a]) == 0)
                    continue;
                for (const auto& [k, v] : L.bracket(a, idx[l])) {
                    std::vector<int> t(idx);
                    t[l] = k;
                    out.add_term(t, c * x.coords[a] * v);
                }
            }
    return out;
}

bool wedge_invariant(const LieAlgebra& L, const WedgeElem& w) {
    for (int i = 0; i < L.dim(); ++i)
        if (!wedge_ad(L, L.basis_vector(i), w).is_zero())
            return false;
    return true;
}

bool wedge_weight_zero(const LieAlgebra& L, const WedgeElem& w) {
    const auto& cd = L.cartan();
    for (const auto& [idx, c] : w.terms()) {
        std::vector<Rational> wt(cd.h_indices.size());
        for (int i : idx)
            for (std::size_t a = 0; a < wt.size(); ++a)
                wt[a] += cd.basis_weight[i][a];
        for (const auto& q : wt)
            if (sgn(q) != 0)
                return false;
    }
    return true;
}

WedgeElem schouten(const LieAlgebra& L, const WedgeElem& a, const WedgeElem& b) {
    const int k = a.degree(), l = b.degree();
    WedgeElem out(std::max(k + l - 1, 0));
    if (k == 0 || l == 0)
        return out;
    for (const auto& [X, ca] : a.terms())
        for (const auto& [Y, cb] : b.terms())
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < l; ++j) {
                    const auto& br = L.bracket(X[i], Y[j]);
                    if (br.empty())
                        continue;
                    std::vector<int> rest;
                    for (int p = 0; p < k; ++p)
                        if (p != i)
                            rest.push_back(X[p]);
                    for (int q = 0; q < l; ++q)
                        if (q != j)
                            rest.push_back(Y[q]);
                    Rational sign = (i + j) % 2 == 0 ? 1 : -1;
                    for (const auto& [m, v] : br) {
                        std::vector<int> t{m};
                        t.insert(t.end(), rest.begin(), rest.end());
                        out.add_term(t, sign * ca * cb * v);
                    }
                }
    return out;
}

namespace {

struct Legs3 {
    TensorPoly p12, p13, p23;
};

Legs3 legs3(const WedgeElem& w, int dim) {
    TensorPoly t = embed_wedge(w, dim);
    return {leg_map(t, {1, 2}, 3), leg_map(t, {1, 3}, 3), leg_map(t, {2, 3}, 3)};
}

TensorPoly commutator(const Uea& U, const TensorPoly& a, const TensorPoly& b) {
    TensorPoly out = tensor_mul(U, a, b);
    out.add(tensor_mul(U, b, a), -1);
    return out;
}

TensorPoly sum(TensorPoly a, const TensorPoly& b) {
    a.add(b);
    return a;
}

} // namespace

TensorPoly yang_baxter(const Uea& U, const WedgeElem& f) {
    auto F = legs3(f, U.dim());
    TensorPoly out = commutator(U, F.p12, sum(F.p13, F.p23));
    out.add(commutator(U, F.p13, F.p23));
    return out;
}

TensorPoly yb_polarized(const Uea& U, const WedgeElem& f, const WedgeElem& chi) {
    auto F = legs3(f, U.dim());
    auto C = legs3(chi, U.dim());
    TensorPoly out = commutator(U, F.p12, sum(C.p13, C.p23));
    out.add(commutator(U, F.p13, C.p23));
    out.add(commutator(U, C.p12, sum(F.p13, F.p23)));
    out.add(commutator(U, C.p13, F.p23));
    return out;
}

TensorPoly twist_quadratic_term(const Uea& U, const WedgeElem& f, const WedgeElem& chi) {
    auto F = legs3(f, U.dim());
    auto C = legs3(chi, U.dim());
    TensorPoly out = tensor_mul(U, F.p23, sum(C.p12, C.p13));
    out.add(tensor_mul(U, C.p23, sum(F.p12, F.p13)));
    out.add(tensor_mul(U, F.p12, sum(C.p13, C.p23)), -1);
    out.add(tensor_mul(U, C.p12, sum(F.p13, F.p23)), -1);
    return out;
}

DualBracket dual_bracket(const LieAlgebra& L, const WedgeElem& f) {
    const int n = L.dim();
    std::vector<std::vector<std::vector<Rational>>> dense(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
    for (int k = 0; k < n; ++k) {
        WedgeElem a = wedge_ad(L, L.basis_vector(k), f);
        for (const auto& [idx, c] : a.terms()) {
            dense[idx[0]][idx[1]][k] += c;
            dense[idx[1]][idx[0]][k] -= c;
        }
    }
    DualBracket db;
    db.table.assign(n, std::vector<SparseVec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (sgn(dense[i][j][k]) != 0)
                    db.table[i][j].emplace_back(k, dense[i][j][k]);
    db.jacobi_failure = jacobi_violation(db.table);
    return db;
}

WedgeElem ce_differential(const LieAlgebra& L, const WedgeElem& f, const WedgeElem& u) {
    return schouten(L, f, u);
}

std::vector<WedgeElem> wedge_sector_basis(const LieAlgebra& L, int k, const CeSector& sector) {
    WedgeCoords coords(L.dim(), k);
    DenseMatrix rows;
    for (const auto& t : coords.tuples) {
        WedgeElem w(k);
        w.add_term(t, 1);
        if (sector.h_invariant && L.has_cartan() && !wedge_weight_zero(L, w))
            continue;
        if (sector.theta_prime) {
            WedgeElem th = wedge_theta(L, w);
            Rational s = Rational(*sector.theta_prime) * (k % 2 == 0 ? 1 : -1);
            w.add(th, s);
            w.scale(Rational(1, 2));
        }
        if (!w.is_zero())
            rows.push_back(coords.vec(w));
    }
    std::vector<WedgeElem> basis;
    if (rows.empty())
        return basis;
    rref(rows);
    for (const auto& r : rows) {
        WedgeElem w = coords.elem(k, r);
        if (!w.is_zero())
            basis.push_back(std::move(w));
    }
    return basis;
}

H3Report h3_invariant_test(const LieAlgebra& L, const WedgeElem& f, const CeSector& sector) {
    if (f.degree() != 2)
        fail(ErrorKind::Config, "r-matrix must have wedge degree 2");
    DualBracket db = dual_bracket(L, f);
    if (!db.satisfies_jacobi())
        fail(ErrorKind::Precondition, "dual bracket of f violates Jacobi (YB(f) is not g-invariant)");
    H3Report rep;
    auto V2 = wedge_sector_basis(L, 2, sector);
    auto V3 = wedge_sector_basis(L, 3, sector);
    auto V4 = wedge_sector_basis(L, 4, sector);
    rep.dim_c2 = static_cast<int>(V2.size());
    rep.dim_c3 = static_cast<int>(V3.size());
    rep.dim_c4 = static_cast<int>(V4.size());
    WedgeCoords c3(L.dim(), 3), c4(L.dim(), 4);

    DenseMatrix image;
    for (const auto& b : V2) {
        WedgeElem d = ce_differential(L, f, b);
        image.push_back(c3.vec(d));
    }
    rep.rank_d2 = image.empty() ? 0 : matrix_rank(image);

    // d: V3 → ∧⁴ as a matrix (rows = ∧⁴ coordinates, columns = V3 basis)
    const int n3 = rep.dim_c3;
    DenseMatrix D3(c4.tuples.size(), std::vector<Rational>(n3));
    for (int j = 0; j < n3; ++j) {
        auto v = c4.vec(ce_differential(L, f, V3[j]));
        for (std::size_t r = 0; r < v.size(); ++r)
            D3[r][j] = v[r];
    }
    auto kernel = n3 == 0 ? std::vector<std::vector<Rational>>{} : nullspace(D3, n3);
    rep.rank_d3 = n3 - static_cast<int>(kernel.size());
    rep.h3_dim = static_cast<int>(kernel.size()) - rep.rank_d2;
    check_internal(rep.h3_dim >= 0, "CE complex: image of d exceeds kernel");

    DenseMatrix span = image;
    int rank = rep.rank_d2;
    for (const auto& kv : kernel) {
        WedgeElem z(3);
        for (int j = 0; j < n3; ++j)
            if (sgn(kv[j]) != 0)
                z.add(V3[j], kv[j]);
        span.push_back(c3.vec(z));
        int r = matrix_rank(span);
        if (r > rank) {
            rank = r;
            rep.representatives.push_back(z);
        } else {
            span.pop_back();
        }
    }

    bool legs_commute = true;
    std::vector<int> used;
    for (const auto& [idx, c] : f.terms())
        used.insert(used.end(), idx.begin(), idx.end());
    for (int a : used)
        for (int b : used)
            if (!L.bracket(a, b).empty())
                legs_commute = false;
    rep.exact_exponential = legs_commute && schouten(L, f, f).is_zero();
    return rep;
}

std::optional<WedgeElem> solve_ce(const LieAlgebra& L, const WedgeElem& f, const WedgeElem& target,
                                  const CeSector& sector) {
    auto V2 = wedge_sector_basis(L, 2, sector);
    WedgeCoords c3(L.dim(), 3);
    const int n = static_cast<int>(V2.size());
    std::vector<std::vector<Rational>> cols;
    for (const auto& b : V2)
        cols.push_back(c3.vec(ce_differential(L, f, b)));
    auto rhs = c3.vec(target);
    EchelonSolver solver(n);
    for (std::size_t r = 0; r < c3.tuples.size(); ++r) {
        std::vector<std::pair<int, Rational>> entries;
        for (int j = 0; j < n; ++j)
            if (sgn(cols[j][r]) != 0)
                entries.emplace_back(j, cols[j][r]);
        solver.add_equation(make_row(std::move(entries)), rhs[r]);
    }
    if (!solver.consistent())
        return std::nullopt;
    auto x = solver.solution();
    WedgeElem chi(2);
    for (int j = 0; j < n; ++j)
        if (sgn(x[j]) != 0)
            chi.add(V2[j], x[j]);
    check_internal(ce_differential(L, f, chi) == target || (target.is_zero() && ce_differential(L, f, chi).is_zero()),
                   "CE solve did not reproduce its target");
    return chi;
}

} // namespace qgdef
