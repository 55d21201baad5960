#include "qgdef/cohomology.hpp"

#include "qgdef/errors.hpp"
#include "qgdef/linear_solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace qgdef {

namespace {

int perm_sign(std::vector<int> p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[p[i]]);
            s = -s;
        }
    return s;
}

TensorPoly insert_unit(const TensorPoly& u, int slot) {
    // slot is 0-based position of the new unit leg
    std::vector<int> slots(u.arity());
    for (int l = 0; l < u.arity(); ++l)
        slots[l] = l < slot ? l + 1 : l + 2;
    return leg_map(u, slots, u.arity() + 1);
}

// Operators in the symmetrized basis, where S, θ and ad act as on the symmetric algebra.
class SymOps {
  public:
    explicit SymOps(const Uea& U) : U_(U), dim_(U.dim()) {}

    const UEElem& theta_mono(const Monomial& m) {
        if (auto it = theta_.find(m); it != theta_.end())
            return it->second;
        UEElem out;
        int k = 0;
        while (k < dim_ && m[k] == 0)
            ++k;
        if (k == dim_) {
            out.add(m, 1);
        } else {
            Monomial rest = m;
            --rest[k];
            UEElem r = theta_mono(rest);
            for (const auto& [j, c] : U_.algebra().cartan().theta[k])
                for (const auto& [mono, v] : r) {
                    Monomial t = mono;
                    ++t[j];
                    out.add(t, c * v);
                }
        }
        return theta_.emplace(m, std::move(out)).first->second;
    }

    UEElem ad_mono(int a, const Monomial& m) const {
        UEElem out;
        for (int i = 0; i < dim_; ++i) {
            if (m[i] == 0)
                continue;
            for (const auto& [k, c] : U_.algebra().bracket(a, i)) {
                Monomial t = m;
                --t[i];
                ++t[k];
                out.add(t, c * m[i]);
            }
        }
        return out;
    }

    TensorPoly theta_key(const TensorKey& key, int arity) {
        TensorPoly in = make_key_tensor(arity, dim_, key, 1), out(arity, dim_);
        expand_legwise(in, [&](int, const Monomial& m) -> const UEElem& { return theta_mono(m); }, out);
        return out;
    }

    TensorPoly ad_key(int a, const TensorKey& key, int arity) const {
        TensorPoly out(arity, dim_);
        for (int l = 0; l < arity; ++l) {
            Monomial m(key.begin() + static_cast<std::ptrdiff_t>(l) * dim_, key.begin() + static_cast<std::ptrdiff_t>(l + 1) * dim_);
            for (const auto& [t, c] : ad_mono(a, m)) {
                TensorKey k = key;
                std::copy(t.begin(), t.end(), k.begin() + static_cast<std::ptrdiff_t>(l) * dim_);
                out.add_term(k, c);
            }
        }
        return out;
    }

    static int antipode_sign(const TensorKey& key) {
        int d = 0;
        for (auto e : key)
            d += e;
        return d % 2 == 0 ? 1 : -1;
    }

    std::pair<TensorKey, int> tau_key(const TensorKey& key, int arity) const {
        TensorKey k(key.size());
        for (int l = 0; l < arity; ++l)
            std::copy(key.begin() + static_cast<std::ptrdiff_t>(l) * dim_, key.begin() + static_cast<std::ptrdiff_t>(l + 1) * dim_,
                      k.begin() + static_cast<std::ptrdiff_t>(arity - 1 - l) * dim_);
        return {k, (arity * (arity + 1) / 2) % 2 == 0 ? 1 : -1};
    }

  private:
    const Uea& U_;
    int dim_;
    std::map<Monomial, UEElem> theta_;
};

std::vector<Monomial> monomials_of_degree(int dim, int d) {
    std::vector<Monomial> out;
    Monomial cur(dim, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == dim - 1) {
            cur[i] = static_cast<std::uint8_t>(left);
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[i] = static_cast<std::uint8_t>(e);
            rec(i + 1, left - e);
        }
        cur[i] = 0;
    };
    if (dim > 0)
        rec(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

// All tensor keys of the given arity whose leg-wise sum is the content c.
std::vector<TensorKey> keys_with_content(const Monomial& c, int arity) {
    const int dim = static_cast<int>(c.size());
    std::vector<TensorKey> out;
    TensorKey key(static_cast<std::size_t>(arity) * dim, 0);
    std::function<void(int, int, int)> rec = [&](int i, int l, int left) {
        if (i == dim) {
            out.push_back(key);
            return;
        }
        if (l == arity - 1) {
            key[static_cast<std::size_t>(l) * dim + i] = static_cast<std::uint8_t>(left);
            rec(i + 1, 0, c[i < dim - 1 ? i + 1 : i]);
            key[static_cast<std::size_t>(l) * dim + i] = 0;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            key[static_cast<std::size_t>(l) * dim + i] = static_cast<std::uint8_t>(e);
            rec(i, l + 1, left - e);
        }
        key[static_cast<std::size_t>(l) * dim + i] = 0;
    };
    rec(0, 0, c[0]);
    std::sort(out.begin(), out.end());
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

TensorPoly apply_coboundary(const TensorPoly& x, Coboundary d) {
    if (d == Coboundary::Cartier)
        return delta(x);
    TensorPoly out = delta_partial(x, x.arity() - 1);
    out.scale(-1);
    return out;
}

bool is_cocycle(const TensorPoly& t, Coboundary d) {
    if (d == Coboundary::Cartier)
        return delta(t).is_zero();
    return delta_partial(t, t.arity() - 1).is_zero();
}

// Row builder keyed by output tensor key.
struct RowMap {
    std::map<TensorKey, std::vector<std::pair<int, Rational>>> rows;
    void add(const TensorPoly& image, int col, const Rational& scale = 1) {
        for (const auto& [k, c] : image)
            rows[k].emplace_back(col, c * scale);
    }
};

} // namespace

TensorPoly delta(const TensorPoly& u) {
    return delta_partial(u, u.arity());
}

TensorPoly delta_partial(const TensorPoly& u, int k) {
    if (k < 0 || k > u.arity())
        fail(ErrorKind::Internal, "delta_partial: leg count out of range");
    TensorPoly out = insert_unit(u, 0);
    for (int i = 1; i <= k; ++i)
        out.add(coproduct_insert(u, i), i % 2 == 0 ? 1 : -1);
    out.add(insert_unit(u, k), (k + 1) % 2 == 0 ? 1 : -1);
    return out;
}

TensorPoly delta_prime(const TensorPoly& r) {
    if (r.arity() != 2)
        fail(ErrorKind::Internal, "delta_prime expects arity 2");
    TensorPoly out = coproduct_insert(r, 1);
    out.add(leg_map(r, {1, 3}, 3), -1);
    out.add(leg_map(r, {2, 3}, 3), -1);
    return out;
}

TensorPoly alt(const TensorPoly& u) {
    const int n = u.arity();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    TensorPoly out(n, u.dim());
    mpz_class fact = 1;
    for (int i = 2; i <= n; ++i)
        fact *= i;
    do {
        std::vector<int> slots(n);
        for (int l = 0; l < n; ++l)
            slots[l] = p[l] + 1;
        out.add(permute_legs(u, slots), perm_sign(p));
    } while (std::next_permutation(p.begin(), p.end()));
    out.scale(Rational(mpz_class(1), fact));
    return out;
}

WedgeElem extract_wedge(const TensorPoly& u) {
    const int n = u.arity();
    const int dim = u.dim();
    WedgeElem w(n);
    const Rational inv = 1 / wedge_embedding_factor(n);
    for (const auto& [key, c] : u) {
        auto deg = u.leg_degrees(key);
        if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 1; }))
            fail(ErrorKind::Internal, "alternating part has a component outside leg degree (1,...,1)");
        std::vector<int> idx(n);
        for (int l = 0; l < n; ++l)
            for (int i = 0; i < dim; ++i)
                if (key[static_cast<std::size_t>(l) * dim + i])
                    idx[l] = i;
        if (std::is_sorted(idx.begin(), idx.end()) && std::adjacent_find(idx.begin(), idx.end()) == idx.end())
            w.add_term(idx, c * inv);
    }
    if (!(embed_wedge(w, dim) == u))
        fail(ErrorKind::Internal, "tensor is not alternating; cannot read it as a wedge");
    return w;
}

bool in_sector(const Uea& U, const TensorPoly& u, const SectorSpec& s) {
    auto eig = [&](const TensorPoly& image, int lambda) {
        TensorPoly d = image;
        d.add(u, -lambda);
        return d.is_zero();
    };
    if (s.tau && !eig(tau(u), *s.tau))
        return false;
    if (s.antipode && !eig(antipode_legs(U, u), *s.antipode))
        return false;
    if (s.theta && !eig(theta_legs(U, u), *s.theta))
        return false;
    if (s.weight_zero && !is_weight_zero(U, u))
        return false;
    if (s.invariant && !is_invariant(U, u))
        return false;
    return true;
}

TensorPoly restrict_sector(const Uea& U, const TensorPoly& u, const SectorSpec& s) {
    if (s.invariant)
        fail(ErrorKind::Config, "g-invariance is not a projector sector; use solve constraints instead");
    using Op = std::function<TensorPoly(const TensorPoly&)>;
    std::vector<Op> ops;
    auto proj = [](std::function<TensorPoly(const TensorPoly&)> op, int lambda) {
        return [op, lambda](const TensorPoly& x) {
            TensorPoly y = x;
            y.add(op(x), lambda);
            y.scale(Rational(1, 2));
            return y;
        };
    };
    if (s.weight_zero)
        ops.push_back([&](const TensorPoly& x) { return weight_zero_part(U, x); });
    if (s.tau)
        ops.push_back(proj([](const TensorPoly& x) { return tau(x); }, *s.tau));
    if (s.antipode)
        ops.push_back(proj([&](const TensorPoly& x) { return antipode_legs(U, x); }, *s.antipode));
    if (s.theta)
        ops.push_back(proj([&](const TensorPoly& x) { return theta_legs(U, x); }, *s.theta));
    TensorPoly fwd = u, bwd = u;
    for (const auto& op : ops)
        fwd = op(fwd);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
        bwd = (*it)(bwd);
    if (!(fwd == bwd))
        fail(ErrorKind::Internal, "requested sector projections do not commute");
    return fwd;
}

SolveReport solve_cobounding(const Uea& U, const TensorPoly& target, Coboundary d, const SectorSpec& sectors,
                             const SolveOptions& options) {
    const int n = target.arity();
    const int m = n - 1;
    const int dim = U.dim();
    if (m < 1 || (d == Coboundary::Frozen && m < 2))
        fail(ErrorKind::Internal, "solve_cobounding: target arity too small");
    SolveReport report;
    report.residual_class = WedgeElem(n);
    if (!is_cocycle(target, d))
        fail(ErrorKind::Internal, "solve_cobounding: target is not a cocycle");
    if (target.max_degree() > options.degree_cap)
        fail(ErrorKind::Config, "degree cap " + std::to_string(options.degree_cap) + " too small for target of degree " +
                                    std::to_string(target.max_degree()));
    const bool have_cartan = U.algebra().has_cartan();
    if (sectors.weight_zero && have_cartan && !is_weight_zero(U, target))
        fail(ErrorKind::Internal, "solve_cobounding: target has nonzero weight");
    if (target.is_zero()) {
        report.solution = TensorPoly(m, dim);
        return report;
    }

    SymOps ops(U);
    TensorPoly tsym = to_sym(U, target);

    // Contents present in the target, grouped by total degree.
    std::map<int, std::vector<Monomial>> target_contents;
    {
        std::map<Monomial, bool> seen;
        for (const auto& [k, c] : tsym) {
            Monomial ct = content(k, dim);
            if (!seen[ct]) {
                seen[ct] = true;
                target_contents[degree(ct)].push_back(ct);
            }
        }
    }

    TensorPoly xsym(m, dim);
    for (const auto& [deg, tcs] : target_contents) {
        // Candidate unknown contents and their coupling through θ and ad.
        std::vector<Monomial> cands;
        const bool mixing = sectors.theta.has_value() || sectors.invariant;
        if (mixing) {
            for (auto& c : monomials_of_degree(dim, deg))
                if (!(sectors.weight_zero && have_cartan) || U.weight_zero(c))
                    cands.push_back(c);
        } else {
            cands = tcs;
            std::sort(cands.begin(), cands.end());
        }
        std::map<Monomial, int> cidx;
        for (int i = 0; i < static_cast<int>(cands.size()); ++i)
            cidx[cands[i]] = i;
        UnionFind uf(static_cast<int>(cands.size()));
        if (mixing) {
            std::map<std::pair<int, Monomial>, int> ad_owner;
            for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
                const Monomial& c = cands[i];
                if (sectors.theta)
                    for (const auto& [t, v] : ops.theta_mono(c))
                        if (auto it = cidx.find(t); it != cidx.end())
                            uf.unite(i, it->second);
                if (sectors.invariant)
                    for (int a = 0; a < dim; ++a)
                        for (const auto& [t, v] : ops.ad_mono(a, c)) {
                            auto [it, ins] = ad_owner.try_emplace({a, t}, i);
                            if (!ins)
                                uf.unite(i, it->second);
                        }
            }
        }
        std::map<int, std::vector<Monomial>> blocks;
        for (const auto& tc : tcs) {
            auto it = cidx.find(tc);
            if (it == cidx.end())
                fail(ErrorKind::Internal, "solve_cobounding: target content outside the admissible sector");
            int root = uf.find(it->second);
            if (blocks.count(root))
                continue;
            for (int i = 0; i < static_cast<int>(cands.size()); ++i)
                if (uf.find(i) == root)
                    blocks[root].push_back(cands[i]);
        }

        for (auto& [root, contents] : blocks) {
            std::vector<TensorKey> cols;
            for (const auto& c : contents)
                for (auto& k : keys_with_content(c, m))
                    cols.push_back(std::move(k));
            std::sort(cols.begin(), cols.end());
            if (options.pivot == PivotOrder::Reversed)
                std::reverse(cols.begin(), cols.end());
            std::map<TensorKey, int> col_of;
            for (int i = 0; i < static_cast<int>(cols.size()); ++i)
                col_of[cols[i]] = i;
            std::map<Monomial, bool> in_block;
            for (const auto& c : contents)
                in_block[c] = true;

            EchelonSolver solver(static_cast<int>(cols.size()));
            int equations = 0;
            auto push = [&](std::vector<std::pair<int, Rational>> entries, const Rational& rhs) {
                ++equations;
                solver.add_equation(make_row(std::move(entries)), rhs);
            };

            RowMap cob;
            for (int i = 0; i < static_cast<int>(cols.size()); ++i)
                cob.add(apply_coboundary(make_key_tensor(m, dim, cols[i], 1), d), i);
            for (const auto& [k, c] : tsym)
                if (in_block.count(content(k, dim)))
                    cob.rows[k];
            for (auto& [k, entries] : cob.rows)
                push(std::move(entries), tsym.coeff(k));

            for (int i = 0; i < static_cast<int>(cols.size()); ++i) {
                const auto& key = cols[i];
                if (sectors.tau) {
                    auto [k2, s] = ops.tau_key(key, m);
                    push({{col_of.at(k2), Rational(s)}, {i, Rational(-*sectors.tau)}}, 0);
                }
                if (sectors.antipode && SymOps::antipode_sign(key) != *sectors.antipode)
                    push({{i, Rational(1)}}, 0);
            }
            auto linear_constraint = [&](const std::function<TensorPoly(const TensorKey&)>& op, std::optional<int> lambda) {
                RowMap rm;
                for (int i = 0; i < static_cast<int>(cols.size()); ++i) {
                    TensorPoly img = op(cols[i]);
                    if (lambda)
                        img.add_term(cols[i], -*lambda);
                    rm.add(img, i);
                }
                for (auto& [k, entries] : rm.rows) {
                    if (lambda && !col_of.count(k))
                        fail(ErrorKind::Internal, "sector operator leaves the block");
                    push(std::move(entries), 0);
                }
            };
            if (sectors.theta)
                linear_constraint([&](const TensorKey& k) { return ops.theta_key(k, m); }, sectors.theta);
            if (sectors.invariant)
                for (int a = 0; a < dim; ++a)
                    linear_constraint([&](const TensorKey& k) { return ops.ad_key(a, k, m); }, std::nullopt);

            if (options.normalize) {
                for (int i = 0; i < static_cast<int>(cols.size()); ++i) {
                    TensorPoly probe = make_key_tensor(m, dim, cols[i], 1);
                    auto degs = probe.leg_degrees(cols[i]);
                    if (d == Coboundary::Frozen) {
                        if (degs == std::vector<int>{1, 1})
                            push({{i, Rational(1)}}, 0);
                        continue;
                    }
                    if (std::any_of(degs.begin(), degs.end(), [](int x) { return x != 1; }))
                        continue;
                    std::vector<int> idx(m);
                    for (int l = 0; l < m; ++l)
                        for (int a = 0; a < dim; ++a)
                            if (cols[i][static_cast<std::size_t>(l) * dim + a])
                                idx[l] = a;
                    if (!std::is_sorted(idx.begin(), idx.end()) || std::adjacent_find(idx.begin(), idx.end()) != idx.end())
                        continue;
                    TensorPoly a = alt(probe);
                    std::vector<std::pair<int, Rational>> entries;
                    for (const auto& [k, c] : a)
                        entries.emplace_back(col_of.at(k), c);
                    push(std::move(entries), 0);
                }
            }

            report.blocks.push_back({deg, static_cast<int>(cols.size()), equations, solver.rank()});
            report.pivots += solver.rank();
            if (!solver.consistent()) {
                report.solution.reset();
                TensorPoly a = alt(target);
                report.residual_class = extract_wedge(a);
                return report;
            }
            auto x = solver.solution();
            for (int i = 0; i < static_cast<int>(cols.size()); ++i)
                if (sgn(x[i]) != 0)
                    xsym.add_term(cols[i], x[i]);
        }
    }

    TensorPoly x = from_sym(U, xsym);
    check_internal(apply_coboundary(x, d) == target, "solve_cobounding: solution does not reproduce the target");
    check_internal(in_sector(U, x, sectors), "solve_cobounding: solution left the requested sector");
    report.solution = std::move(x);
    return report;
}

std::vector<CohomologyEntry> cohomology_report(const Uea& U, int max_arity, int degree_cap, bool invariant) {
    const int dim = U.dim();
    const bool wz = U.algebra().has_cartan();
    SymOps ops(U);
    // nullities[n][d] = (dim invariant cochains, dim invariant cocycles)
    std::vector<CohomologyEntry> out;
    std::map<std::pair<int, int>, std::pair<int, int>> dims;
    for (int n = 1; n <= max_arity; ++n)
        for (int d = 0; d <= degree_cap; ++d) {
            std::vector<TensorKey> cols;
            for (const auto& c : monomials_of_degree(dim, d)) {
                if (wz && !U.weight_zero(c))
                    continue;
                for (auto& k : keys_with_content(c, n))
                    cols.push_back(std::move(k));
            }
            std::sort(cols.begin(), cols.end());
            const int ncols = static_cast<int>(cols.size());
            EchelonSolver inv_only(ncols), with_delta(ncols);
            if (invariant)
                for (int a = 0; a < dim; ++a) {
                    RowMap rm;
                    for (int i = 0; i < ncols; ++i)
                        rm.add(ops.ad_key(a, cols[i], n), i);
                    for (auto& [k, e] : rm.rows) {
                        inv_only.add_equation(make_row(e), 0);
                        with_delta.add_equation(make_row(std::move(e)), 0);
                    }
                }
            RowMap rm;
            for (int i = 0; i < ncols; ++i)
                rm.add(delta(make_key_tensor(n, dim, cols[i], 1)), i);
            for (auto& [k, e] : rm.rows)
                with_delta.add_equation(make_row(std::move(e)), 0);
            dims[{n, d}] = {ncols - inv_only.rank(), ncols - with_delta.rank()};
        }
    for (int n = 1; n <= max_arity; ++n)
        for (int d = 0; d <= degree_cap; ++d) {
            CohomologyEntry e;
            e.arity = n;
            e.degree = d;
            e.cochains = dims[{n, d}].first;
            e.cocycles = dims[{n, d}].second;
            if (n == 1) {
                e.coboundaries = 0;
            } else {
                auto prev = dims[{n - 1, d}];
                e.coboundaries = prev.first - prev.second;
            }
            e.dimension = e.cocycles - e.coboundaries;
            out.push_back(e);
        }
    return out;
}

} // namespace qgdef
