#include "internal/solver_common.hpp"
#include "qgdef/identities.hpp"
#include "qgdef/linear_solver.hpp"

namespace qgdef {

namespace {

TensorPoly scaled(TensorPoly t, const Rational& s) {
    t.scale(s);
    return t;
}

} // namespace

TensorPoly casimir_tensor(const Uea& U) {
    const LieAlgebra& L = U.algebra();
    const int dim = U.dim();
    auto K = killing_form(L);
    DenseMatrix aug(dim, std::vector<Rational>(2 * dim));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j)
            aug[i][j] = K[i][j];
        aug[i][dim + i] = 1;
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < dim || piv[dim - 1] >= dim)
        fail(ErrorKind::Precondition, "Killing form is degenerate");
    TensorPoly t(2, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (sgn(aug[i][dim + j]) == 0)
                continue;
            TensorKey key(2 * static_cast<std::size_t>(dim), 0);
            key[i] = 1;
            key[dim + j] = 1;
            t.add_term(key, aug[i][dim + j]);
        }
    return t;
}

QTResult solve_quasitriangular(const Uea& U, const TensorPoly& t, int N, const QTOptions& options) {
    using detail::require;
    const int dim = U.dim();
    const bool cartan = U.algebra().has_cartan();
    if (N < 1)
        fail(ErrorKind::Config, "order must be at least 1");
    if (t.arity() != 2)
        fail(ErrorKind::Config, "t must be a 2-tensor");
    for (const auto& [k, c] : t)
        if (t.leg_degrees(k) != std::vector<int>{1, 1})
            fail(ErrorKind::Config, "t must lie in g (x) g");
    if (!(leg_map(t, {2, 1}, 2) == t))
        fail(ErrorKind::Precondition, "t is not symmetric");
    if (!is_invariant(U, t))
        fail(ErrorKind::Precondition, "t is not invariant");
    if (options.theta && !(theta_legs(U, t) == t))
        fail(ErrorKind::Precondition, "theta does not preserve t");

    const int cap = detail::resolve_cap(options.degree_cap, N);
    QTResult out;
    out.t = t;
    out.order = N;
    out.options = options;
    out.options.degree_cap = cap;
    out.Phi = HSeries::unit(3, dim, N, cap);
    out.R = HSeries::unit(2, dim, N, cap);
    out.R.add_at(1, t);

    PentagonOptions po;
    po.cond_c = options.theta;
    po.even_parameter = true;
    po.degree_cap = cap;
    po.pivot = options.pivot;

    for (int n = 2; n <= N; ++n) {
        const bool even = n % 2 == 0;
        {
            HSeries r = out.R.truncated(n);
            TensorPoly chi = series_mul(U, flip_h(r), r).coeff(n);
            if (!even) {
                require(chi.is_zero(), "R-hat R = 1 at odd order", n);
            } else {
                require(antipode_legs(U, chi) == chi, "chi^S = chi", n);
                out.R.add_at(n, chi, Rational(-1, 2));
            }
        }
        if (even)
            detail::pentagon_order(U, out.Phi, n, po, cap, out.reports);

        HSeries Rn = out.R.truncated(n);
        HSeries Pn = out.Phi.truncated(n);
        TensorPoly psi = hexagon_defect(U, Rn, Pn).first.coeff(n);
        const int s = even ? -1 : 1;
        require(antipode_legs(U, leg_map(psi, {2, 1, 3}, 3)) == psi, "(psi^{213})^S = psi", n);
        require(antipode_legs(U, psi) == scaled(psi, s), "psi^S = (-1)^{n+1} psi", n);
        require(is_invariant(U, psi), "invariance of the hexagon obstruction", n);

        StepReport rep;
        rep.order = n;
        if (even) {
            WedgeElem w = extract_wedge(psi);
            require(embed_wedge(w, dim) == psi, "hexagon obstruction lies in the wedge cube", n);
            w.scale(Rational(1, 3));
            out.Phi.add_at(n, embed_wedge(w, dim));
            rep.step = "hexagon-associator";
            rep.ce_correction = w;
        } else {
            SectorSpec sector;
            sector.tau = -1;
            sector.antipode = 1;
            if (options.theta)
                sector.theta = 1;
            sector.weight_zero = cartan;
            sector.invariant = true;
            SolveOptions so;
            so.degree_cap = cap;
            so.pivot = options.pivot;
            SolveReport sr = solve_cobounding(U, scaled(psi, -1), Coboundary::Frozen, sector, so);
            if (!sr.solution)
                detail::obstruction("hexagon obstruction does not cobound", n, sr.residual_class);
            out.R.add_at(n, *sr.solution);
            rep = detail::make_report(n, "hexagon-r", sr);
        }
        out.reports.push_back(rep);

        Rn = out.R.truncated(n);
        Pn = out.Phi.truncated(n);
        auto [da, db] = hexagon_defect(U, Rn, Pn);
        require(da.coeff(n).is_zero(), "first hexagon", n);
        require(db.coeff(n).is_zero(), "second hexagon", n);
        require(pent(U, Pn).coeff(n).is_zero(), "pentagon", n);
        require(series_mul(U, flip_h(Rn), Rn).coeff(n).is_zero(), "R-hat R = 1", n);
    }
    return out;
}

} // namespace qgdef
