#include "internal/solver_common.hpp"
#include "qgdef/identities.hpp"

namespace qgdef {

namespace detail {

void pentagon_order(const Uea& U, HSeries& Phi, int n, const PentagonOptions& opt, int cap,
                    std::vector<StepReport>& reports) {
    const bool cartan = U.algebra().has_cartan();

    if (opt.cond_b) {
        HSeries p = Phi.truncated(n);
        TensorPoly eta = series_mul(U, leg_map(p, {3, 2, 1}, 3), p).coeff(n);
        require(leg_map(eta, {3, 2, 1}, 3) == eta, "eta^{321} = eta", n);
        Phi.add_at(n, eta, Rational(-1, 2));
    }
    if (opt.cond_d) {
        HSeries p = Phi.truncated(n);
        TensorPoly chi = series_mul(U, antipode_legs(U, p), p).coeff(n);
        require(antipode_legs(U, chi) == chi, "chi^S = chi", n);
        Phi.add_at(n, chi, Rational(-1, 2));
    }
    {
        HSeries p = Phi.truncated(n);
        if (opt.cond_b)
            require(series_mul(U, leg_map(p, {3, 2, 1}, 3), p).coeff(n).is_zero(), "Phi^{321}Phi = 1", n);
        if (opt.cond_d)
            require(series_mul(U, antipode_legs(U, p), p).coeff(n).is_zero(), "Phi^S Phi = 1", n);
        if (opt.cond_c)
            require(theta_legs(U, p.coeff(n)) == p.coeff(n), "Phi^theta = Phi", n);
    }

    TensorPoly xi = pent(U, Phi.truncated(n)).coeff(n);
    require(is_invariant(U, xi), "invariance of the pentagon obstruction", n);
    if (opt.cond_b)
        { TensorPoly m = xi; m.scale(-1); require(tau(xi) == m, "tau-symmetry of the pentagon obstruction", n); }

    SectorSpec sector;
    if (opt.cond_b)
        sector.tau = -1;
    if (opt.cond_d)
        sector.antipode = -1;
    if (opt.cond_c)
        sector.theta = 1;
    sector.weight_zero = cartan;
    sector.invariant = true;

    TensorPoly target = xi;
    target.scale(-1);
    SolveOptions so;
    so.degree_cap = cap;
    so.pivot = opt.pivot;
    SolveReport s = solve_cobounding(U, target, Coboundary::Cartier, sector, so);
    if (!s.solution)
        obstruction("pentagon obstruction does not cobound", n, s.residual_class);
    Phi.add_at(n, *s.solution);
    require(pent(U, Phi.truncated(n)).coeff(n).is_zero(), "pentagon", n);

    reports.push_back(make_report(n, "pentagon", s));
}

} // namespace detail

AssociatorResult solve_pentagon(const Uea& U, const WedgeElem& phi, int N, const PentagonOptions& options) {
    const LieAlgebra& L = U.algebra();
    if (N < 1)
        fail(ErrorKind::Config, "order must be at least 1");
    if (phi.degree() != 3 && !phi.is_zero())
        fail(ErrorKind::Config, "phi must have wedge degree 3");
    if (!wedge_invariant(L, phi))
        fail(ErrorKind::Precondition, "phi is not invariant");
    if (options.cond_c && !(wedge_theta(L, phi) == phi))
        fail(ErrorKind::Precondition, "phi is not theta-invariant");

    const int cap = detail::resolve_cap(options.degree_cap, N);
    if (cap < 3)
        fail(ErrorKind::Config, "degree cap must be at least 3");
    const int step = options.even_parameter ? 2 : 1;

    AssociatorResult out;
    out.phi = phi;
    out.order = N;
    out.options = options;
    out.options.degree_cap = cap;
    out.Phi = HSeries::unit(3, U.dim(), N, cap);
    if (step <= N)
        out.Phi.add_at(step, embed_wedge(phi, U.dim()));

    for (int n = 2 * step; n <= N; n += step)
        detail::pentagon_order(U, out.Phi, n, out.options, cap, out.reports);
    return out;
}

} // namespace qgdef
