#include "internal/solver_common.hpp"
#include "qgdef/identities.hpp"

namespace qgdef {

namespace {

int parity(int n) { return n % 2 == 0 ? 1 : -1; }

TensorPoly scaled(TensorPoly t, const Rational& s) {
    t.scale(s);
    return t;
}

// (F^{21})^S F at order n.
TensorPoly unitarity_defect(const Uea& U, const HSeries& F, int n) {
    HSeries p = F.truncated(n);
    return series_mul(U, antipode_legs(U, leg_map(p, {2, 1}, 2)), p).coeff(n);
}

} // namespace

HSeries exponential_twist(const Uea& U, const WedgeElem& f, int N) {
    HSeries a(2, U.dim(), N);
    if (N >= 1)
        a.add_at(1, embed_wedge(f, U.dim()));
    return series_exp(U, a);
}

TwistResult solve_twist(const Uea& U, const WedgeElem& f, int N, const TwistOptions& options) {
    const LieAlgebra& L = U.algebra();
    if (N < 1)
        fail(ErrorKind::Config, "order must be at least 1");
    if (f.degree() != 2)
        fail(ErrorKind::Config, "f must have wedge degree 2");
    WedgeElem ff = schouten(L, f, f);
    if (!wedge_invariant(L, ff))
        fail(ErrorKind::Precondition, "[[f,f]] is not invariant, so the dual bracket violates Jacobi");
    WedgeElem phi = ff;
    phi.scale(Rational(2, 3));
    PentagonOptions po;
    po.cond_c = options.theta;
    po.even_parameter = true;
    po.degree_cap = options.degree_cap;
    po.pivot = options.pivot;
    return solve_twist(U, f, solve_pentagon(U, phi, N, po), N, options);
}

TwistResult solve_twist(const Uea& U, const WedgeElem& f, const AssociatorResult& assoc, int N,
                        const TwistOptions& options) {
    using detail::require;
    const LieAlgebra& L = U.algebra();
    const int dim = U.dim();
    const bool cartan = L.has_cartan();
    if (N < 1)
        fail(ErrorKind::Config, "order must be at least 1");
    if (f.degree() != 2)
        fail(ErrorKind::Config, "f must have wedge degree 2");
    if (assoc.order < N)
        fail(ErrorKind::Config, "associator order is below the requested twist order");
    if (!assoc.options.even_parameter)
        fail(ErrorKind::Precondition, "the twist recursion needs an even-parameter associator");
    if (options.theta && !assoc.options.cond_c)
        fail(ErrorKind::Config, "theta sector requested but the associator was built without it");
    WedgeElem ff = schouten(L, f, f);
    if (!wedge_invariant(L, ff))
        fail(ErrorKind::Precondition, "[[f,f]] is not invariant, so the dual bracket violates Jacobi");
    if (cartan && !wedge_weight_zero(L, f))
        fail(ErrorKind::Precondition, "f is not invariant under the Cartan subalgebra");
    if (options.theta) {
        WedgeElem minus = f;
        minus.scale(-1);
        if (!(wedge_theta(L, f) == minus))
            fail(ErrorKind::Precondition, "f is not in the theta = -1 eigenspace");
    }

    const int cap = detail::resolve_cap(options.degree_cap, N);
    TwistResult out;
    out.f = f;
    out.associator = assoc;
    out.options = options;
    out.options.degree_cap = cap;

    CeSector ce;
    ce.h_invariant = cartan;
    if (options.theta)
        ce.theta_prime = -1;
    out.h3 = h3_invariant_test(L, f, ce);

    const HSeries Phi = assoc.Phi.truncated(N);
    HSeries F = HSeries::unit(2, dim, N, cap);
    F.add_at(1, embed_wedge(f, dim));

    auto obstruction_at = [&](int n) {
        TensorPoly eta = unitarity_defect(U, F, n);
        require(antipode_legs(U, leg_map(eta, {2, 1}, 2)) == eta, "(eta^{21})^S = eta", n);
        F.add_at(n, eta, Rational(-1, 2));
        require(unitarity_defect(U, F, n).is_zero(), "(F^{21})^S F = 1", n);

        TensorPoly xi = twist_defect(U, F.truncated(n), Phi.truncated(n)).coeff(n);
        const int s = -parity(n);
        require(tau(xi) == scaled(xi, s), "tau-parity of the twist obstruction", n);
        require(antipode_legs(U, xi) == scaled(xi, s), "S-parity of the twist obstruction", n);
        if (options.theta)
            require(theta_legs(U, xi) == scaled(xi, parity(n)), "theta-parity of the twist obstruction", n);
        if (cartan)
            require(is_weight_zero(U, xi), "weight of the twist obstruction", n);
        require(delta(xi).is_zero(), "cocycle property of the twist obstruction", n);
        return xi;
    };

    for (int n = 2; n <= N; ++n) {
        if (n == 2) {
            TensorPoly yb = yang_baxter(U, f);
            if (!(yb == scaled(embed_wedge(assoc.phi, dim), Rational(3, 2))))
                fail(ErrorKind::Precondition, "YB(f) differs from (3/2) phi");
        }
        TensorPoly xi = obstruction_at(n);
        WedgeElem cls = extract_wedge(alt(xi));
        if (!cls.is_zero()) {
            if (n % 2 == 1)
                fail(ErrorKind::Internal, "odd-order twist obstruction has a nonzero alternating class at order " +
                                              std::to_string(n));
            if (n == 2)
                fail(ErrorKind::Precondition, "order-2 twist obstruction has a nonzero alternating class");
            WedgeElem target = cls;
            target.scale(Rational(3, 4));
            auto chi = solve_ce(L, f, target, ce);
            if (!chi)
                detail::obstruction("alternating class is not a CE coboundary", n, cls);
            StepReport ce_report;
            ce_report.order = n;
            ce_report.step = "ce-correction";
            ce_report.ce_correction = *chi;
            ce_report.note = "inserted at order " + std::to_string(n - 1);
            out.reports.push_back(ce_report);
            F.add_at(n - 1, embed_wedge(*chi, dim));
            require(twist_defect(U, F.truncated(n - 1), Phi.truncated(n - 1)).coeff(n - 1).is_zero(),
                    "twist equation after CE correction", n - 1);
            xi = obstruction_at(n);
            require(alt(xi).is_zero(), "alternating part after CE correction", n);
        }

        SectorSpec sector;
        sector.tau = -parity(n);
        sector.antipode = -parity(n);
        if (options.theta)
            sector.theta = parity(n);
        sector.weight_zero = cartan;
        SolveOptions so;
        so.degree_cap = cap;
        so.pivot = options.pivot;
        SolveReport s = solve_cobounding(U, scaled(xi, -1), Coboundary::Cartier, sector, so);
        if (!s.solution)
            detail::obstruction("twist obstruction does not cobound", n, s.residual_class);
        F.add_at(n, *s.solution);
        require(twist_defect(U, F.truncated(n), Phi.truncated(n)).coeff(n).is_zero(), "twist equation", n);
        require(unitarity_defect(U, F, n).is_zero(), "(F^{21})^S F = 1", n);
        out.reports.push_back(detail::make_report(n, "twist", s));
    }

    out.theta_parity = cartan;
    if (cartan)
        for (int k = 0; k <= N; ++k)
            if (!(theta_legs(U, F.coeff(k)) == scaled(F.coeff(k), parity(k))))
                out.theta_parity = false;
    out.w = twisted_antipode_element(U, F);
    out.F = std::move(F);
    return out;
}

} // namespace qgdef
