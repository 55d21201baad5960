#include "internal/solver_common.hpp"
#include "qgdef/identities.hpp"

namespace qgdef {

GaugeResult gauge_equivalent(const Uea& U, const HSeries& F, const HSeries& Fp, int N, int degree_cap,
                             PivotOrder pivot) {
    const int dim = U.dim();
    const int cap = detail::resolve_cap(degree_cap, N);
    GaugeResult out;
    if (F.arity() != 2 || Fp.arity() != 2 || F.order() < N || Fp.order() < N)
        fail(ErrorKind::Config, "gauge_equivalent expects two arity-2 series of order at least N");
    if (!(F.coeff(1) == Fp.coeff(1))) {
        out.failed_order = 1;
        out.message = "infinitesimals differ";
        return out;
    }
    HSeries u = HSeries::unit(1, dim, N, cap);
    const HSeries Ft = F.truncated(N);
    const HSeries Fpt = Fp.truncated(N);
    for (int n = 2; n <= N; ++n) {
        HSeries diff = series_sub(Ft, gauge_act(U, u, Fpt));
        for (int k = 0; k < n; ++k)
            detail::require(diff.coeff(k).is_zero(), "lower-order gauge agreement", k);
        const TensorPoly& d = diff.coeff(n);
        if (d.is_zero())
            continue;
        if (!delta(d).is_zero()) {
            out.failed_order = n;
            out.message = "difference is not a cocycle";
            return out;
        }
        if (!alt(d).is_zero()) {
            out.failed_order = n;
            out.message = "difference has a nonzero alternating class";
            return out;
        }
        SectorSpec sector;
        sector.weight_zero = U.algebra().has_cartan() && is_weight_zero(U, d);
        SolveOptions so;
        so.degree_cap = cap;
        so.pivot = pivot;
        so.normalize = false;
        SolveReport s = solve_cobounding(U, d, Coboundary::Cartier, sector, so);
        if (!s.solution) {
            out.failed_order = n;
            out.message = "difference does not cobound";
            return out;
        }
        // u_n = ½(v − S v)
        TensorPoly un = *s.solution;
        un.add(antipode_legs(U, *s.solution), -1);
        un.scale(Rational(1, 2));
        HSeries a(1, dim, N, cap);
        a.add_at(n, un);
        u = series_mul(U, series_exp(U, a), u);
    }
    HSeries check = series_sub(Ft, gauge_act(U, u, Fpt));
    if (auto k = check.first_nonzero_order()) {
        out.failed_order = *k;
        out.message = "constructed gauge does not reproduce F";
        return out;
    }
    HSeries uSu = series_mul(U, u, antipode_legs(U, u));
    if (auto k = series_sub(uSu, HSeries::unit(1, dim, N, cap)).first_nonzero_order()) {
        out.failed_order = *k;
        out.message = "u S(u) differs from 1";
        return out;
    }
    out.u = std::move(u);
    return out;
}

} // namespace qgdef
