#pragma once

#include "qgdef/errors.hpp"
#include "qgdef/serialize.hpp"
#include "qgdef/solvers.hpp"

#include <string>

namespace qgdef::detail {

inline StepReport make_report(int order, std::string step, const SolveReport& s) {
    StepReport r;
    r.order = order;
    r.step = std::move(step);
    r.blocks = s.blocks;
    r.pivots = s.pivots;
    return r;
}

[[noreturn]] inline void obstruction(const std::string& what, int order, const WedgeElem& residual) {
    Json d = {{"order", order}, {"residual_class", wedge_to_json(residual)}};
    fail(ErrorKind::Obstruction, what + " at order " + std::to_string(order), d.dump());
}

inline void require(bool ok, const std::string& what, int order) {
    if (!ok)
        fail(ErrorKind::Internal, what + " fails at order " + std::to_string(order));
}

inline int resolve_cap(int cap, int N) { return cap > 0 ? cap : 3 * N; }

// One order of the pentagon recursion: symmetry pre-corrections, obstruction, cobounding solve.
void pentagon_order(const Uea& U, HSeries& Phi, int n, const PentagonOptions& opt, int cap,
                    std::vector<StepReport>& reports);

} // namespace qgdef::detail
