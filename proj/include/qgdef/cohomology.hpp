#pragma once

#include "qgdef/hseries.hpp"
#include "qgdef/tensor.hpp"
#include "qgdef/wedge_elem.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qgdef {

// Cartier coboundary U^{⊗n} → U^{⊗(n+1)}.
TensorPoly delta(const TensorPoly& u);
// Cartier coboundary on the first k legs, remaining legs as frozen coefficients.
TensorPoly delta_partial(const TensorPoly& u, int k);
// δ′r = (Δ⊗id)r − r^{13} − r^{23}.
TensorPoly delta_prime(const TensorPoly& r);

TensorPoly alt(const TensorPoly& u);
// Reads an alt-symmetric tensor concentrated in leg degrees (1,...,1) as a wedge; Error(Internal) otherwise.
WedgeElem extract_wedge(const TensorPoly& u);

// Joint eigen-sector request; unset entries are unconstrained.
struct SectorSpec {
    std::optional<int> tau;
    std::optional<int> antipode; // S on every leg
    std::optional<int> theta;
    bool weight_zero = false;
    bool invariant = false;
};

bool in_sector(const Uea& U, const TensorPoly& u, const SectorSpec& s);
TensorPoly restrict_sector(const Uea& U, const TensorPoly& u, const SectorSpec& s);

enum class Coboundary { Cartier, Frozen };
enum class PivotOrder { Lexicographic, Reversed };

struct SolveOptions {
    int degree_cap = kNoDegreeCap;
    PivotOrder pivot = PivotOrder::Lexicographic;
    // Pins the kernel: Cartier solves zero the alternating part in leg degrees (1,...,1);
    // frozen solves zero the whole leg-degree (1,1) component.
    bool normalize = true;
};

struct BlockInfo {
    int degree = 0;
    int unknowns = 0;
    int equations = 0;
    int rank = 0;
};

struct SolveReport {
    std::optional<TensorPoly> solution;
    WedgeElem residual_class;
    std::vector<BlockInfo> blocks;
    int pivots = 0;
};

SolveReport solve_cobounding(const Uea& U, const TensorPoly& target, Coboundary d, const SectorSpec& sectors,
                             const SolveOptions& options = {});

struct CohomologyEntry {
    int arity = 0;
    int degree = 0;
    int cochains = 0;  // dim of the (invariant) degree slice of C^n
    int cocycles = 0;
    int coboundaries = 0;
    int dimension = 0; // cocycles − coboundaries
};

// dim H^n of the invariant (or weight-zero) subcomplex, per total PBW degree.
std::vector<CohomologyEntry> cohomology_report(const Uea& U, int max_arity, int degree_cap, bool invariant);

} // namespace qgdef
