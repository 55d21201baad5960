#pragma once

#include "qgdef/cohomology.hpp"
#include "qgdef/hseries.hpp"
#include "qgdef/wedge.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qgdef {

struct StepReport {
    int order = 0;
    std::string step;
    std::vector<BlockInfo> blocks;
    int pivots = 0;
    std::optional<WedgeElem> ce_correction;
    std::string note;
};

struct PentagonOptions {
    bool cond_b = true;   // Φ^{321}Φ = 1
    bool cond_c = true;   // Φ^θ = Φ
    bool cond_d = true;   // Φ^S Φ = 1
    bool even_parameter = true;
    int degree_cap = 0;   // 0 selects 3N
    PivotOrder pivot = PivotOrder::Lexicographic;
};

struct AssociatorResult {
    WedgeElem phi;
    HSeries Phi;
    int order = 0;
    PentagonOptions options;
    std::vector<StepReport> reports;
};

AssociatorResult solve_pentagon(const Uea& U, const WedgeElem& phi, int N, const PentagonOptions& options);

struct TwistOptions {
    bool theta = true;
    int degree_cap = 0;
    PivotOrder pivot = PivotOrder::Lexicographic;
};

struct TwistResult {
    WedgeElem f;
    HSeries F;
    HSeries w;
    AssociatorResult associator;
    TwistOptions options;
    H3Report h3;
    bool theta_parity = false; // F^θ_h = F_{−h}
    std::vector<StepReport> reports;
};

// φ = (2/3)[[f,f]] with even parameter; runs the pentagon solver internally.
TwistResult solve_twist(const Uea& U, const WedgeElem& f, int N, const TwistOptions& options);
// Uses a precomputed associator.
TwistResult solve_twist(const Uea& U, const WedgeElem& f, const AssociatorResult& assoc, int N,
                        const TwistOptions& options);

// F = exp(h ι(f)).
HSeries exponential_twist(const Uea& U, const WedgeElem& f, int N);

struct GaugeResult {
    std::optional<HSeries> u;
    std::optional<int> failed_order;
    std::string message;
};

// Finds u with F = u•F′ and uS(u) = 1.
GaugeResult gauge_equivalent(const Uea& U, const HSeries& F, const HSeries& Fp, int N, int degree_cap = 0,
                             PivotOrder pivot = PivotOrder::Lexicographic);

struct QTOptions {
    bool theta = true;
    int degree_cap = 0;
    PivotOrder pivot = PivotOrder::Lexicographic;
};

struct QTResult {
    TensorPoly t;
    HSeries Phi;
    HSeries R;
    int order = 0;
    QTOptions options;
    std::vector<StepReport> reports;
};

TensorPoly casimir_tensor(const Uea& U);
QTResult solve_quasitriangular(const Uea& U, const TensorPoly& t, int N, const QTOptions& options);

} // namespace qgdef
