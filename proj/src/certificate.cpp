#include "qgdef/certificate.hpp"

namespace qgdef {

namespace {

const char* pivot_name(PivotOrder p) { return p == PivotOrder::Reversed ? "reversed" : "lexicographic"; }

Json steps_to_json(const std::vector<StepReport>& steps) {
    Json out = Json::array();
    for (const auto& s : steps) {
        Json blocks = Json::array();
        for (const auto& b : s.blocks)
            blocks.push_back({{"degree", b.degree}, {"unknowns", b.unknowns}, {"equations", b.equations}, {"rank", b.rank}});
        Json j = {{"order", s.order}, {"step", s.step}, {"blocks", blocks}, {"pivots", s.pivots}};
        if (s.ce_correction)
            j["correction"] = wedge_to_json(*s.ce_correction);
        if (!s.note.empty())
            j["note"] = s.note;
        out.push_back(j);
    }
    return out;
}

Json conventions(bool even_phi) {
    return {
        {"leg_notation", "x^{abc}: leg i of x is placed in tensor slot given by the i-th superscript"},
        {"wedge_embedding", "x_1^...^x_k -> 2^{-k(k-1)/2} sum_sigma sign(sigma) x_sigma(1) (x) ... (x) x_sigma(k)"},
        {"alt_normalization", "1/n!"},
        {"tau", "(-1)^{n(n+1)/2} times reversal of tensor factors"},
        {"cartier_coboundary", "1(x)u - (D(x)id..)u + ... + (-1)^{n+1} u(x)1"},
        {"frozen_coboundary", "(D(x)id)r - r^{13} - r^{23}"},
        {"associator_parameter", even_phi ? "h^2" : "h"},
        {"pbw_order", "basis order of the algebra file"},
    };
}

Json base(const Uea& U, const char* kind, int order, bool even_phi) {
    return {{"format", kCertificateFormat},
            {"kind", kind},
            {"algebra", lie_algebra_to_json(U.algebra())},
            {"algebra_hash", algebra_hash(U.algebra())},
            {"order", order},
            {"conventions", conventions(even_phi)}};
}

Json pentagon_options(const PentagonOptions& o) {
    return {{"cond_b", o.cond_b},
            {"cond_c", o.cond_c},
            {"cond_d", o.cond_d},
            {"even_parameter", o.even_parameter},
            {"degree_cap", o.degree_cap},
            {"pivot", pivot_name(o.pivot)}};
}

Json associator_body(const AssociatorResult& r) {
    return {{"options", pentagon_options(r.options)},
            {"phi", wedge_to_json(r.phi)},
            {"Phi", series_to_json(r.Phi)},
            {"reports", steps_to_json(r.reports)}};
}

} // namespace

Json h3_report_to_json(const H3Report& r) {
    Json reps = Json::array();
    for (const auto& w : r.representatives)
        reps.push_back(wedge_to_json(w));
    return {{"dims", {r.dim_c2, r.dim_c3, r.dim_c4}},
            {"ranks", {r.rank_d2, r.rank_d3}},
            {"h3_dim", r.h3_dim},
            {"representatives", reps},
            {"exact_exponential", r.exact_exponential}};
}

Json associator_certificate(const Uea& U, const AssociatorResult& r) {
    Json j = base(U, "associator", r.order, r.options.even_parameter);
    const Json body = associator_body(r);
    for (auto it = body.begin(); it != body.end(); ++it)
        j[it.key()] = it.value();
    return j;
}

Json twist_certificate(const Uea& U, const TwistResult& r) {
    Json j = base(U, "twist", r.F.order(), true);
    j["options"] = {{"theta", r.options.theta}, {"degree_cap", r.options.degree_cap}, {"pivot", pivot_name(r.options.pivot)}};
    j["associator"] = associator_body(r.associator);
    j["f"] = wedge_to_json(r.f);
    j["F"] = series_to_json(r.F);
    j["w"] = series_to_json(r.w);
    j["h3_precheck"] = h3_report_to_json(r.h3);
    j["theta_parity"] = r.theta_parity;
    j["reports"] = steps_to_json(r.reports);
    if (r.h3.exact_exponential)
        j["note"] = "legs of f commute and [[f,f]] = 0: F is gauge-equivalent to exp(h f)";
    return j;
}

Json qt_certificate(const Uea& U, const QTResult& r) {
    Json j = base(U, "quasitriangular", r.order, true);
    j["conventions"]["r_matrix_parameter"] = "h";
    j["options"] = {{"theta", r.options.theta}, {"degree_cap", r.options.degree_cap}, {"pivot", pivot_name(r.options.pivot)}};
    j["t"] = tensor_to_json(r.t);
    j["Phi"] = series_to_json(r.Phi);
    j["R"] = series_to_json(r.R);
    j["reports"] = steps_to_json(r.reports);
    return j;
}

} // namespace qgdef
