#include "commands.hpp"

#include "qgdef/certificate.hpp"
#include "qgdef/errors.hpp"
#include "qgdef/verify.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef QGDEF_DATA_DIR
#define QGDEF_DATA_DIR "data/algebras"
#endif

namespace qgdef::cli {

namespace {

namespace fs = std::filesystem;

std::string resolve_algebra(const std::string& name) {
    if (fs::exists(name))
        return name;
    for (const std::string& cand : {std::string(QGDEF_DATA_DIR) + "/" + name,
                                     std::string(QGDEF_DATA_DIR) + "/" + name + ".json"})
        if (fs::exists(cand))
            return cand;
    fail(ErrorKind::Config, "unknown algebra \"" + name + "\"");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::Config, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Config, "cannot parse " + path + ": " + e.what());
    }
}

void write_output(const RunConfig& c, const Json& j) {
    std::string text = j.dump(1) + "\n";
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream o(c.out);
    if (!o)
        fail(ErrorKind::Config, "cannot write " + c.out);
    o << text;
}

void validate(const RunConfig& c) {
    if (c.order < 1)
        fail(ErrorKind::Config, "--order must be at least 1");
    if (c.degree_cap != 0 && c.degree_cap < 3)
        fail(ErrorKind::Config, "--degree-cap must be at least 3");
    if (c.theta != "on" && c.theta != "off" && c.theta != "auto")
        fail(ErrorKind::Config, "--theta must be on, off or auto");
    if (c.pivot != "lexicographic" && c.pivot != "reversed")
        fail(ErrorKind::Config, "--pivot must be lexicographic or reversed");
}

struct Loaded {
    std::shared_ptr<const LieAlgebra> L;
    std::unique_ptr<Uea> U;
};

Loaded load(const RunConfig& c) {
    Loaded l;
    l.L = std::make_shared<const LieAlgebra>(load_lie_algebra_file(resolve_algebra(c.algebra)));
    l.U = std::make_unique<Uea>(l.L);
    return l;
}

bool theta_on(const RunConfig& c, const LieAlgebra& L) {
    if (c.theta == "auto")
        return L.has_cartan();
    if (c.theta == "on" && !L.has_cartan())
        fail(ErrorKind::Precondition, "missing Cartan data");
    return c.theta == "on";
}

PivotOrder pivot(const RunConfig& c) {
    return c.pivot == "reversed" ? PivotOrder::Reversed : PivotOrder::Lexicographic;
}

WedgeElem read_f(const RunConfig& c, const LieAlgebra& L) {
    if (c.from_f.empty())
        fail(ErrorKind::Config, "--from-f is required");
    if (c.from_f == "dj")
        return dj_r_matrix(L);
    WedgeElem f = wedge_from_json(read_json_file(c.from_f), L.dim());
    if (f.degree() != 2)
        fail(ErrorKind::Config, "--from-f must hold a wedge of degree 2");
    return f;
}

int finish(const RunConfig& c, Json cert) {
    VerificationReport rep = verify_certificate(cert);
    cert["verification"] = report_to_json(rep);
    write_output(c, cert);
    if (!c.out.empty() || c.verbosity > 0)
        std::cerr << report_to_json(rep).dump() << "\n";
    return rep.passed() ? 0 : 5;
}

} // namespace

int cmd_associator(const RunConfig& c) {
    validate(c);
    Loaded l = load(c);
    WedgeElem phi(3);
    if (!c.phi.empty() && !c.from_f.empty())
        fail(ErrorKind::Config, "--phi and --from-f are exclusive");
    if (!c.phi.empty()) {
        phi = wedge_from_json(read_json_file(c.phi), l.L->dim());
        if (phi.degree() != 3)
            fail(ErrorKind::Config, "--phi must hold a wedge of degree 3");
    } else {
        WedgeElem f = read_f(c, *l.L);
        phi = schouten(*l.L, f, f);
        phi.scale(Rational(2, 3));
    }
    PentagonOptions o;
    o.cond_c = theta_on(c, *l.L);
    o.even_parameter = c.even;
    o.degree_cap = c.degree_cap;
    o.pivot = pivot(c);
    AssociatorResult r = solve_pentagon(*l.U, phi, c.order, o);
    return finish(c, associator_certificate(*l.U, r));
}

int cmd_twist(const RunConfig& c) {
    validate(c);
    Loaded l = load(c);
    WedgeElem f = read_f(c, *l.L);
    TwistOptions o;
    o.theta = theta_on(c, *l.L);
    o.degree_cap = c.degree_cap;
    o.pivot = pivot(c);
    TwistResult r = solve_twist(*l.U, f, c.order, o);
    return finish(c, twist_certificate(*l.U, r));
}

int cmd_qt(const RunConfig& c) {
    validate(c);
    Loaded l = load(c);
    TensorPoly t = c.t == "casimir" ? casimir_tensor(*l.U) : tensor_from_json(read_json_file(c.t), l.L->dim());
    QTOptions o;
    o.theta = theta_on(c, *l.L);
    o.degree_cap = c.degree_cap;
    o.pivot = pivot(c);
    QTResult r = solve_quasitriangular(*l.U, t, c.order, o);
    return finish(c, qt_certificate(*l.U, r));
}

int cmd_verify(const RunConfig& c) {
    Json cert = read_json_file(c.certificate);
    VerificationReport rep = verify_certificate(cert);
    Json j = report_to_json(rep);
    write_output(c, j);
    if (const auto* f = rep.first_failure()) {
        std::cerr << "verification failed: " << f->identity;
        if (f->failing_order)
            std::cerr << " at order " << *f->failing_order;
        std::cerr << "\n";
        return 5;
    }
    return 0;
}

int cmd_cohomology(const RunConfig& c) {
    if (c.max_arity < 1 || c.max_arity > 4)
        fail(ErrorKind::Config, "--max-arity must lie in 1..4");
    const int cap = c.degree_cap == 0 ? 3 : c.degree_cap;
    if (cap < 1)
        fail(ErrorKind::Config, "--degree-cap must be positive");
    Loaded l = load(c);
    Json entries = Json::array();
    Json totals = Json::object();
    for (const auto& e : cohomology_report(*l.U, c.max_arity, cap, true)) {
        entries.push_back({{"arity", e.arity},
                           {"degree", e.degree},
                           {"cochains", e.cochains},
                           {"cocycles", e.cocycles},
                           {"coboundaries", e.coboundaries},
                           {"dimension", e.dimension}});
        std::string key = "H" + std::to_string(e.arity);
        totals[key] = totals.value(key, 0) + e.dimension;
    }
    Json out = {{"algebra_hash", algebra_hash(*l.L)},
                {"degree_cap", cap},
                {"sector", l.L->has_cartan() ? "invariant, weight zero" : "invariant"},
                {"invariant_cohomology", entries},
                {"totals", totals}};
    if (!c.from_f.empty()) {
        WedgeElem f = read_f(c, *l.L);
        CeSector s;
        s.h_invariant = l.L->has_cartan();
        if (theta_on(c, *l.L))
            s.theta_prime = -1;
        out["ce_h3"] = h3_report_to_json(h3_invariant_test(*l.L, f, s));
    }
    write_output(c, out);
    return 0;
}

} // namespace qgdef::cli
