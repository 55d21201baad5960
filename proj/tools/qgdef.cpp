#include "commands.hpp"

#include "qgdef/errors.hpp"
#include "qgdef/serialize.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

int exit_code(qgdef::ErrorKind k) {
    switch (k) {
    case qgdef::ErrorKind::Config: return 2;
    case qgdef::ErrorKind::Precondition: return 3;
    case qgdef::ErrorKind::Obstruction: return 4;
    case qgdef::ErrorKind::Internal: return 5;
    }
    return 5;
}

void print_error(const char* kind, const std::string& message, const std::string& detail = {}) {
    qgdef::Json err = {{"kind", kind}, {"message", message}};
    if (!detail.empty()) {
        try {
            err["detail"] = qgdef::Json::parse(detail);
        } catch (const nlohmann::json::exception&) {
            err["detail"] = detail;
        }
    }
    std::cerr << qgdef::Json{{"error", err}}.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    using qgdef::cli::RunConfig;
    RunConfig cfg;
    CLI::App app{"Exact order-by-order solver for associators, twists and R-matrices over U(g)"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* s) {
        s->add_option("--algebra", cfg.algebra, "bundled algebra name or JSON path");
        s->add_option("--order", cfg.order, "truncation order N")->required();
        s->add_option("--degree-cap", cfg.degree_cap, "maximal total PBW degree per coefficient (default 3N)");
        s->add_option("--theta", cfg.theta, "on | off | auto");
        s->add_option("--pivot", cfg.pivot, "lexicographic | reversed");
        s->add_option("--out", cfg.out, "output path (default stdout)");
        s->add_flag("-v,--verbose", cfg.verbosity);
    };

    auto* assoc = app.add_subcommand("associator", "solve the pentagon equation for Phi");
    common(assoc);
    assoc->add_flag("--even", cfg.even, "use h^2 as the associator parameter");
    assoc->add_option("--from-f", cfg.from_f, "dj | wedge JSON; phi = (2/3)[[f,f]]");
    assoc->add_option("--phi", cfg.phi, "wedge JSON of degree 3");

    auto* twist = app.add_subcommand("twist", "solve the twist equation for F");
    common(twist);
    twist->add_option("--from-f", cfg.from_f, "dj | wedge JSON")->required();

    auto* qt = app.add_subcommand("qt", "solve for a quasi-triangular pair (Phi, R)");
    common(qt);
    qt->add_option("--t", cfg.t, "casimir | tensor JSON");

    auto* verify = app.add_subcommand("verify", "re-check every identity of a certificate");
    verify->add_option("certificate", cfg.certificate, "certificate JSON")->required();
    verify->add_option("--out", cfg.out, "report path (default stdout)");

    auto* coh = app.add_subcommand("cohomology", "invariant Cartier cohomology and the CE H^3 sector");
    coh->add_option("--algebra", cfg.algebra, "bundled algebra name or JSON path");
    coh->add_option("--degree-cap", cfg.degree_cap, "maximal total PBW degree (default 3)");
    coh->add_option("--max-arity", cfg.max_arity, "largest cochain arity (<= 4)");
    coh->add_option("--from-f", cfg.from_f, "dj | wedge JSON for the CE report");
    coh->add_option("--theta", cfg.theta, "on | off | auto");
    coh->add_option("--out", cfg.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("config", e.what());
        return 2;
    }

    try {
        if (assoc->parsed())
            return qgdef::cli::cmd_associator(cfg);
        if (twist->parsed())
            return qgdef::cli::cmd_twist(cfg);
        if (qt->parsed())
            return qgdef::cli::cmd_qt(cfg);
        if (verify->parsed())
            return qgdef::cli::cmd_verify(cfg);
        return qgdef::cli::cmd_cohomology(cfg);
    } catch (const qgdef::Error& e) {
        print_error(qgdef::kind_name(e.kind()), e.what(), e.detail());
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return 5;
    }
}
