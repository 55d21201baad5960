// Acceptance driver: one PASS/FAIL line per criterion.
// usage: acceptance <path-to-qgdef> <work-dir>
#include "support.hpp"

#include "qgdef/cohomology.hpp"
#include "qgdef/errors.hpp"
#include "qgdef/identities.hpp"
#include "qgdef/serialize.hpp"
#include "qgdef/solvers.hpp"
#include "qgdef/wedge.hpp"

#include <sys/wait.h>

#include <chrono>
#include <deque>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace qgdef;
namespace fs = std::filesystem;

namespace {

std::string g_qgdef;
fs::path g_work;

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Records the first failed expectation.
class Expect {
  public:
    void operator()(bool cond, const std::string& what) {
        if (!cond && ok_) {
            ok_ = false;
            first_ = what;
        }
    }
    Outcome done(std::string detail) const { return ok_ ? Outcome{true, std::move(detail)} : Outcome{false, first_}; }

  private:
    bool ok_ = true;
    std::string first_;
};

int run(const std::string& args, const std::string& stderr_file = "/dev/null") {
    std::string cmd = "'" + g_qgdef + "' " + args + " > /dev/null 2> '" + stderr_file + "'";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

Json load_json(const fs::path& p) {
    std::ifstream in(p);
    return Json::parse(in);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool zero_through(const HSeries& s, int N) {
    for (int k = 0; k <= std::min(N, s.order()); ++k)
        if (!s.coeff(k).is_zero())
            return false;
    return true;
}

bool unit_through(const HSeries& s, int N) {
    return zero_through(series_sub(s, HSeries::unit(s.arity(), s.dim(), s.order())), N);
}

TensorPoly multiply_tensor_legs(const Uea& U, const TensorPoly& t) {
    TensorPoly out(1, t.dim());
    for (const auto& [key, c] : t)
        for (const auto& [m, v] : U.multiply_monomials(t.leg(key, 0), t.leg(key, 1)))
            out.add_term(m, c * v);
    return out;
}

TensorPoly antipode_on_leg(const Uea& U, const TensorPoly& t, int leg) {
    TensorPoly out(t.arity(), t.dim());
    std::deque<UEElem> keep; // stable references
    expand_legwise(
        t,
        [&](int l, const Monomial& m) -> const UEElem& {
            if (l == leg)
                return U.antipode_monomial(m);
            keep.emplace_back();
            keep.back().add(m, 1);
            return keep.back();
        },
        out);
    return out;
}

WedgeElem bivector(int a, int b) {
    WedgeElem w(2);
    w.add_term({a, b}, 1);
    return w;
}

// [[a∧b, c∧d]] = [a,c]∧b∧d − [a,d]∧b∧c − [b,c]∧a∧d + [b,d]∧a∧c
WedgeElem oracle_schouten(const LieAlgebra& L, const WedgeElem& x, const WedgeElem& y) {
    WedgeElem out(3);
    auto put = [&](const SparseVec& br, int b, int c, const Rational& s) {
        for (const auto& [k, v] : br)
            if (k != b && k != c && b != c)
                out.add_term({k, b, c}, v * s);
    };
    for (const auto& [p, cp] : x.terms())
        for (const auto& [q, cq] : y.terms()) {
            const Rational s = cp * cq;
            put(L.bracket(p[0], q[0]), p[1], q[1], s);
            put(L.bracket(p[0], q[1]), p[1], q[0], -s);
            put(L.bracket(p[1], q[0]), p[0], q[1], -s);
            put(L.bracket(p[1], q[1]), p[0], q[0], s);
        }
    return out;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
    Expect expect;
    std::mt19937 rng(2024);
    int count = 0;
    for (const char* name : {"sl2", "heisenberg"}) {
        auto L = test::algebra(name);
        for (int i = 0; i < 100; ++i, ++count) {
            int arity = 1 + i % 4;
            TensorPoly u = test::random_tensor(rng, arity, L->dim(), 3, 4);
            TensorPoly du = delta(u);
            expect(delta(du).is_zero(), std::string("delta^2 != 0 on ") + name);
            expect(alt(du).is_zero(), std::string("alt(delta u) != 0 on ") + name);
        }
    }
    return expect.done(std::to_string(count) + " cochains, arities 1-4, degree <= 3");
}

Outcome criterion2() {
    Expect expect;
    std::mt19937 rng(77);
    int count = 0;
    for (const char* name : {"sl2", "sl3", "heisenberg", "sl2xsl2"}) {
        auto L = test::algebra(name);
        Uea U(L);
        const int d = L->dim();
        for (int i = 0; i < 50; ++i, ++count) {
            UEElem a = test::random_element(rng, d, 3, 4);
            UEElem b = test::random_element(rng, d, 3, 4);
            TensorPoly da = coproduct(a, d);
            expect(coproduct_insert(da, 1) == coproduct_insert(da, 2), std::string("coassociativity on ") + name);
            expect(counit_leg(da, 1) == embed(a, d) && counit_leg(da, 2) == embed(a, d),
                   std::string("counit on ") + name);
            TensorPoly eps = embed(U.one(), d);
            eps.scale(Uea::counit(a));
            expect(multiply_tensor_legs(U, antipode_on_leg(U, da, 0)) == eps &&
                       multiply_tensor_legs(U, antipode_on_leg(U, da, 1)) == eps,
                   std::string("antipode axiom on ") + name);
            expect(U.antipode(U.multiply(a, b)) == U.multiply(U.antipode(b), U.antipode(a)),
                   std::string("antipode anti-homomorphism on ") + name);
            expect(coproduct(U.multiply(a, b), d) == tensor_mul(U, da, coproduct(b, d)),
                   std::string("coproduct homomorphism on ") + name);
        }
    }
    return expect.done(std::to_string(count) + " random elements of degree <= 3");
}

Outcome criterion3() {
    Expect expect;
    auto L = test::algebra("sl2");
    Uea U(L);
    WedgeElem f = dj_r_matrix(*L);
    WedgeElem ff = schouten(*L, f, f);
    // E = 0, H = 1, F = 2
    WedgeElem two_hef(3);
    two_hef.add_term({1, 0, 2}, 2);
    expect(ff == two_hef, "[[f,f]] != 2 H^E^F");
    expect(oracle_schouten(*L, f, f) == ff, "brute-force Schouten expansion disagrees");
    TensorPoly yb = yang_baxter(U, f);
    expect(yb == embed_wedge(ff, 3), "YB(f) != iota([[f,f]])");
    WedgeElem phi = ff;
    phi.scale(frac(2, 3));
    TensorPoly scaled = embed_wedge(phi, 3);
    scaled.scale(frac(3, 2));
    expect(yb == scaled, "YB(f) != (3/2) iota(phi)");
    return expect.done("[[f,f]] = 2 H^E^F, YB(f) = iota[[f,f]] = (3/2) iota(phi)");
}

Outcome criterion4() {
    Expect expect;
    fs::path cert = g_work / "associator.json";
    int rc = run("associator --algebra sl2 --from-f dj --order 4 --even --degree-cap 12 --out '" + cert.string() + "'");
    if (rc != 0)
        return {false, "associator exited with " + std::to_string(rc)};
    Json j = load_json(cert);
    auto L = std::make_shared<const LieAlgebra>(load_lie_algebra(j.at("algebra")));
    Uea U(L);
    const int N = 4;
    HSeries Phi = series_from_json(j.at("Phi"), L->dim());
    expect(Phi.order() >= N, "certificate order below 4");
    expect(unit_through(pent(U, Phi), N), "Pent(Phi) != 1 mod h^5");
    expect(unit_through(series_mul(U, leg_map(Phi, {3, 2, 1}, 3), Phi), N), "Phi^321 Phi != 1");
    expect(theta_legs(U, Phi) == Phi, "Phi^theta != Phi");
    expect(unit_through(series_mul(U, antipode_legs(U, Phi), Phi), N), "Phi^S Phi != 1");
    expect(unit_through(counit_leg(Phi, 2), N), "(id x eps x id) Phi != 1");
    expect(is_invariant(U, Phi), "Phi is not g-invariant");
    WedgeElem f = dj_r_matrix(*L);
    WedgeElem phi = schouten(*L, f, f);
    phi.scale(frac(2, 3));
    expect(wedge_from_json(j.at("phi"), L->dim()) == phi, "phi != (2/3)[[f,f]]");
    expect(Phi.coeff(2) == embed_wedge(phi, 3), "Phi_2 != iota(phi)");
    int vrc = run("verify '" + cert.string() + "'");
    expect(vrc == 0, "verify exited with " + std::to_string(vrc));
    return expect.done("N=4, degree cap 12, pentagon and symmetries exact, verify exit 0");
}

Outcome criterion5() {
    Expect expect;
    fs::path cert = g_work / "twist.json";
    int rc = run("twist --algebra sl2 --from-f dj --order 4 --out '" + cert.string() + "'");
    if (rc != 0)
        return {false, "twist exited with " + std::to_string(rc)};
    Json j = load_json(cert);
    auto L = std::make_shared<const LieAlgebra>(load_lie_algebra(j.at("algebra")));
    Uea U(L);
    const int N = 4, d = L->dim();
    HSeries F = series_from_json(j.at("F"), d);
    HSeries Phi = series_from_json(j.at("associator").at("Phi"), d);
    WedgeElem f = wedge_from_json(j.at("f"), d);
    expect(f == dj_r_matrix(*L), "f is not the standard r-matrix");
    expect(zero_through(twist_defect(U, F, Phi), N), "B(F,Phi) != 0 mod h^5");
    expect(unit_through(series_mul(U, antipode_legs(U, leg_map(F, {2, 1}, 2)), F), N), "(F^21)^S F != 1");
    expect(leg_map(F, {2, 1}, 2) == flip_h(F), "F^21_h != F_{-h}");
    TensorPoly iota_f = embed_wedge(f, d);
    HSeries F12 = pad_right(F, 3), F23 = pad_left(F, 3);
    HSeries F12i = series_inverse(U, F12), F23i = series_inverse(U, F23);
    for (int g = 0; g < d; ++g) {
        const std::string name = L->labels()[g];
        UEElem a = U.generator(g);
        HSeries D = deformed_coproduct(U, F, a);
        HSeries left = series_mul(U, series_mul(U, F12, coproduct_insert(D, 1)), F12i);
        HSeries right = series_mul(U, series_mul(U, F23, coproduct_insert(D, 2)), F23i);
        expect(zero_through(series_sub(left, right), N), "Delta_h not coassociative on " + name);
        TensorPoly da = coproduct(a, d);
        TensorPoly comm = tensor_mul(U, iota_f, da);
        comm.add(tensor_mul(U, da, iota_f), -1);
        expect(D.coeff(1) == comm, "order-h term of Delta_h(" + name + ") != [f, Delta]");
    }
    for (int h : L->cartan().h_indices) {
        HSeries D = deformed_coproduct(U, F, U.generator(h));
        expect(D == HSeries::constant(coproduct(U.generator(h), d), D.order()),
               "Delta_h differs from Delta on " + L->labels()[h]);
    }
    return expect.done("N=4, B(F,Phi)=0, unitarity, h-parity, coassociativity, Cartan and order-h checks");
}

Outcome criterion6() {
    Expect expect;
    const int N = 6;
    struct Case {
        const char* algebra;
        int a, b;
    };
    // heisenberg: X=0, Y=1, Z=2 with Z central, so X^Z has commuting legs
    for (const Case& c : {Case{"abelian2", 0, 1}, Case{"abelian3", 0, 1}, Case{"heisenberg", 0, 2}}) {
        auto L = test::algebra(c.algebra);
        Uea U(L);
        const std::string name = c.algebra;
        WedgeElem f = bivector(c.a, c.b);
        HSeries E = exponential_twist(U, f, N);
        expect(twist_defect(U, E, HSeries::unit(3, L->dim(), N)).is_zero(), "B(e^{hf},1) != 0 on " + name);
        TwistOptions opt;
        opt.theta = false;
        TwistResult r = solve_twist(U, f, N, opt);
        expect(r.h3.exact_exponential, "exact exponential not detected on " + name);
        GaugeResult g = gauge_equivalent(U, r.F, E, N);
        if (!g.u) {
            expect(false, "no gauge to e^{hf} on " + name + ": " + g.message);
            continue;
        }
        expect(unit_through(series_mul(U, *g.u, antipode_legs(U, *g.u)), N), "u S(u) != 1 on " + name);
        expect(gauge_act(U, *g.u, E) == r.F.truncated(N), "u . e^{hf} != F on " + name);
    }
    return expect.done("abelian2, abelian3, heisenberg(X^Z) at N=6 gauge-equivalent to e^{hf}");
}

Outcome criterion7() {
    Expect expect;
    fs::path a = g_work / "twist_lex.json", b = g_work / "twist_rev.json";
    int ra = run("twist --algebra sl2 --from-f dj --order 4 --pivot lexicographic --out '" + a.string() + "'");
    int rb = run("twist --algebra sl2 --from-f dj --order 4 --pivot reversed --out '" + b.string() + "'");
    if (ra != 0 || rb != 0)
        return {false, "twist runs exited with " + std::to_string(ra) + "," + std::to_string(rb)};
    Json ja = load_json(a), jb = load_json(b);
    auto L = std::make_shared<const LieAlgebra>(load_lie_algebra(ja.at("algebra")));
    Uea U(L);
    const int N = 4, d = L->dim();
    HSeries Fa = series_from_json(ja.at("F"), d), Fb = series_from_json(jb.at("F"), d);
    const bool identical = Fa == Fb;
    GaugeResult g = gauge_equivalent(U, Fa, Fb, N);
    expect(g.u.has_value(), "no gauge between pivot orders: " + g.message);
    if (g.u) {
        expect(unit_through(series_mul(U, *g.u, antipode_legs(U, *g.u)), N), "u S(u) != 1");
        expect(gauge_act(U, *g.u, Fb) == Fa, "u . F_rev != F_lex");
    }
    // a genuinely different twist: F' = v . F for v = exp(h^2 a + h^3 b), S-odd, weight zero
    HSeries x(1, d, N);
    TensorPoly x2 = embed(U.generator(1), d);
    x2.scale(frac(3, 5));
    TensorPoly x3 = embed(U.symmetrized({1, 1, 1}), d);
    x3.scale(frac(-2, 7));
    x.add_at(2, x2);
    x.add_at(3, x3);
    HSeries v = series_exp(U, x);
    HSeries Fp = gauge_act(U, v, Fb);
    expect(!(Fp == Fa), "gauge-transformed twist coincides with the original");
    GaugeResult g2 = gauge_equivalent(U, Fp, Fa, N);
    expect(g2.u.has_value(), "no gauge to a transformed twist: " + g2.message);
    if (g2.u) {
        expect(unit_through(series_mul(U, *g2.u, antipode_legs(U, *g2.u)), N), "u S(u) != 1 (transformed)");
        expect(gauge_act(U, *g2.u, Fa) == Fp, "u . F != F' (transformed)");
    }
    return expect.done(std::string("pivot orders give ") + (identical ? "identical" : "different") +
                       " F; gauge found; random gauge transform also recovered");
}

Outcome criterion8() {
    Expect expect;
    std::string dims;
    for (const char* name : {"sl2", "sl3"}) {
        auto L = test::algebra(name);
        H3Report r = h3_invariant_test(*L, dj_r_matrix(*L), CeSector{true, -1});
        expect(r.h3_dim == 0, std::string("nonzero invariant H^3 on ") + name);
        dims += std::string(name) + ":" + std::to_string(r.h3_dim) + " ";
    }
    auto A = test::algebra("abelian3");
    H3Report r = h3_invariant_test(*A, bivector(0, 1), CeSector{true, std::nullopt});
    expect(r.h3_dim > 0, "abelian counterexample reports zero H^3");
    expect(!r.representatives.empty(), "abelian counterexample has no representative");
    dims += "abelian3:" + std::to_string(r.h3_dim);
    fs::path out = g_work / "cohomology.json";
    int rc = run("cohomology --algebra sl2 --from-f dj --out '" + out.string() + "'");
    expect(rc == 0, "cohomology command exited with " + std::to_string(rc));
    if (rc == 0)
        expect(load_json(out).at("ce_h3").at("h3_dim").get<int>() == 0, "CLI reports nonzero H^3 on sl2");
    return expect.done("h3 dims " + dims);
}

Outcome criterion9() {
    Expect expect;
    fs::path cert = g_work / "qt.json";
    int rc = run("qt --algebra sl2 --order 3 --out '" + cert.string() + "'");
    if (rc != 0)
        return {false, "qt exited with " + std::to_string(rc)};
    Json j = load_json(cert);
    auto L = std::make_shared<const LieAlgebra>(load_lie_algebra(j.at("algebra")));
    Uea U(L);
    const int N = 3, d = L->dim();
    TensorPoly t = tensor_from_json(j.at("t"), d);
    HSeries Phi = series_from_json(j.at("Phi"), d), R = series_from_json(j.at("R"), d);
    expect(t == casimir_tensor(U), "t is not the Casimir");
    auto [a, b] = hexagon_defect(U, R, Phi);
    expect(zero_through(a, N), "first hexagon defect != 0 mod h^4");
    expect(zero_through(b, N), "second hexagon defect != 0 mod h^4");
    expect(unit_through(pent(U, Phi), N), "Pent(Phi) != 1");
    expect(unit_through(series_mul(U, leg_map(Phi, {3, 2, 1}, 3), Phi), N), "Phi^321 Phi != 1");
    expect(leg_map(R, {2, 1}, 2) == R, "R^21 != R");
    expect(theta_legs(U, Phi) == Phi, "Phi^theta != Phi");
    expect(theta_legs(U, R) == R, "R^theta != R");
    expect(unit_through(series_mul(U, antipode_legs(U, Phi), Phi), N), "Phi^S Phi != 1");
    expect(antipode_legs(U, R) == R, "R^S != R");
    expect(flip_h(Phi) == Phi, "Phi_{-h} != Phi");
    expect(unit_through(series_mul(U, flip_h(R), R), N), "R_{-h} R != 1");
    expect(R.coeff(0) == TensorPoly::unit(2, d) && R.coeff(1) == t, "R != 1 + h t mod h^2");
    int vrc = run("verify '" + cert.string() + "'");
    expect(vrc == 0, "verify exited with " + std::to_string(vrc));
    return expect.done("N=3, both hexagons and all symmetry conditions exact, verify exit 0");
}

void collect_coefficients(Json& j, std::vector<Json*>& out) {
    if (j.is_object()) {
        if (j.contains("c") && j["c"].is_string())
            out.push_back(&j["c"]);
        for (auto& [k, v] : j.items())
            collect_coefficients(v, out);
    } else if (j.is_array()) {
        for (auto& v : j)
            collect_coefficients(v, out);
    }
}

std::vector<Json*> payload_coefficients(Json& cert) {
    std::vector<Json*> out;
    for (const char* key : {"phi", "Phi", "f", "F", "w", "t", "R"})
        if (cert.contains(key))
            collect_coefficients(cert[key], out);
    if (cert.contains("associator"))
        for (const char* key : {"phi", "Phi"})
            collect_coefficients(cert["associator"][key], out);
    return out;
}

Outcome criterion10() {
    Expect expect;
    std::vector<fs::path> sources = {g_work / "twist.json", g_work / "associator.json", g_work / "qt.json"};
    std::vector<Json> base;
    for (const auto& p : sources) {
        if (!fs::exists(p))
            return {false, "missing certificate " + p.filename().string()};
        base.push_back(load_json(p));
    }
    std::mt19937 rng(1234);
    std::map<std::string, int> named;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t which = static_cast<std::size_t>(trial) % base.size();
        Json cert = base[which];
        auto coeffs = payload_coefficients(cert);
        std::uniform_int_distribution<std::size_t> pick(0, coeffs.size() - 1);
        std::uniform_int_distribution<int> delta(1, 9);
        Json& c = *coeffs[pick(rng)];
        Rational q = parse_rational(c.get<std::string>()) + frac(delta(rng), 7);
        if (sgn(q) == 0)
            q = 1;
        c = format_rational(q);
        fs::path mutated = g_work / ("mutated_" + std::to_string(trial) + ".json");
        fs::path err = g_work / ("mutated_" + std::to_string(trial) + ".err");
        std::ofstream(mutated) << cert.dump();
        int rc = run("verify '" + mutated.string() + "'", err.string());
        std::string msg = slurp(err);
        const std::string tag = "verification failed: ";
        auto pos = msg.find(tag);
        expect(rc == 5, "mutation " + std::to_string(trial) + " of " + sources[which].filename().string() +
                            ": verify exited with " + std::to_string(rc));
        expect(pos != std::string::npos, "mutation " + std::to_string(trial) + ": no identity named");
        if (pos != std::string::npos) {
            std::string rest = msg.substr(pos + tag.size());
            std::string identity = rest.substr(0, rest.find(" at order"));
            identity = identity.substr(0, identity.find('\n'));
            expect(!identity.empty(), "mutation " + std::to_string(trial) + ": empty identity name");
            ++named[identity];
        }
    }
    std::string detail = "20/20 rejected; identities:";
    for (const auto& [k, v] : named)
        detail += " [" + k + "]x" + std::to_string(v);
    return expect.done(detail);
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <qgdef> <work-dir>\n";
        return 2;
    }
    g_qgdef = argv[1];
    g_work = argv[2];
    fs::create_directories(g_work);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"complex axioms", criterion1},
        {"Hopf axioms", criterion2},
        {"Schouten / Yang-Baxter consistency", criterion3},
        {"pentagon solver sl2 N=4", criterion4},
        {"twist solver sl2 N=4", criterion5},
        {"closed-form exponential twists", criterion6},
        {"gauge robustness under pivot order", criterion7},
        {"CE H^3 criterion", criterion8},
        {"quasi-triangular sl2 N=3", criterion9},
        {"certificate mutation", criterion10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const Error& e) {
            o = {false, std::string(kind_name(e.kind())) + " error: " + e.what()};
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2fs", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << criteria[i].first << ", " << buf
                  << "): " << o.detail << std::endl;
        failures += o.ok ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
