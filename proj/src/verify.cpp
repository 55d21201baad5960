#include "qgdef/verify.hpp"

#include "qgdef/cohomology.hpp"
#include "qgdef/errors.hpp"
#include "qgdef/hseries.hpp"
#include "qgdef/wedge.hpp"

#include <memory>

namespace qgdef {

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const IdentityCheck* VerificationReport::first_failure() const {
    for (const auto& c : checks)
        if (c.required && !c.passed)
            return &c;
    return nullptr;
}

Json report_to_json(const VerificationReport& r) {
    Json checks = Json::array();
    auto one = [](const IdentityCheck& c) {
        Json j = {{"identity", c.identity}, {"passed", c.passed}, {"required", c.required}};
        if (c.failing_order)
            j["failing_order"] = *c.failing_order;
        if (!c.detail.empty())
            j["detail"] = c.detail;
        return j;
    };
    for (const auto& c : r.checks)
        checks.push_back(one(c));
    Json out = {{"kind", r.kind}, {"passed", r.passed()}, {"checks", checks}};
    if (const auto* f = r.first_failure())
        out["first_failure"] = one(*f);
    return out;
}

namespace {

struct Ctx {
    std::shared_ptr<const LieAlgebra> L;
    std::unique_ptr<Uea> U;
    int N = 0;
    int dim = 0;
    VerificationReport* report = nullptr;

    const Uea& u() const { return *U; }
    bool cartan() const { return L->has_cartan(); }

    void add(std::string name, std::optional<int> failing, bool required = true, std::string detail = {}) {
        IdentityCheck c;
        c.identity = std::move(name);
        c.passed = !failing.has_value();
        c.failing_order = failing;
        c.required = required;
        c.detail = std::move(detail);
        report->checks.push_back(std::move(c));
    }
    void add_bool(std::string name, bool ok, bool required = true, std::string detail = {}) {
        IdentityCheck c;
        c.identity = std::move(name);
        c.passed = ok;
        c.required = required;
        c.detail = std::move(detail);
        report->checks.push_back(std::move(c));
    }
};

std::optional<int> first_diff(const HSeries& a, const HSeries& b, int N) {
    for (int k = 0; k <= N; ++k) {
        const bool za = k > a.order(), zb = k > b.order();
        if (za && zb)
            break;
        TensorPoly ca = za ? TensorPoly(a.arity(), a.dim()) : a.coeff(k);
        TensorPoly cb = zb ? TensorPoly(b.arity(), b.dim()) : b.coeff(k);
        if (!(ca == cb))
            return k;
    }
    return std::nullopt;
}

std::optional<int> first_nonzero(const HSeries& a, int N) {
    for (int k = 0; k <= std::min(N, a.order()); ++k)
        if (!a.coeff(k).is_zero())
            return k;
    return std::nullopt;
}

HSeries mul(const Ctx& c, const HSeries& a, const HSeries& b) { return series_mul(c.u(), a, b); }
HSeries unit(const Ctx& c, int arity) { return HSeries::unit(arity, c.dim, c.N); }
HSeries perm(const HSeries& a, std::vector<int> slots) { return leg_map(a, slots, static_cast<int>(slots.size())); }

std::optional<int> invariance_failure(const Ctx& c, const HSeries& a) {
    for (int k = 0; k <= a.order(); ++k)
        if (!is_invariant(c.u(), a.coeff(k)))
            return k;
    return std::nullopt;
}

std::optional<int> weight_failure(const Ctx& c, const HSeries& a) {
    for (int k = 0; k <= a.order(); ++k)
        if (!is_weight_zero(c.u(), a.coeff(k)))
            return k;
    return std::nullopt;
}

struct StopChecks {};

HSeries read_series(Ctx& c, const Json& j, const std::string& key, int arity) {
    if (!j.contains(key))
        fail(ErrorKind::Config, "certificate is missing \"" + key + "\"");
    HSeries s = series_from_json(j.at(key), c.dim);
    if (s.arity() != arity)
        fail(ErrorKind::Config, "series \"" + key + "\" has the wrong arity");
    if (s.order() < c.N)
        fail(ErrorKind::Config, "series \"" + key + "\" is shorter than the certified order");
    // Every certified series is invertible; later checks rely on it.
    if (!(s.coeff(0) == TensorPoly::unit(arity, c.dim))) {
        c.add(key + " has constant term 1", 0);
        throw StopChecks{};
    }
    return s.truncated(c.N);
}

void check_associator(Ctx& c, const Json& a, const std::string& prefix) {
    const Json& opt = a.at("options");
    const bool cond_b = opt.at("cond_b").get<bool>();
    const bool cond_c = opt.at("cond_c").get<bool>();
    const bool cond_d = opt.at("cond_d").get<bool>();
    const bool even = opt.at("even_parameter").get<bool>();
    WedgeElem phi = wedge_from_json(a.at("phi"), c.dim);
    HSeries Phi = read_series(c, a, "Phi", 3);

    {
        HSeries lead = unit(c, 3);
        const int p = even ? 2 : 1;
        if (p <= c.N)
            lead.add_at(p, embed_wedge(phi, c.dim));
        c.add(prefix + "leading term Phi = 1 + h^p phi", first_diff(Phi.truncated(p), lead.truncated(p), p));
    }
    {
        HSeries lhs = mul(c, mul(c, pad_left(Phi, 4), coproduct_insert(Phi, 2)), pad_right(Phi, 4));
        HSeries rhs = mul(c, coproduct_insert(Phi, 3), coproduct_insert(Phi, 1));
        c.add(prefix + "pentagon", first_diff(lhs, rhs, c.N));
    }
    if (cond_b)
        c.add(prefix + "Phi^{321} Phi = 1", first_diff(mul(c, perm(Phi, {3, 2, 1}), Phi), unit(c, 3), c.N));
    if (cond_c)
        c.add(prefix + "Phi^theta = Phi", first_diff(theta_legs(c.u(), Phi), Phi, c.N));
    if (cond_d)
        c.add(prefix + "Phi^S Phi = 1", first_diff(mul(c, antipode_legs(c.u(), Phi), Phi), unit(c, 3), c.N));
    if (even)
        c.add(prefix + "Phi_{-h} = Phi_h", first_diff(flip_h(Phi), Phi, c.N));
    c.add(prefix + "counit (id x eps x id) Phi = 1", first_diff(counit_leg(Phi, 2), unit(c, 2), c.N));
    c.add(prefix + "counit (eps x id x id) Phi = 1", first_diff(counit_leg(Phi, 1), unit(c, 2), c.N), false);
    c.add(prefix + "counit (id x id x eps) Phi = 1", first_diff(counit_leg(Phi, 3), unit(c, 2), c.N), false);
    c.add(prefix + "g-invariance of Phi", invariance_failure(c, Phi));
}

HSeries twisted(const Ctx& c, const HSeries& F, const HSeries& Finv, const UEElem& a) {
    HSeries d = HSeries::constant(coproduct(a, c.dim), c.N);
    return mul(c, mul(c, F, d), Finv);
}

// Σ F₂ S(F₁), term by term.
HSeries w_element(const Ctx& c, const HSeries& F) {
    HSeries w(1, c.dim, c.N);
    for (int k = 0; k <= c.N; ++k) {
        UEElem acc;
        for (const auto& [key, coef] : F.coeff(k)) {
            UEElem f1, f2;
            f1.add(F.coeff(k).leg(key, 0), 1);
            f2.add(F.coeff(k).leg(key, 1), 1);
            acc.add(c.u().multiply(f2, c.u().antipode(f1)), coef);
        }
        w.coeff(k) = embed(acc, c.dim);
    }
    return w;
}

HSeries multiply_out(const Ctx& c, const HSeries& a) {
    HSeries out(1, c.dim, a.order());
    for (int k = 0; k <= a.order(); ++k) {
        UEElem acc;
        for (const auto& [key, coef] : a.coeff(k)) {
            UEElem l, r;
            l.add(a.coeff(k).leg(key, 0), 1);
            r.add(a.coeff(k).leg(key, 1), 1);
            acc.add(c.u().multiply(l, r), coef);
        }
        out.coeff(k) = embed(acc, c.dim);
    }
    return out;
}

HSeries antipode_first_leg(const Ctx& c, const HSeries& a) {
    HSeries out(2, c.dim, a.order());
    for (int k = 0; k <= a.order(); ++k)
        for (const auto& [key, coef] : a.coeff(k)) {
            UEElem l;
            l.add(a.coeff(k).leg(key, 0), 1);
            Monomial r = a.coeff(k).leg(key, 1);
            for (const auto& [m, v] : c.u().antipode(l))
                out.coeff(k).add_term(concat_legs({m, r}), coef * v);
        }
    return out;
}

void check_twist(Ctx& c, const Json& cert) {
    check_associator(c, cert.at("associator"), "associator: ");
    const bool theta = cert.at("options").at("theta").get<bool>();
    WedgeElem f = wedge_from_json(cert.at("f"), c.dim);
    WedgeElem phi = wedge_from_json(cert.at("associator").at("phi"), c.dim);
    HSeries Phi = read_series(c, cert.at("associator"), "Phi", 3);
    HSeries F = read_series(c, cert, "F", 2);
    HSeries w = read_series(c, cert, "w", 1);

    WedgeElem expect = schouten(*c.L, f, f);
    expect.scale(Rational(2, 3));
    c.add_bool("phi = (2/3)[[f,f]]", expect == phi);
    {
        HSeries lead = unit(c, 2);
        if (c.N >= 1)
            lead.add_at(1, embed_wedge(f, c.dim));
        c.add("leading term F = 1 + h f", first_diff(F.truncated(1), lead.truncated(1), 1));
    }
    {
        HSeries lhs = mul(c, mul(c, pad_left(F, 3), coproduct_insert(F, 2)), Phi);
        HSeries rhs = mul(c, pad_right(F, 3), coproduct_insert(F, 1));
        c.add("twist equation", first_diff(lhs, rhs, c.N));
    }
    HSeries F21 = perm(F, {2, 1});
    c.add("unitarity (F^{21})^S F = 1", first_diff(mul(c, antipode_legs(c.u(), F21), F), unit(c, 2), c.N));
    c.add("unitarity F^S F^{21} = 1", first_diff(mul(c, antipode_legs(c.u(), F), F21), unit(c, 2), c.N), false);
    c.add("parity F^{21}_h = F_{-h}", first_diff(F21, flip_h(F), c.N));
    if (c.cartan())
        c.add("Cartan invariance of F", weight_failure(c, F));
    if (theta)
        c.add("parity F^theta_h = F_{-h}", first_diff(theta_legs(c.u(), F), flip_h(F), c.N), false);

    c.add("w = sum F_2 S(F_1)", first_diff(w, w_element(c, F), c.N));

    HSeries Finv = series_inverse(c.u(), F);
    HSeries winv = series_inverse(c.u(), w);
    std::optional<int> coassoc, undeformed, infinitesimal, antipode_ax;
    auto worst = [](std::optional<int>& acc, std::optional<int> v) {
        if (v && (!acc || *v < *acc))
            acc = v;
    };
    for (int i = 0; i < c.dim; ++i) {
        UEElem a = c.u().generator(i);
        HSeries D = twisted(c, F, Finv, a);
        HSeries l = mul(c, mul(c, pad_right(F, 3), coproduct_insert(D, 1)), pad_right(Finv, 3));
        HSeries r = mul(c, mul(c, pad_left(F, 3), coproduct_insert(D, 2)), pad_left(Finv, 3));
        worst(coassoc, first_diff(l, r, c.N));

        if (c.N >= 1) {
            TensorPoly fi = embed_wedge(f, c.dim);
            TensorPoly da = coproduct(a, c.dim);
            TensorPoly comm = tensor_mul(c.u(), fi, da);
            comm.add(tensor_mul(c.u(), da, fi), -1);
            if (!(D.coeff(1) == comm))
                worst(infinitesimal, 1);
        }

        HSeries sd = antipode_first_leg(c, D);
        HSeries conj = mul(c, mul(c, pad_right(winv, 2), sd), pad_right(w, 2));
        worst(antipode_ax, first_nonzero(multiply_out(c, conj), c.N));
    }
    if (c.cartan())
        for (int hi : c.L->cartan().h_indices) {
            HSeries D = twisted(c, F, Finv, c.u().generator(hi));
            worst(undeformed, first_diff(D, HSeries::constant(coproduct(c.u().generator(hi), c.dim), c.N), c.N));
        }
    c.add("coassociativity of the twisted coproduct", coassoc);
    c.add("order-h term of the twisted coproduct is [f, Delta]", infinitesimal);
    if (c.cartan())
        c.add("twisted coproduct is undeformed on the Cartan subalgebra", undeformed);
    c.add("antipode axiom for w^{-1} S w", antipode_ax);
}

void check_qt(Ctx& c, const Json& cert) {
    const bool theta = cert.at("options").at("theta").get<bool>();
    TensorPoly t = tensor_from_json(cert.at("t"), c.dim);
    HSeries Phi = read_series(c, cert, "Phi", 3);
    HSeries R = read_series(c, cert, "R", 2);

    c.add_bool("t is symmetric", leg_map(t, {2, 1}, 2) == t);
    c.add_bool("t is invariant", is_invariant(c.u(), t));
    {
        HSeries lead = unit(c, 2);
        if (c.N >= 1)
            lead.add_at(1, t);
        c.add("R = 1 + h t mod h^2", first_diff(R.truncated(1), lead.truncated(1), 1));
        HSeries plead = unit(c, 3);
        c.add("Phi = 1 mod h^2", first_diff(Phi.truncated(1), plead.truncated(1), 1));
    }
    {
        HSeries lhs = mul(c, mul(c, pad_left(Phi, 4), coproduct_insert(Phi, 2)), pad_right(Phi, 4));
        HSeries rhs = mul(c, coproduct_insert(Phi, 3), coproduct_insert(Phi, 1));
        c.add("pentagon", first_diff(lhs, rhs, c.N));
    }
    HSeries Pinv = series_inverse(c.u(), Phi);
    {
        HSeries rhs = mul(c, perm(Phi, {3, 1, 2}), leg_map(R, {1, 3}, 3));
        rhs = mul(c, rhs, perm(Pinv, {1, 3, 2}));
        rhs = mul(c, rhs, leg_map(R, {2, 3}, 3));
        rhs = mul(c, rhs, Phi);
        c.add("first hexagon", first_diff(coproduct_insert(R, 1), rhs, c.N));
    }
    {
        // Φ^{231}(id⊗Δ)R Φ = R^{13} Φ^{213} R^{12}
        HSeries lhs = mul(c, mul(c, perm(Phi, {2, 3, 1}), coproduct_insert(R, 2)), Phi);
        HSeries rhs = mul(c, mul(c, leg_map(R, {1, 3}, 3), perm(Phi, {2, 1, 3})), leg_map(R, {1, 2}, 3));
        c.add("second hexagon", first_diff(lhs, rhs, c.N));
    }
    c.add("Phi^{321} Phi = 1", first_diff(mul(c, perm(Phi, {3, 2, 1}), Phi), unit(c, 3), c.N));
    c.add("R^{21} = R", first_diff(perm(R, {2, 1}), R, c.N));
    if (theta) {
        c.add("Phi^theta = Phi", first_diff(theta_legs(c.u(), Phi), Phi, c.N));
        c.add("R^theta = R", first_diff(theta_legs(c.u(), R), R, c.N));
    }
    c.add("Phi^S Phi = 1", first_diff(mul(c, antipode_legs(c.u(), Phi), Phi), unit(c, 3), c.N));
    c.add("R^S = R", first_diff(antipode_legs(c.u(), R), R, c.N));
    c.add("Phi_{-h} = Phi_h", first_diff(flip_h(Phi), Phi, c.N));
    c.add("R_{-h} R_h = 1", first_diff(mul(c, flip_h(R), R), unit(c, 2), c.N));
    c.add("counit (id x eps x id) Phi = 1", first_diff(counit_leg(Phi, 2), unit(c, 2), c.N));
    c.add("g-invariance of Phi", invariance_failure(c, Phi));
    c.add("g-invariance of R", invariance_failure(c, R));
}

} // namespace

VerificationReport verify_certificate(const Json& cert) {
    VerificationReport report;
    try {
        if (!cert.is_object())
            fail(ErrorKind::Config, "certificate must be a JSON object");
        report.kind = cert.at("kind").get<std::string>();
        Ctx c;
        c.report = &report;
        c.L = std::make_shared<const LieAlgebra>(load_lie_algebra(cert.at("algebra")));
        c.U = std::make_unique<Uea>(c.L);
        c.dim = c.L->dim();
        c.N = cert.at("order").get<int>();
        if (c.N < 1)
            fail(ErrorKind::Config, "certified order must be at least 1");
        c.add_bool("algebra hash", algebra_hash(*c.L) == cert.at("algebra_hash").get<std::string>());
        if (report.kind == "associator")
            check_associator(c, cert, "");
        else if (report.kind == "twist")
            check_twist(c, cert);
        else if (report.kind == "quasitriangular")
            check_qt(c, cert);
        else
            fail(ErrorKind::Config, "unknown certificate kind \"" + report.kind + "\"");
    } catch (const StopChecks&) {
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Config, std::string("certificate schema error: ") + e.what());
    }
    return report;
}

} // namespace qgdef
