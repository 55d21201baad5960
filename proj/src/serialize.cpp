#include "qgdef/serialize.hpp"

#include "qgdef/errors.hpp"

#include <cstdio>

namespace qgdef {

namespace {

Json terms_to_json(const TensorPoly& t) {
    Json terms = Json::array();
    for (const auto& [key, c] : t) {
        Json legs = Json::array();
        for (int l = 0; l < t.arity(); ++l) {
            Json e = Json::array();
            for (int i = 0; i < t.dim(); ++i)
                e.push_back(static_cast<int>(key[static_cast<std::size_t>(l) * t.dim() + i]));
            legs.push_back(e);
        }
        terms.push_back({{"legs", legs}, {"c", format_rational(c)}});
    }
    return terms;
}

TensorPoly terms_from_json(const Json& terms, int arity, int dim) {
    TensorPoly t(arity, dim);
    for (const auto& term : terms) {
        const auto& legs = term.at("legs");
        if (!legs.is_array() || static_cast<int>(legs.size()) != arity)
            fail(ErrorKind::Config, "series term has wrong number of legs");
        TensorKey key;
        for (const auto& leg : legs) {
            if (!leg.is_array() || static_cast<int>(leg.size()) != dim)
                fail(ErrorKind::Config, "series leg has wrong length");
            for (const auto& e : leg) {
                int v = e.get<int>();
                if (v < 0 || v > 255)
                    fail(ErrorKind::Config, "exponent out of range");
                key.push_back(static_cast<std::uint8_t>(v));
            }
        }
        if (sgn(t.coeff(key)) != 0)
            fail(ErrorKind::Config, "duplicate series term");
        Rational c = parse_rational(term.at("c").get<std::string>());
        if (sgn(c) == 0)
            fail(ErrorKind::Config, "zero coefficient stored in series");
        t.add_term(key, c);
    }
    return t;
}

} // namespace

Json tensor_to_json(const TensorPoly& t) {
    return {{"arity", t.arity()}, {"terms", terms_to_json(t)}};
}

TensorPoly tensor_from_json(const Json& j, int dim) {
    try {
        return terms_from_json(j.at("terms"), j.at("arity").get<int>(), dim);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Config, std::string("tensor schema error: ") + e.what());
    }
}

Json series_to_json(const HSeries& s) {
    Json coeffs = Json::array();
    for (int k = 0; k <= s.order(); ++k)
        coeffs.push_back({{"h", k}, {"terms", terms_to_json(s.coeff(k))}});
    return {{"arity", s.arity()}, {"order", s.order()}, {"coeffs", coeffs}};
}

HSeries series_from_json(const Json& j, int dim) {
    try {
        int arity = j.at("arity").get<int>();
        int order = j.at("order").get<int>();
        if (arity < 1 || order < 0)
            fail(ErrorKind::Config, "series arity/order out of range");
        HSeries s(arity, dim, order);
        std::vector<bool> seen(order + 1, false);
        for (const auto& c : j.at("coeffs")) {
            int k = c.at("h").get<int>();
            if (k < 0 || k > order || seen[k])
                fail(ErrorKind::Config, "series coefficient index invalid or repeated");
            seen[k] = true;
            s.coeff(k) = terms_from_json(c.at("terms"), arity, dim);
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Config, std::string("series schema error: ") + e.what());
    }
}

Json wedge_to_json(const WedgeElem& w) {
    Json terms = Json::array();
    for (const auto& [idx, c] : w.terms())
        terms.push_back({{"indices", idx}, {"c", format_rational(c)}});
    return {{"degree", w.degree()}, {"terms", terms}};
}

WedgeElem wedge_from_json(const Json& j, int dim) {
    try {
        int k = j.at("degree").get<int>();
        if (k < 1 || k > dim)
            fail(ErrorKind::Config, "wedge degree out of range");
        WedgeElem w(k);
        for (const auto& t : j.at("terms")) {
            auto idx = t.at("indices").get<std::vector<int>>();
            if (static_cast<int>(idx.size()) != k)
                fail(ErrorKind::Config, "wedge term has wrong degree");
            for (int i : idx)
                if (i < 0 || i >= dim)
                    fail(ErrorKind::Config, "wedge index out of range");
            w.add_term(idx, parse_rational(t.at("c").get<std::string>()));
        }
        return w;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Config, std::string("wedge schema error: ") + e.what());
    }
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string algebra_hash(const LieAlgebra& L) {
    return "fnv1a64:" + fnv1a64_hex(lie_algebra_to_json(L).dump());
}

} // namespace qgdef
