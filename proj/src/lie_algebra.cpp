#include "qgdef/lie_algebra.hpp"

#include "qgdef/errors.hpp"

#include <fstream>
#include <set>

namespace qgdef {

namespace {

void accumulate(std::vector<Rational>& acc, const SparseVec& v, const Rational& s) {
    for (const auto& [k, c] : v)
        acc[k] += c * s;
}

SparseVec to_sparse(const std::vector<Rational>& dense) {
    SparseVec out;
    for (int k = 0; k < static_cast<int>(dense.size()); ++k)
        if (sgn(dense[k]) != 0)
            out.emplace_back(k, dense[k]);
    return out;
}

std::string triple_name(const std::vector<std::string>& labels, int i, int j, int k) {
    return "(" + labels[i] + "," + labels[j] + "," + labels[k] + ")";
}

} // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<std::vector<SparseVec>> table,
                       std::optional<CartanData> cartan)
    : labels_(std::move(labels)), table_(std::move(table)), cartan_(std::move(cartan)) {
    const int n = dim();
    if (n <= 0)
        fail(ErrorKind::Config, "Lie algebra must have positive dimension");
    if (static_cast<int>(table_.size()) != n)
        fail(ErrorKind::Config, "bracket table has wrong size");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table_[i].size()) != n)
            fail(ErrorKind::Config, "bracket table has wrong size");
        if (!table_[i][i].empty())
            fail(ErrorKind::Config, "[x,x] must vanish for " + labels_[i]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> s(n);
            accumulate(s, table_[i][j], 1);
            accumulate(s, table_[j][i], 1);
            for (const auto& c : s)
                if (sgn(c) != 0)
                    fail(ErrorKind::Config, "bracket is not antisymmetric on (" + labels_[i] + "," + labels_[j] + ")");
        }
    if (auto bad = jacobi_violation(table_))
        fail(ErrorKind::Config, "Jacobi identity fails on " + triple_name(labels_, (*bad)[0], (*bad)[1], (*bad)[2]));
    if (!cartan_)
        return;

    CartanData& cd = *cartan_;
    const int r = static_cast<int>(cd.h_indices.size());
    std::vector<int> role(n, -1); // 0 Cartan, 1 positive, 2 negative
    std::vector<int> partner(n, -1);
    std::vector<int> root_of(n, -1);
    for (int h : cd.h_indices) {
        if (h < 0 || h >= n || role[h] != -1)
            fail(ErrorKind::Config, "Cartan index out of range or repeated");
        role[h] = 0;
    }
    for (int a = 0; a < static_cast<int>(cd.positive_roots.size()); ++a) {
        const auto& pr = cd.positive_roots[a];
        if (static_cast<int>(pr.weight.size()) != r)
            fail(ErrorKind::Config, "root weight has wrong length");
        for (int idx : {pr.e, pr.f})
            if (idx < 0 || idx >= n || role[idx] != -1)
                fail(ErrorKind::Config, "root vector index out of range or repeated");
        role[pr.e] = 1;
        role[pr.f] = 2;
        partner[pr.e] = pr.f;
        partner[pr.f] = pr.e;
        root_of[pr.e] = root_of[pr.f] = a;
    }
    for (int i = 0; i < n; ++i)
        if (role[i] == -1)
            fail(ErrorKind::Config, "Cartan data does not cover basis element " + labels_[i]);

    cd.basis_weight.assign(n, std::vector<Rational>(r));
    for (int i = 0; i < n; ++i) {
        if (role[i] == 0)
            continue;
        const auto& w = cd.positive_roots[root_of[i]].weight;
        for (int a = 0; a < r; ++a)
            cd.basis_weight[i][a] = role[i] == 1 ? w[a] : Rational(-w[a]);
    }
    for (int a = 0; a < r; ++a) {
        int h = cd.h_indices[a];
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> expect(n);
            expect[i] = cd.basis_weight[i][a];
            std::vector<Rational> got(n);
            accumulate(got, table_[h][i], 1);
            if (got != expect)
                fail(ErrorKind::Config, "ad(" + labels_[h] + ") is not diagonal with the declared weight on " + labels_[i]);
        }
    }
    cd.theta.assign(n, {});
    for (int i = 0; i < n; ++i)
        cd.theta[i] = {{role[i] == 0 ? i : partner[i], Rational(-1)}};
    // θ is an automorphism: θ[x_i,x_j] = [θx_i,θx_j]
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Rational> lhs(n), rhs(n);
            for (const auto& [k, c] : table_[i][j])
                accumulate(lhs, cd.theta[k], c);
            for (const auto& [a, ca] : cd.theta[i])
                for (const auto& [b, cb] : cd.theta[j])
                    accumulate(rhs, table_[a][b], ca * cb);
            if (lhs != rhs)
                fail(ErrorKind::Config, "Cartan involution is not an automorphism on (" + labels_[i] + "," + labels_[j] + ")");
        }
}

std::optional<std::array<int, 3>> jacobi_violation(const std::vector<std::vector<SparseVec>>& table) {
    const int n = static_cast<int>(table.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::vector<Rational> s(n);
                auto cyc = [&](int a, int b, int c) {
                    for (const auto& [m, coef] : table[a][b])
                        accumulate(s, table[m][c], coef);
                };
                cyc(i, j, k);
                cyc(j, k, i);
                cyc(k, i, j);
                for (const auto& c : s)
                    if (sgn(c) != 0)
                        return std::array<int, 3>{i, j, k};
            }
    return std::nullopt;
}

GVector LieAlgebra::bracket(const GVector& x, const GVector& y) const {
    std::vector<Rational> out(dim());
    for (int i = 0; i < dim(); ++i) {
        if (sgn(x.coords[i]) == 0)
            continue;
        for (int j = 0; j < dim(); ++j)
            if (sgn(y.coords[j]) != 0)
                accumulate(out, table_[i][j], x.coords[i] * y.coords[j]);
    }
    return {out};
}

GVector LieAlgebra::basis_vector(int i) const {
    GVector v{std::vector<Rational>(dim())};
    v.coords[i] = 1;
    return v;
}

const CartanData& LieAlgebra::cartan() const {
    if (!cartan_)
        fail(ErrorKind::Precondition, "missing Cartan data");
    return *cartan_;
}

LieAlgebra load_lie_algebra(const nlohmann::json& doc) {
    try {
        if (!doc.is_object())
            fail(ErrorKind::Config, "algebra document must be a JSON object");
        int n = doc.at("dim").get<int>();
        auto labels = doc.at("basis").get<std::vector<std::string>>();
        if (n <= 0 || static_cast<int>(labels.size()) != n)
            fail(ErrorKind::Config, "basis length does not match dim");
        if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
            fail(ErrorKind::Config, "basis labels must be distinct");
        std::vector<std::vector<SparseVec>> table(n, std::vector<SparseVec>(n));
        std::set<std::pair<int, int>> seen;
        for (const auto& b : doc.value("brackets", nlohmann::json::array())) {
            int i = b.at("i").get<int>(), j = b.at("j").get<int>();
            if (i < 0 || j < 0 || i >= n || j >= n)
                fail(ErrorKind::Config, "bracket index out of range");
            if (i == j)
                fail(ErrorKind::Config, "bracket entry with i == j");
            if (!seen.insert({std::min(i, j), std::max(i, j)}).second)
                fail(ErrorKind::Config, "duplicate bracket entry");
            std::vector<Rational> dense(n);
            for (const auto& t : b.at("terms")) {
                if (!t.is_array() || t.size() != 2)
                    fail(ErrorKind::Config, "bracket term must be [\"p/q\", k]");
                Rational c = parse_rational(t[0].get<std::string>());
                int k = t[1].get<int>();
                if (k < 0 || k >= n)
                    fail(ErrorKind::Config, "bracket term index out of range");
                dense[k] += c;
            }
            table[i][j] = to_sparse(dense);
            for (auto& c : dense)
                c = -c;
            table[j][i] = to_sparse(dense);
        }
        std::optional<CartanData> cartan;
        if (doc.contains("cartan") && !doc["cartan"].is_null()) {
            const auto& c = doc["cartan"];
            CartanData cd;
            cd.h_indices = c.at("h_indices").get<std::vector<int>>();
            for (const auto& pr : c.at("positive_roots")) {
                PositiveRoot root;
                for (const auto& w : pr.at("weight"))
                    root.weight.push_back(parse_rational(w.get<std::string>()));
                root.e = pr.at("e").get<int>();
                root.f = pr.at("f").get<int>();
                cd.positive_roots.push_back(std::move(root));
            }
            cartan = std::move(cd);
        }
        return LieAlgebra(std::move(labels), std::move(table), std::move(cartan));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Config, std::string("algebra schema error: ") + e.what());
    }
}

LieAlgebra load_lie_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::Config, "cannot open algebra file " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Config, "cannot parse " + path + ": " + e.what());
    }
    return load_lie_algebra(doc);
}

nlohmann::json lie_algebra_to_json(const LieAlgebra& L) {
    nlohmann::json doc;
    doc["dim"] = L.dim();
    doc["basis"] = L.labels();
    nlohmann::json brackets = nlohmann::json::array();
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i + 1; j < L.dim(); ++j) {
            if (L.bracket(i, j).empty())
                continue;
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [k, c] : L.bracket(i, j))
                terms.push_back({format_rational(c), k});
            brackets.push_back({{"i", i}, {"j", j}, {"terms", terms}});
        }
    doc["brackets"] = brackets;
    if (L.has_cartan()) {
        const auto& cd = L.cartan();
        nlohmann::json roots = nlohmann::json::array();
        for (const auto& pr : cd.positive_roots) {
            nlohmann::json w = nlohmann::json::array();
            for (const auto& q : pr.weight)
                w.push_back(format_rational(q));
            roots.push_back({{"weight", w}, {"e", pr.e}, {"f", pr.f}});
        }
        doc["cartan"] = {{"h_indices", cd.h_indices}, {"positive_roots", roots}};
    }
    return doc;
}

std::vector<std::vector<Rational>> killing_form(const LieAlgebra& L) {
    const int n = L.dim();
    // ad(x_i)_{k,j} = c_{ij}^k
    std::vector<std::vector<std::vector<Rational>>> ad(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : L.bracket(i, j))
                ad[i][k][j] = c;
    std::vector<std::vector<Rational>> K(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational tr = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (sgn(ad[i][a][b]) != 0 && sgn(ad[j][b][a]) != 0)
                        tr += ad[i][a][b] * ad[j][b][a];
            K[i][j] = K[j][i] = tr;
        }
    return K;
}

WedgeElem dj_r_matrix(const LieAlgebra& L) {
    const auto& cd = L.cartan();
    WedgeElem f(2);
    for (const auto& pr : cd.positive_roots)
        f.add_term({pr.e, pr.f}, 1);
    return f;
}

GVector cartan_involution(const LieAlgebra& L, const GVector& x) {
    const auto& cd = L.cartan();
    std::vector<Rational> out(L.dim());
    for (int i = 0; i < L.dim(); ++i)
        if (sgn(x.coords[i]) != 0)
            accumulate(out, cd.theta[i], x.coords[i]);
    return {out};
}

} // namespace qgdef
