#include "qgdef/uea.hpp"

#include "qgdef/errors.hpp"

namespace qgdef {

int degree(const Monomial& m) {
    int d = 0;
    for (auto e : m)
        d += e;
    return d;
}

std::vector<CoproductTerm> monomial_coproduct(const Monomial& m) {
    std::vector<CoproductTerm> out;
    Monomial k(m.size(), 0);
    // odometer over 0 ≤ k ≤ m
    while (true) {
        CoproductTerm t{k, Monomial(m.size()), Rational(1)};
        mpz_class c = 1;
        for (std::size_t i = 0; i < m.size(); ++i) {
            t.right[i] = static_cast<std::uint8_t>(m[i] - k[i]);
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), m[i], k[i]);
            c *= b;
        }
        t.coeff = Rational(c);
        out.push_back(std::move(t));
        std::size_t i = 0;
        while (i < m.size() && k[i] == m[i]) {
            k[i] = 0;
            ++i;
        }
        if (i == m.size())
            break;
        ++k[i];
    }
    return out;
}

Uea::Uea(std::shared_ptr<const LieAlgebra> algebra) : algebra_(std::move(algebra)) {
    if (algebra_->has_cartan()) {
        const auto& cd = algebra_->cartan();
        for (int i = 0; i < dim(); ++i) {
            UEElem g;
            for (const auto& [k, c] : cd.theta[i]) {
                Monomial m = unit_monomial();
                m[k] = 1;
                g.add(m, c);
            }
            theta_gen_.push_back(std::move(g));
        }
    }
}

UEElem Uea::one() const {
    UEElem u;
    u.add(unit_monomial(), 1);
    return u;
}

UEElem Uea::generator(int i) const {
    UEElem u;
    Monomial m = unit_monomial();
    m[i] = 1;
    u.add(m, 1);
    return u;
}

UEElem Uea::from_gvector(const GVector& x) const {
    UEElem u;
    for (int i = 0; i < dim(); ++i)
        if (sgn(x.coords[i]) != 0) {
            Monomial m = unit_monomial();
            m[i] = 1;
            u.add(m, x.coords[i]);
        }
    return u;
}

Uea::PairKey Uea::pair_key(const Monomial& a, const Monomial& b) const {
    PairKey k(a);
    k.insert(k.end(), b.begin(), b.end());
    return k;
}

const UEElem& Uea::left_multiply(int i, const Monomial& m) const {
    std::lock_guard lock(mutex_);
    Monomial gi = unit_monomial();
    gi[i] = 1;
    PairKey key = pair_key(gi, m);
    if (auto it = left_cache_.find(key); it != left_cache_.end())
        return it->second;
    int j = 0;
    while (j < dim() && m[j] == 0)
        ++j;
    UEElem out;
    if (j == dim() || i <= j) {
        Monomial r = m;
        ++r[i];
        out.add(r, 1);
    } else {
        // x_i x_j rest = x_j (x_i rest) + [x_i,x_j] rest
        Monomial rest = m;
        --rest[j];
        UEElem inner = left_multiply(i, rest);
        for (const auto& [mono, c] : inner)
            out.add(left_multiply(j, mono), c);
        for (const auto& [k, c] : algebra_->bracket(i, j))
            out.add(left_multiply(k, rest), c);
    }
    return left_cache_.emplace(std::move(key), std::move(out)).first->second;
}

const UEElem& Uea::multiply_monomials(const Monomial& a, const Monomial& b) const {
    std::lock_guard lock(mutex_);
    PairKey key = pair_key(a, b);
    if (auto it = mul_cache_.find(key); it != mul_cache_.end())
        return it->second;
    UEElem out;
    int last = dim() - 1;
    while (last >= 0 && a[last] == 0)
        --last;
    int first_b = 0;
    while (first_b < dim() && b[first_b] == 0)
        ++first_b;
    if (last < 0) {
        out.add(b, 1);
    } else if (last <= first_b) {
        Monomial r = a;
        for (int i = 0; i < dim(); ++i)
            r[i] += b[i];
        out.add(r, 1);
    } else {
        // a = a' x_last
        Monomial ap = a;
        --ap[last];
        UEElem right = left_multiply(last, b);
        for (const auto& [mono, c] : right)
            out.add(multiply_monomials(ap, mono), c);
    }
    return mul_cache_.emplace(std::move(key), std::move(out)).first->second;
}

UEElem Uea::multiply(const UEElem& a, const UEElem& b) const {
    UEElem out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            out.add(multiply_monomials(ma, mb), ca * cb);
    return out;
}

const UEElem& Uea::antipode_monomial(const Monomial& m) const {
    std::lock_guard lock(mutex_);
    if (auto it = antipode_cache_.find(m); it != antipode_cache_.end())
        return it->second;
    UEElem out;
    int k = 0;
    while (k < dim() && m[k] == 0)
        ++k;
    if (k == dim()) {
        out.add(m, 1);
    } else {
        // S(x_k m') = −S(m') x_k
        Monomial rest = m;
        --rest[k];
        Monomial gk = unit_monomial();
        gk[k] = 1;
        UEElem s = antipode_monomial(rest);
        for (const auto& [mono, c] : s)
            out.add(multiply_monomials(mono, gk), -c);
    }
    return antipode_cache_.emplace(m, std::move(out)).first->second;
}

UEElem Uea::antipode(const UEElem& a) const {
    UEElem out;
    for (const auto& [m, c] : a)
        out.add(antipode_monomial(m), c);
    return out;
}

Rational Uea::counit(const UEElem& a) {
    for (const auto& [m, c] : a)
        if (degree(m) == 0)
            return c;
    return 0;
}

UEElem Uea::ad_action(const GVector& x, const UEElem& a) const {
    UEElem X = from_gvector(x);
    UEElem out = multiply(X, a);
    out.add(multiply(a, X), -1);
    return out;
}

const UEElem& Uea::theta_monomial(const Monomial& m) const {
    std::lock_guard lock(mutex_);
    if (theta_gen_.empty())
        fail(ErrorKind::Precondition, "missing Cartan data");
    if (auto it = theta_cache_.find(m); it != theta_cache_.end())
        return it->second;
    UEElem out;
    int k = 0;
    while (k < dim() && m[k] == 0)
        ++k;
    if (k == dim()) {
        out.add(m, 1);
    } else {
        Monomial rest = m;
        --rest[k];
        out = multiply(theta_gen_[k], theta_monomial(rest));
    }
    return theta_cache_.emplace(m, std::move(out)).first->second;
}

UEElem Uea::theta(const UEElem& a) const {
    UEElem out;
    for (const auto& [m, c] : a)
        out.add(theta_monomial(m), c);
    return out;
}

std::vector<Rational> Uea::weight(const Monomial& m) const {
    const auto& cd = algebra_->cartan();
    std::vector<Rational> w(cd.h_indices.size());
    for (int i = 0; i < dim(); ++i)
        if (m[i] != 0)
            for (std::size_t a = 0; a < w.size(); ++a)
                w[a] += cd.basis_weight[i][a] * m[i];
    return w;
}

bool Uea::weight_zero(const Monomial& m) const {
    for (const auto& c : weight(m))
        if (sgn(c) != 0)
            return false;
    return true;
}

const UEElem& Uea::symmetrized(const Monomial& m) const {
    std::lock_guard lock(mutex_);
    if (auto it = sym_cache_.find(m); it != sym_cache_.end())
        return it->second;
    UEElem out;
    int k = degree(m);
    if (k == 0) {
        out.add(m, 1);
    } else {
        // σ(M) = (1/k) Σ_i m_i x_i σ(M − e_i)
        for (int i = 0; i < dim(); ++i) {
            if (m[i] == 0)
                continue;
            Monomial rest = m;
            --rest[i];
            UEElem s = symmetrized(rest);
            for (const auto& [mono, c] : s)
                out.add(left_multiply(i, mono), c * frac(m[i], k));
        }
    }
    return sym_cache_.emplace(m, std::move(out)).first->second;
}

const UEElem& Uea::sym_coordinates(const Monomial& m) const {
    std::lock_guard lock(mutex_);
    if (auto it = symco_cache_.find(m); it != symco_cache_.end())
        return it->second;
    UEElem out;
    out.add(m, 1);
    UEElem s = symmetrized(m);
    for (const auto& [mono, c] : s) {
        if (mono == m)
            continue;
        out.add(sym_coordinates(mono), -c);
    }
    return symco_cache_.emplace(m, std::move(out)).first->second;
}

} // namespace qgdef
