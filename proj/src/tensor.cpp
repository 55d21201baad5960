#include "qgdef/tensor.hpp"

#include "qgdef/errors.hpp"

#include <algorithm>
#include <numeric>

namespace qgdef {

namespace {

void expand_product(const std::vector<const UEElem*>& legs, const Rational& c, int dim, TensorPoly& out) {
    const int n = static_cast<int>(legs.size());
    std::vector<UEElem::const_iterator> its(n);
    for (int l = 0; l < n; ++l) {
        if (legs[l]->empty())
            return;
        its[l] = legs[l]->begin();
    }
    TensorKey key(static_cast<std::size_t>(n) * dim);
    while (true) {
        Rational coef = c;
        for (int l = 0; l < n; ++l) {
            std::copy(its[l]->first.begin(), its[l]->first.end(), key.begin() + static_cast<std::ptrdiff_t>(l) * dim);
            coef *= its[l]->second;
        }
        out.add_term(key, coef);
        int l = n - 1;
        while (l >= 0) {
            if (++its[l] != legs[l]->end())
                break;
            its[l] = legs[l]->begin();
            --l;
        }
        if (l < 0)
            break;
    }
}

int sign_of_permutation(std::vector<int> p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[p[i]]);
            s = -s;
        }
    return s;
}

} // namespace

TensorPoly TensorPoly::unit(int arity, int dim) {
    TensorPoly t(arity, dim);
    t.add_term(TensorKey(static_cast<std::size_t>(arity) * dim, 0), 1);
    return t;
}

void TensorPoly::add(const TensorPoly& other, const Rational& scale) {
    if (other.arity_ != arity_)
        fail(ErrorKind::Internal, "arity mismatch in tensor addition");
    terms_.add(other.terms_, scale);
}

Monomial TensorPoly::leg(const TensorKey& key, int l) const {
    return Monomial(key.begin() + static_cast<std::ptrdiff_t>(l) * dim_,
                    key.begin() + static_cast<std::ptrdiff_t>(l + 1) * dim_);
}

std::vector<int> TensorPoly::leg_degrees(const TensorKey& key) const {
    std::vector<int> d(arity_, 0);
    for (int l = 0; l < arity_; ++l)
        for (int i = 0; i < dim_; ++i)
            d[l] += key[static_cast<std::size_t>(l) * dim_ + i];
    return d;
}

int TensorPoly::max_degree() const {
    int best = 0;
    for (const auto& [k, c] : terms_) {
        int d = 0;
        for (auto e : k)
            d += e;
        best = std::max(best, d);
    }
    return best;
}

TensorPoly make_key_tensor(int arity, int dim, const TensorKey& key, const Rational& c) {
    TensorPoly t(arity, dim);
    t.add_term(key, c);
    return t;
}

TensorKey concat_legs(const std::vector<Monomial>& legs) {
    TensorKey k;
    for (const auto& m : legs)
        k.insert(k.end(), m.begin(), m.end());
    return k;
}

void expand_legwise(const TensorPoly& a, const std::function<const UEElem&(int, const Monomial&)>& per_leg,
                    TensorPoly& out, const Rational& scale) {
    std::vector<const UEElem*> legs(a.arity());
    for (const auto& [key, c] : a) {
        for (int l = 0; l < a.arity(); ++l)
            legs[l] = &per_leg(l, a.leg(key, l));
        expand_product(legs, c * scale, a.dim(), out);
    }
}

TensorPoly embed(const UEElem& a, int dim) {
    TensorPoly t(1, dim);
    for (const auto& [m, c] : a)
        t.add_term(m, c);
    return t;
}

TensorPoly coproduct(const UEElem& a, int dim) {
    return coproduct_insert(embed(a, dim), 1);
}

TensorPoly tensor_mul(const Uea& U, const TensorPoly& a, const TensorPoly& b) {
    if (a.arity() != b.arity())
        fail(ErrorKind::Internal, "arity mismatch in tensor product");
    TensorPoly out(a.arity(), a.dim());
    std::vector<const UEElem*> legs(a.arity());
    std::vector<Monomial> la(a.arity());
    for (const auto& [ka, ca] : a) {
        for (int l = 0; l < a.arity(); ++l)
            la[l] = a.leg(ka, l);
        for (const auto& [kb, cb] : b) {
            for (int l = 0; l < a.arity(); ++l)
                legs[l] = &U.multiply_monomials(la[l], b.leg(kb, l));
            expand_product(legs, ca * cb, a.dim(), out);
        }
    }
    return out;
}

TensorPoly tensor_outer(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly out(a.arity() + b.arity(), a.dim());
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            TensorKey k(ka);
            k.insert(k.end(), kb.begin(), kb.end());
            out.add_term(k, ca * cb);
        }
    return out;
}

TensorPoly leg_map(const TensorPoly& a, const std::vector<int>& slots, int target_arity) {
    if (static_cast<int>(slots.size()) != a.arity())
        fail(ErrorKind::Internal, "leg map size does not match arity");
    std::vector<bool> used(target_arity + 1, false);
    for (int s : slots) {
        if (s < 1 || s > target_arity || used[s])
            fail(ErrorKind::Internal, "invalid leg map");
        used[s] = true;
    }
    const int d = a.dim();
    TensorPoly out(target_arity, d);
    TensorKey k(static_cast<std::size_t>(target_arity) * d);
    for (const auto& [key, c] : a) {
        std::fill(k.begin(), k.end(), 0);
        for (int l = 0; l < a.arity(); ++l)
            std::copy(key.begin() + static_cast<std::ptrdiff_t>(l) * d, key.begin() + static_cast<std::ptrdiff_t>(l + 1) * d,
                      k.begin() + static_cast<std::ptrdiff_t>(slots[l] - 1) * d);
        out.add_term(k, c);
    }
    return out;
}

TensorPoly permute_legs(const TensorPoly& a, const std::vector<int>& slots) {
    return leg_map(a, slots, a.arity());
}

TensorPoly coproduct_insert(const TensorPoly& a, int position) {
    if (position < 1 || position > a.arity())
        fail(ErrorKind::Internal, "coproduct position out of range");
    const int d = a.dim();
    const int p = position - 1;
    TensorPoly out(a.arity() + 1, d);
    for (const auto& [key, c] : a) {
        Monomial m = a.leg(key, p);
        TensorKey k;
        k.reserve(key.size() + d);
        for (const auto& t : monomial_coproduct(m)) {
            k.assign(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(p) * d);
            k.insert(k.end(), t.left.begin(), t.left.end());
            k.insert(k.end(), t.right.begin(), t.right.end());
            k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(p + 1) * d, key.end());
            out.add_term(k, c * t.coeff);
        }
    }
    return out;
}

TensorPoly counit_leg(const TensorPoly& a, int position) {
    if (position < 1 || position > a.arity() || a.arity() < 2)
        fail(ErrorKind::Internal, "counit position out of range");
    const int d = a.dim();
    const int p = position - 1;
    TensorPoly out(a.arity() - 1, d);
    for (const auto& [key, c] : a) {
        bool unit = std::all_of(key.begin() + static_cast<std::ptrdiff_t>(p) * d,
                                key.begin() + static_cast<std::ptrdiff_t>(p + 1) * d, [](auto e) { return e == 0; });
        if (!unit)
            continue;
        TensorKey k(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(p) * d);
        k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(p + 1) * d, key.end());
        out.add_term(k, c);
    }
    return out;
}

TensorPoly tau(const TensorPoly& a) {
    const int n = a.arity();
    std::vector<int> slots(n);
    for (int l = 0; l < n; ++l)
        slots[l] = n - l;
    TensorPoly out = permute_legs(a, slots);
    if ((n * (n + 1) / 2) % 2 != 0)
        out.scale(-1);
    return out;
}

TensorPoly antipode_legs(const Uea& U, const TensorPoly& a) {
    TensorPoly out(a.arity(), a.dim());
    expand_legwise(a, [&](int, const Monomial& m) -> const UEElem& { return U.antipode_monomial(m); }, out);
    return out;
}

TensorPoly theta_legs(const Uea& U, const TensorPoly& a) {
    TensorPoly out(a.arity(), a.dim());
    expand_legwise(a, [&](int, const Monomial& m) -> const UEElem& { return U.theta_monomial(m); }, out);
    return out;
}

TensorPoly ad_legs(const Uea& U, const GVector& x, const TensorPoly& a) {
    UEElem X = U.from_gvector(x);
    TensorPoly out(a.arity(), a.dim());
    for (int l = 0; l < a.arity(); ++l) {
        TensorPoly xl(a.arity(), a.dim());
        for (const auto& [m, c] : X) {
            TensorKey k(static_cast<std::size_t>(a.arity()) * a.dim(), 0);
            std::copy(m.begin(), m.end(), k.begin() + static_cast<std::ptrdiff_t>(l) * a.dim());
            xl.add_term(k, c);
        }
        out.add(tensor_mul(U, xl, a));
        out.add(tensor_mul(U, a, xl), -1);
    }
    return out;
}

bool is_invariant(const Uea& U, const TensorPoly& a) {
    for (int i = 0; i < U.dim(); ++i)
        if (!ad_legs(U, U.algebra().basis_vector(i), a).is_zero())
            return false;
    return true;
}

Monomial content(const TensorKey& key, int dim) {
    Monomial m(dim, 0);
    for (std::size_t i = 0; i < key.size(); ++i)
        m[i % dim] += key[i];
    return m;
}

bool is_weight_zero(const Uea& U, const TensorPoly& a) {
    for (const auto& [key, c] : a)
        if (!U.weight_zero(content(key, a.dim())))
            return false;
    return true;
}

TensorPoly weight_zero_part(const Uea& U, const TensorPoly& a) {
    TensorPoly out(a.arity(), a.dim());
    for (const auto& [key, c] : a)
        if (U.weight_zero(content(key, a.dim())))
            out.add_term(key, c);
    return out;
}

TensorPoly to_sym(const Uea& U, const TensorPoly& a) {
    TensorPoly out(a.arity(), a.dim());
    expand_legwise(a, [&](int, const Monomial& m) -> const UEElem& { return U.sym_coordinates(m); }, out);
    return out;
}

TensorPoly from_sym(const Uea& U, const TensorPoly& a) {
    TensorPoly out(a.arity(), a.dim());
    expand_legwise(a, [&](int, const Monomial& m) -> const UEElem& { return U.symmetrized(m); }, out);
    return out;
}

Rational wedge_embedding_factor(int k) {
    mpz_class den = 1;
    den <<= static_cast<unsigned long>(k * (k - 1) / 2);
    return Rational(mpz_class(1), den);
}

TensorPoly embed_wedge(const WedgeElem& w, int dim) {
    const int k = w.degree();
    TensorPoly out(k, dim);
    const Rational ck = wedge_embedding_factor(k);
    std::vector<int> perm(k);
    for (const auto& [idx, c] : w.terms()) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            TensorKey key(static_cast<std::size_t>(k) * dim, 0);
            for (int l = 0; l < k; ++l)
                key[static_cast<std::size_t>(l) * dim + idx[perm[l]]] = 1;
            out.add_term(key, c * ck * sign_of_permutation(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

} // namespace qgdef
