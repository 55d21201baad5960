#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace qgdef {

using Rational = mpq_class;

inline Rational frac(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// Accepts "p", "p/q", with optional sign; result is canonicalized.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

// Sparse rational combination over an ordered key type; zero coefficients are never stored.
template <class Key>
class LinComb {
  public:
    using map_type = std::map<Key, Rational>;
    using const_iterator = typename map_type::const_iterator;

    void add(const Key& k, const Rational& c) {
        if (sgn(c) == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0)
                terms_.erase(it);
        }
    }
    void add(const LinComb& other, const Rational& scale = 1) {
        if (sgn(scale) == 0)
            return;
        for (const auto& [k, c] : other.terms_)
            add(k, c * scale);
    }
    void scale(const Rational& s) {
        if (sgn(s) == 0) {
            terms_.clear();
            return;
        }
        for (auto& kv : terms_)
            kv.second *= s;
    }
    Rational coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    void clear() { terms_.clear(); }
    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

  private:
    map_type terms_;
};

} // namespace qgdef
