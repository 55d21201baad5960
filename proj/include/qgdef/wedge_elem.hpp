#pragma once

#include "qgdef/rational.hpp"

#include <vector>

namespace qgdef {

// Element of ∧^k g; keys are strictly increasing index tuples.
class WedgeElem {
  public:
    WedgeElem() = default;
    explicit WedgeElem(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    // Adds c·x_{i1}∧...∧x_{ik} for an arbitrary index list.
    void add_term(std::vector<int> indices, const Rational& c);
    void add(const WedgeElem& other, const Rational& scale = 1);
    void scale(const Rational& s) { terms_.scale(s); }
    Rational coeff(const std::vector<int>& sorted) const { return terms_.coeff(sorted); }
    const LinComb<std::vector<int>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const WedgeElem& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }

  private:
    int degree_ = 0;
    LinComb<std::vector<int>> terms_;
};

WedgeElem wedge_product(const WedgeElem& a, const WedgeElem& b);

} // namespace qgdef
