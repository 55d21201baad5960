#include "qgdef/rational.hpp"

#include "qgdef/errors.hpp"

#include <cctype>

namespace qgdef {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        fail(ErrorKind::Config, "malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n[0] == '+')
        n.erase(0, 1);
    mpz_class a(n, 10), b(std::string(den), 10);
    if (b == 0)
        fail(ErrorKind::Config, "zero denominator in '" + std::string(text) + "'");
    Rational q(a, b);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace qgdef
