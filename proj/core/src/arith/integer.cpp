#include "greenbox/arith/integer.hpp"

#include "greenbox/error.hpp"

#include <cctype>

namespace greenbox::arith {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    auto valid_int = [](const std::string& t) {
        size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw InvalidInput("not a rational number: '" + text + "'");
        return Rational(Integer(strip_plus(s)));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw InvalidInput("not a rational number: '" + text + "'");
    Integer d(den);
    if (sgn(d) == 0) throw InvalidInput("zero denominator in '" + text + "'");
    return make_rational(Integer(strip_plus(num)), d);
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace greenbox::arith
