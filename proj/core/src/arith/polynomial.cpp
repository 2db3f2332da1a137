#include "greenbox/arith/polynomial.hpp"

#include "greenbox/error.hpp"

#include <cctype>

namespace greenbox::arith {

Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p.coefficients()) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Integer g = content(p);
    if (sgn(p.lead()) < 0) g = -g;
    std::vector<Integer> c = p.coefficients();
    for (auto& a : c) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
}

bool divides(const IntPoly& b, const IntPoly& a, IntPoly* q) {
    if (b.is_zero()) throw InvalidInput("division by zero polynomial");
    if (a.is_zero()) {
        if (q) *q = IntPoly();
        return true;
    }
    int db = b.degree();
    if (a.degree() < db) return false;
    std::vector<Integer> r = a.coefficients();
    std::vector<Integer> quot(static_cast<size_t>(a.degree() - db + 1));
    const Integer& lb = b.lead();
    const auto& bc = b.coefficients();
    for (int k = a.degree() - db; k >= 0; --k) {
        Integer& top = r[static_cast<size_t>(k + db)];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
        Integer f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        quot[static_cast<size_t>(k)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k + j)] -= f * bc[static_cast<size_t>(j)];
    }
    for (const auto& c : r)
        if (sgn(c) != 0) return false;
    if (q) *q = IntPoly(std::move(quot));
    return true;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    IntPoly q;
    if (!divides(b, a, &q)) throw VerificationFailure("polynomial division is not exact");
    return q;
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r = a.coefficients();
    int db = b.degree();
    const auto& bc = b.coefficients();
    const Integer& lb = b.lead();
    int dr = a.degree();
    while (dr >= db) {
        Integer top = r[static_cast<size_t>(dr)];
        for (auto& c : r) c *= lb;
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(dr - db + j)] -= top * bc[static_cast<size_t>(j)];
        r.resize(static_cast<size_t>(dr));
        while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
        dr = static_cast<int>(r.size()) - 1;
    }
    return IntPoly(std::move(r));
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly x = primitive_part(a), y = primitive_part(b);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_rem(x, y);
        x = y;
        y = primitive_part(r);
    }
    return primitive_part(x);
}

RatPoly to_rat(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coefficients().size());
    for (const auto& a : p.coefficients()) c.emplace_back(a);
    return RatPoly(std::move(c));
}

IntPoly to_primitive_int(const RatPoly& p) {
    Integer l = 1;
    for (const auto& a : p.coefficients()) l = lcm(l, a.get_den());
    std::vector<Integer> c;
    for (const auto& a : p.coefficients()) {
        Rational s = a * Rational(l);
        c.push_back(s.get_num());
    }
    return primitive_part(IntPoly(std::move(c)));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw InvalidInput("division by zero polynomial");
    std::vector<Rational> r = a.coefficients();
    int db = b.degree();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<Rational> q(static_cast<size_t>(a.degree() - db + 1));
    const auto& bc = b.coefficients();
    Rational inv_lead = 1 / b.lead();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational f = r[static_cast<size_t>(k + db)] * inv_lead;
        q[static_cast<size_t>(k)] = f;
        if (sgn(f) == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k + j)] -= f * bc[static_cast<size_t>(j)];
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    Rational inv = 1 / p.lead();
    return p.scaled(inv);
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

RatPoly xgcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t) {
    RatPoly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = s0;
        t = t0;
        return r0;
    }
    Rational inv = 1 / r0.lead();
    s = s0.scaled(inv);
    t = t0.scaled(inv);
    return r0.scaled(inv);
}

namespace {

template <class T>
std::string render(const std::vector<T>& c, const std::string& var) {
    if (c.empty()) return "0";
    std::string out;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        const T& a = c[static_cast<size_t>(i)];
        if (sgn(a) == 0) continue;
        T mag = abs(a);
        bool neg = sgn(a) < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        bool unit = (mag == 1);
        if (i == 0) {
            out += mag.get_str();
        } else {
            if (!unit) out += mag.get_str() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace

std::string to_string(const IntPoly& p, const std::string& var) { return render(p.coefficients(), var); }
std::string to_string(const RatPoly& p, const std::string& var) { return render(p.coefficients(), var); }

IntPoly parse_int_poly(const std::string& text, const std::string& var) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw InvalidInput("empty polynomial");
    IntPoly out;
    size_t i = 0;
    auto fail = [&] { throw InvalidInput("malformed polynomial: '" + text + "'"); };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            fail();
        }
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        Integer coef = 1;
        bool has_num = i > start;
        if (has_num) coef = Integer(s.substr(start, i - start));
        int deg = 0;
        if (s.compare(i, var.size(), var) == 0 || (has_num && i < s.size() && s[i] == '*')) {
            if (s[i] == '*') ++i;
            if (s.compare(i, var.size(), var) != 0) fail();
            i += var.size();
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t e0 = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == e0) fail();
                deg = std::stoi(s.substr(e0, i - e0));
            }
        } else if (!has_num) {
            fail();
        }
        out += IntPoly::monomial(coef * sign, deg);
    }
    return out;
}

IntPoly chebyshev_u(int k) {
    if (k < 0) throw InvalidInput("chebyshev_u: negative index");
    IntPoly u0(1), u1 = IntPoly::x();
    if (k == 0) return u0;
    for (int i = 2; i <= k; ++i) {
        IntPoly u2 = IntPoly::x() * u1 - u0;
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return u1;
}

}  // namespace greenbox::arith
