#pragma once

#include "greenbox/arith/integer.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace greenbox::arith {

// Dense univariate polynomial; coefficient i multiplies x^i.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const T& c) : c_{c} { trim(); }
    Polynomial(long c) : c_{T(c)} { trim(); }
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(const T& c, int deg) {
        std::vector<T> v(static_cast<size_t>(deg) + 1, T(0));
        v[static_cast<size_t>(deg)] = c;
        return Polynomial(std::move(v));
    }
    static Polynomial x() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coefficients() const { return c_; }
    T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0); }
    const T& lead() const { return c_.back(); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    Polynomial scaled(const T& s) const {
        Polynomial r = *this;
        for (auto& a : r.c_) a *= s;
        r.trim();
        return r;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned e) const {
        Polynomial r(T(1)), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    // Horner evaluation; U must support U * Rational and U + Rational.
    template <class U>
    U evaluate(const U& x) const {
        U acc = x * Rational(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(r));
    }

    Polynomial compose(const Polynomial& inner) const {
        Polynomial acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Polynomial(*it);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

Integer content(const IntPoly& p);
// Divides out the content and makes the leading coefficient positive.
IntPoly primitive_part(const IntPoly& p);
// Exact quotient a / b over the integers; throws if b does not divide a.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
// Returns true and sets q when b divides a over the integers.
bool divides(const IntPoly& b, const IntPoly& a, IntPoly* q = nullptr);
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

RatPoly to_rat(const IntPoly& p);
// Clears denominators and returns the primitive integer multiple.
IntPoly to_primitive_int(const RatPoly& p);
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly monic(const RatPoly& p);
RatPoly gcd(const RatPoly& a, const RatPoly& b);
// Returns g = gcd(a, b) monic with s*a + t*b = g.
RatPoly xgcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t);

std::string to_string(const IntPoly& p, const std::string& var = "d");
std::string to_string(const RatPoly& p, const std::string& var = "d");
IntPoly parse_int_poly(const std::string& text, const std::string& var = "d");

IntPoly chebyshev_u(int k);

}  // namespace greenbox::arith

namespace greenbox::arith {
template <class T>
bool is_zero(const Polynomial<T>& p) {
    return p.is_zero();
}
}  // namespace greenbox::arith
