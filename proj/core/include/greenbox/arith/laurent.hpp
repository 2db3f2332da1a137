#pragma once

#include "greenbox/arith/integer.hpp"

#include <string>
#include <vector>

namespace greenbox::arith {

// Laurent polynomial in v with integer coefficients.
class LaurentInt {
public:
    LaurentInt() = default;
    LaurentInt(long c);
    LaurentInt(const Integer& c);
    LaurentInt(int low, std::vector<Integer> coeffs);

    static LaurentInt monomial(const Integer& c, int exponent);

    bool is_zero() const { return c_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    Integer coeff(int exponent) const;
    const std::vector<Integer>& coefficients() const { return c_; }

    LaurentInt operator-() const;
    LaurentInt& operator+=(const LaurentInt& o);
    LaurentInt& operator-=(const LaurentInt& o);
    friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
    friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
    friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
    friend bool operator==(const LaurentInt& a, const LaurentInt& b) {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentInt& a, const LaurentInt& b) { return !(a == b); }
    bool operator<(const LaurentInt& o) const;

    // v -> v^{-1}
    LaurentInt bar() const;
    Rational evaluate(const Rational& v) const;

    std::string to_string(const std::string& var = "v") const;

private:
    void normalize();
    int low_ = 0;
    std::vector<Integer> c_;
};

inline bool is_zero(const LaurentInt& x) { return x.is_zero(); }

// [a] = (v^a - v^-a)/(v - v^-1)
LaurentInt quantum_int(int a);
// [2]_i = v^i + v^-i
LaurentInt bracket2(int i);

}  // namespace greenbox::arith
