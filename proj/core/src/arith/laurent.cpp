#include "greenbox/arith/laurent.hpp"

#include <algorithm>

namespace greenbox::arith {

LaurentInt::LaurentInt(long c) : LaurentInt(Integer(c)) {}

LaurentInt::LaurentInt(const Integer& c) {
    if (sgn(c) != 0) c_.push_back(c);
}

LaurentInt::LaurentInt(int low, std::vector<Integer> coeffs) : low_(low), c_(std::move(coeffs)) { normalize(); }

LaurentInt LaurentInt::monomial(const Integer& c, int exponent) { return LaurentInt(exponent, {c}); }

void LaurentInt::normalize() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    size_t lead = 0;
    while (lead < c_.size() && sgn(c_[lead]) == 0) ++lead;
    if (lead) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        low_ += static_cast<int>(lead);
    }
    if (c_.empty()) low_ = 0;
}

Integer LaurentInt::coeff(int e) const {
    if (c_.empty() || e < low_ || e > high()) return 0;
    return c_[static_cast<size_t>(e - low_)];
}

LaurentInt LaurentInt::operator-() const {
    LaurentInt r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
    std::vector<Integer> r(static_cast<size_t>(hi - lo + 1), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[static_cast<size_t>(low_ - lo) + i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[static_cast<size_t>(o.low_ - lo) + i] += o.c_[i];
    low_ = lo;
    c_ = std::move(r);
    normalize();
    return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& o) { return *this += -o; }

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return LaurentInt(a.low_ + b.low_, std::move(r));
}

bool LaurentInt::operator<(const LaurentInt& o) const {
    if (low_ != o.low_) return low_ < o.low_;
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

LaurentInt LaurentInt::bar() const {
    if (is_zero()) return *this;
    std::vector<Integer> r(c_.rbegin(), c_.rend());
    return LaurentInt(-high(), std::move(r));
}

Rational LaurentInt::evaluate(const Rational& v) const {
    if (is_zero()) return 0;
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + Rational(*it);
    Rational p = 1;
    Rational base = low_ >= 0 ? v : Rational(1 / v);
    for (int k = 0; k < std::abs(low_); ++k) p *= base;
    return acc * p;
}

std::string LaurentInt::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = high(); e >= low_; --e) {
        Integer a = coeff(e);
        if (sgn(a) == 0) continue;
        Integer mag = abs(a);
        if (out.empty()) {
            if (sgn(a) < 0) out += "-";
        } else {
            out += sgn(a) < 0 ? "-" : "+";
        }
        if (e == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

LaurentInt quantum_int(int a) {
    if (a <= 0) return {};
    std::vector<Integer> c(static_cast<size_t>(2 * a - 1), 0);
    for (size_t i = 0; i < c.size(); i += 2) c[i] = 1;
    return LaurentInt(-(a - 1), std::move(c));
}

LaurentInt bracket2(int i) {
    if (i == 0) return LaurentInt(2);
    return LaurentInt::monomial(1, i) + LaurentInt::monomial(1, -i);
}

}  // namespace greenbox::arith
