#pragma once

#include "greenbox/arith/polynomial.hpp"

#include <memory>
#include <string>

namespace greenbox::arith {

// Q[t]/(f) for monic irreducible f of degree at most 6.
class NumberField {
public:
    explicit NumberField(const IntPoly& modulus);
    const IntPoly& modulus() const { return modulus_; }
    const RatPoly& rat_modulus() const { return rat_modulus_; }
    int degree() const { return modulus_.degree(); }
    bool operator==(const NumberField& o) const { return modulus_ == o.modulus_; }

private:
    IntPoly modulus_;
    RatPoly rat_modulus_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(const IntPoly& modulus);

class NumberFieldElem {
public:
    NumberFieldElem() = default;
    NumberFieldElem(FieldPtr field, const RatPoly& value);
    NumberFieldElem(FieldPtr field, const Rational& value);

    static NumberFieldElem generator(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    const RatPoly& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    NumberFieldElem operator-() const;
    friend NumberFieldElem operator+(const NumberFieldElem& a, const NumberFieldElem& b);
    friend NumberFieldElem operator-(const NumberFieldElem& a, const NumberFieldElem& b);
    friend NumberFieldElem operator*(const NumberFieldElem& a, const NumberFieldElem& b);
    friend NumberFieldElem operator/(const NumberFieldElem& a, const NumberFieldElem& b);
    friend NumberFieldElem operator+(const NumberFieldElem& a, const Rational& b);
    friend NumberFieldElem operator*(const NumberFieldElem& a, const Rational& b);
    friend bool operator==(const NumberFieldElem& a, const NumberFieldElem& b);
    friend bool operator!=(const NumberFieldElem& a, const NumberFieldElem& b) { return !(a == b); }

    NumberFieldElem inverse() const;
    std::string to_string(const std::string& var = "t") const;

private:
    const FieldPtr& common(const NumberFieldElem& o) const;
    FieldPtr field_;
    RatPoly value_;
};

inline bool is_zero(const NumberFieldElem& x) { return x.is_zero(); }

}  // namespace greenbox::arith
