#include "greenbox/arith/number_field.hpp"

#include "greenbox/error.hpp"

namespace greenbox::arith {

NumberField::NumberField(const IntPoly& modulus) : modulus_(modulus), rat_modulus_(to_rat(modulus)) {
    if (modulus.degree() < 1) throw InvalidInput("number field modulus must have positive degree");
    if (modulus.degree() > 6) throw BoundExceeded("number field degree above 6");
    if (modulus.lead() != 1) throw InvalidInput("number field modulus must be monic");
    if (poly_gcd(modulus, modulus.derivative()).degree() > 0)
        throw InvalidInput("number field modulus must be squarefree");
}

FieldPtr make_field(const IntPoly& modulus) { return std::make_shared<const NumberField>(modulus); }

NumberFieldElem::NumberFieldElem(FieldPtr field, const RatPoly& value) : field_(std::move(field)) {
    value_ = value.degree() >= field_->degree() ? divmod(value, field_->rat_modulus()).second : value;
}

NumberFieldElem::NumberFieldElem(FieldPtr field, const Rational& value)
    : field_(std::move(field)), value_(RatPoly(value)) {}

NumberFieldElem NumberFieldElem::generator(FieldPtr field) {
    return NumberFieldElem(std::move(field), RatPoly::x());
}

const FieldPtr& NumberFieldElem::common(const NumberFieldElem& o) const {
    if (!field_) return o.field_;
    if (o.field_ && o.field_ != field_ && !(*o.field_ == *field_))
        throw InvalidInput("number field elements from different fields");
    return field_;
}

NumberFieldElem NumberFieldElem::operator-() const {
    NumberFieldElem r = *this;
    r.value_ = -r.value_;
    return r;
}

NumberFieldElem operator+(const NumberFieldElem& a, const NumberFieldElem& b) {
    NumberFieldElem r;
    r.field_ = a.common(b);
    r.value_ = a.value_ + b.value_;
    return r;
}

NumberFieldElem operator-(const NumberFieldElem& a, const NumberFieldElem& b) { return a + (-b); }

NumberFieldElem operator*(const NumberFieldElem& a, const NumberFieldElem& b) {
    const FieldPtr& f = a.common(b);
    if (!f) return NumberFieldElem();
    return NumberFieldElem(f, a.value_ * b.value_);
}

NumberFieldElem operator/(const NumberFieldElem& a, const NumberFieldElem& b) { return a * b.inverse(); }

NumberFieldElem operator+(const NumberFieldElem& a, const Rational& b) {
    NumberFieldElem r = a;
    r.value_ += RatPoly(b);
    return r;
}

NumberFieldElem operator*(const NumberFieldElem& a, const Rational& b) {
    NumberFieldElem r = a;
    r.value_ = r.value_.scaled(b);
    return r;
}

bool operator==(const NumberFieldElem& a, const NumberFieldElem& b) { return a.value_ == b.value_; }

NumberFieldElem NumberFieldElem::inverse() const {
    if (is_zero()) throw InvalidInput("inverse of zero in number field");
    RatPoly s, t;
    RatPoly g = xgcd(value_, field_->rat_modulus(), s, t);
    if (g.degree() != 0) throw VerificationFailure("number field modulus is reducible");
    return NumberFieldElem(field_, s);
}

std::string NumberFieldElem::to_string(const std::string& var) const {
    return arith::to_string(value_, var);
}

}  // namespace greenbox::arith
