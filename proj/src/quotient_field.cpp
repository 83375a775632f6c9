#include "omegact/quotient_field.hpp"

namespace omegact {

QuotientFieldElement::QuotientFieldElement(std::shared_ptr<const QPoly> modulus, QPoly value)
    : modulus_(std::move(modulus)), value_(std::move(value)) {
    if (modulus_) {
        if (modulus_->degree() < 1) throw DomainError("quotient field modulus must have positive degree");
        if (value_.degree() >= modulus_->degree()) value_ = poly_mod(value_, *modulus_);
    }
}

QuotientFieldElement QuotientFieldElement::from_rational(std::shared_ptr<const QPoly> modulus, const Rational& q) {
    std::string var = modulus ? modulus->var() : "a";
    return QuotientFieldElement(std::move(modulus), QPoly::constant(q, var));
}

QuotientFieldElement QuotientFieldElement::generator(std::shared_ptr<const QPoly> modulus) {
    std::string var = modulus->var();
    return QuotientFieldElement(std::move(modulus), QPoly(std::vector<Rational>{0, 1}, Rational(0), var));
}

const std::shared_ptr<const QPoly>& QuotientFieldElement::mod_of(const QuotientFieldElement& o) const {
    return modulus_ ? modulus_ : o.modulus_;
}

QuotientFieldElement QuotientFieldElement::operator+(const QuotientFieldElement& o) const {
    return QuotientFieldElement(mod_of(o), value_ + o.value_);
}

QuotientFieldElement QuotientFieldElement::operator-(const QuotientFieldElement& o) const {
    return QuotientFieldElement(mod_of(o), value_ - o.value_);
}

QuotientFieldElement QuotientFieldElement::operator-() const { return QuotientFieldElement(modulus_, -value_); }

QuotientFieldElement QuotientFieldElement::operator*(const QuotientFieldElement& o) const {
    return QuotientFieldElement(mod_of(o), value_ * o.value_);
}

QuotientFieldElement QuotientFieldElement::inverse() const {
    if (value_.is_zero()) throw DomainError("inverse of zero in quotient field");
    if (!modulus_) return QuotientFieldElement(nullptr, QPoly::constant(1 / value_.coeff(0), value_.var()));
    auto eg = extended_gcd(value_, *modulus_);
    if (eg.g.degree() != 0)
        throw DomainError("zero divisor in quotient ring: modulus " + modulus_->to_string() + " is reducible (factor " +
                          eg.g.to_string() + ")");
    return QuotientFieldElement(modulus_, eg.u);
}

std::string QuotientFieldElement::to_string() const { return value_.to_string(); }

}  // namespace omegact
