#pragma once

#include <memory>
#include <string>

#include "omegact/upoly.hpp"

namespace omegact {

// Element of ℚ[α]/(p) with p monic and (trusted) irreducible. A failed
// inversion means p was reducible and is reported as a zero divisor.
class QuotientFieldElement {
public:
    QuotientFieldElement() = default;
    QuotientFieldElement(std::shared_ptr<const QPoly> modulus, QPoly value);

    static QuotientFieldElement from_rational(std::shared_ptr<const QPoly> modulus, const Rational& q);
    // The class of the variable itself (the root α).
    static QuotientFieldElement generator(std::shared_ptr<const QPoly> modulus);

    const QPoly& value() const { return value_; }
    const std::shared_ptr<const QPoly>& modulus() const { return modulus_; }
    bool is_zero() const { return value_.is_zero(); }

    QuotientFieldElement operator+(const QuotientFieldElement& o) const;
    QuotientFieldElement operator-(const QuotientFieldElement& o) const;
    QuotientFieldElement operator-() const;
    QuotientFieldElement operator*(const QuotientFieldElement& o) const;
    QuotientFieldElement operator/(const QuotientFieldElement& o) const { return *this * o.inverse(); }
    QuotientFieldElement inverse() const;
    bool operator==(const QuotientFieldElement& o) const { return value_ == o.value_; }

    std::string to_string() const;

private:
    const std::shared_ptr<const QPoly>& mod_of(const QuotientFieldElement& o) const;
    std::shared_ptr<const QPoly> modulus_;
    QPoly value_;
};

template <>
struct FieldTraits<QuotientFieldElement> {
    using E = QuotientFieldElement;
    static bool is_zero(const E& a) { return a.is_zero(); }
    static E zero_like(const E& a) { return E::from_rational(a.modulus(), Rational(0)); }
    static E one_like(const E& a) { return E::from_rational(a.modulus(), Rational(1)); }
    static E from_rational(const E& a, const Rational& q) { return E::from_rational(a.modulus(), q); }
    static E inv(const E& a) { return a.inverse(); }
    static std::string str(const E& a) { return a.to_string(); }
    static long valuation(const E&) { return 0; }
};

}  // namespace omegact
