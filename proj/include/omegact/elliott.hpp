#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omegact/laurent.hpp"
#include "omegact/order.hpp"

namespace omegact {

// (1 - coeff·x^exps)^mult with exps ≻ 0 in the ambient order, so 1 is the
// initial term. As a difference of monomials lhs = 1 and rhs = coeff·x^exps.
struct BinomialFactor {
    Rational coeff;
    ExponentVector exps;
    unsigned mult = 1;

    Monomial lhs() const { return Monomial::one(exps.size()); }
    Monomial rhs() const { return Monomial(coeff, exps); }
    // the base 1 - coeff·x^exps, without multiplicity
    LaurentPolynomial base() const;
    LaurentPolynomial expand() const { return base().pow(mult); }
    bool same_base(const BinomialFactor& o) const { return coeff == o.coeff && exps == o.exps; }
    std::string to_string(const VarNames& names) const;
};

// a - b written as prefactor·factor. factor is empty when a and b have the
// same exponent (then prefactor is the difference, which must be nonzero).
struct Binomialized {
    Monomial prefactor;
    std::optional<BinomialFactor> factor;
};

Binomialized make_binomial(const Monomial& a, const Monomial& b, const VariableOrder& order);

// N / ∏ factors with N a Laurent polynomial and every factor binomial.
class ElliottRational {
public:
    explicit ElliottRational(VariableOrder order = VariableOrder());
    ElliottRational(LaurentPolynomial num, std::vector<BinomialFactor> den, VariableOrder order);

    static ElliottRational constant(const VariableOrder& order, const Rational& c);
    static ElliottRational monomial(const VariableOrder& order, const Monomial& m);
    // 1 / (a - b)^k
    static ElliottRational inverse_binomial(const VariableOrder& order, const Monomial& a, const Monomial& b,
                                            unsigned k = 1);

    const LaurentPolynomial& numerator() const { return num_; }
    const std::vector<BinomialFactor>& denominator() const { return den_; }
    const VariableOrder& order() const { return order_; }
    std::size_t nvars() const { return order_.size(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    bool depends_on(std::size_t var) const;

    ElliottRational operator+(const ElliottRational& o) const;
    ElliottRational operator-(const ElliottRational& o) const;
    ElliottRational operator-() const;
    ElliottRational operator*(const ElliottRational& o) const;
    ElliottRational operator*(const LaurentPolynomial& p) const;
    ElliottRational operator*(const Monomial& m) const;
    ElliottRational operator*(const Rational& c) const;
    ElliottRational& operator+=(const ElliottRational& o) { return *this = *this + o; }
    ElliottRational& operator*=(const ElliottRational& o) { return *this = *this * o; }

    // Multiplies by 1/(a - b)^k.
    ElliottRational divide_binomial(const Monomial& a, const Monomial& b, unsigned k = 1) const;
    ElliottRational divide_monomial(const Monomial& m) const { return *this * m.inverse(); }
    // Inverse when the numerator has at most two terms.
    ElliottRational inverse() const;
    ElliottRational pow(unsigned k) const;

    // Divides out every factor that divides the numerator.
    ElliottRational cancel_common() const;
    // Value equality by cross multiplication.
    bool equals(const ElliottRational& o) const;

    ElliottRational evaluate(std::size_t var, const Rational& value) const;
    ElliottRational derivative(std::size_t var) const;
    ElliottRational substitute_monomials(const std::vector<ExponentVector>& images, const VariableOrder& target) const;
    ElliottRational with_order(const VariableOrder& order) const;

    LaurentPolynomial denominator_product() const;
    // Canonical text: sorted factors, each printed as 1-c*x^e.
    std::string to_string() const;

private:
    void normalize();
    LaurentPolynomial num_;
    std::vector<BinomialFactor> den_;
    VariableOrder order_;
};

// Exact quotient of p by 1 - c·x^e, if it exists.
std::optional<LaurentPolynomial> divide_by_binomial(const LaurentPolynomial& p, const Rational& c,
                                                    const ExponentVector& e);

}  // namespace omegact
