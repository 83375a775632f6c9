#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "omegact/rational.hpp"

namespace omegact {

// One integer exponent per ambient variable.
using ExponentVector = std::vector<int>;

ExponentVector zero_exponents(std::size_t n);
ExponentVector unit_exponents(std::size_t n, std::size_t i, int power = 1);
ExponentVector add(const ExponentVector& a, const ExponentVector& b);
ExponentVector sub(const ExponentVector& a, const ExponentVector& b);
ExponentVector scale(const ExponentVector& a, int k);
ExponentVector negate(const ExponentVector& a);
bool is_zero(const ExponentVector& a);
long total_degree(const ExponentVector& a);

// Graded (total degree ascending), ties broken reverse-lexicographically.
// This is the serialization order only; the working-field order lives in
// VariableOrder.
bool graded_revlex_less(const ExponentVector& a, const ExponentVector& b);

struct Monomial {
    Rational coeff;
    ExponentVector exps;

    Monomial() = default;
    Monomial(Rational c, ExponentVector e) : coeff(std::move(c)), exps(std::move(e)) {}
    static Monomial one(std::size_t n) { return Monomial(Rational(1), zero_exponents(n)); }

    bool is_zero() const { return omegact::is_zero(coeff); }
    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(long k) const;
    Monomial operator-() const { return Monomial(-coeff, exps); }
    bool operator==(const Monomial& o) const { return coeff == o.coeff && exps == o.exps; }
};

using VarNames = std::vector<std::string>;

std::string monomial_to_string(const Monomial& m, const VarNames& names);

// Sparse multivariate Laurent polynomial with rational coefficients. Zero
// coefficients are never stored.
class LaurentPolynomial {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    explicit LaurentPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}
    LaurentPolynomial(const Monomial& m);

    static LaurentPolynomial constant(std::size_t nvars, const Rational& c);
    static LaurentPolynomial variable(std::size_t nvars, std::size_t i, int power = 1);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Monomial as_monomial() const;
    Rational constant_term() const;
    Rational coefficient(const ExponentVector& e) const;

    void add_term(const ExponentVector& e, const Rational& c);
    void add_term(const Monomial& m) { add_term(m.exps, m.coeff); }

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const Monomial& m) const;
    LaurentPolynomial operator*(const Rational& c) const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    bool operator==(const LaurentPolynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    LaurentPolynomial pow(unsigned k) const;

    // Exact quotient; throws DomainError naming the offending remainder term
    // when the divisor does not divide.
    LaurentPolynomial exact_div(const LaurentPolynomial& d) const;
    bool divides_into(const LaurentPolynomial& d, LaurentPolynomial* quotient) const;

    // Variable i goes to the monomial x^{images[i]}; images all have length new_nvars.
    LaurentPolynomial substitute_monomials(const std::vector<ExponentVector>& images,
                                           std::size_t new_nvars) const;

    // Sets variable var to the given value. A zero value with negative
    // powers present throws.
    LaurentPolynomial evaluate(std::size_t var, const Rational& value) const;
    LaurentPolynomial derivative(std::size_t var) const;

    int min_degree(std::size_t var) const;
    int max_degree(std::size_t var) const;
    bool depends_on(std::size_t var) const;

    // Terms in canonical serialization order.
    std::vector<std::pair<ExponentVector, Rational>> canonical_terms() const;
    std::string to_string(const VarNames& names) const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& p);

}  // namespace omegact
