#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "omegact/elliott.hpp"

namespace omegact {

// Power series in one variable to order N, coefficients Elliott-rational in
// the remaining variables.
class TruncatedSeries {
public:
    TruncatedSeries(VariableOrder coeff_order, std::size_t order, std::string var = "t");

    static TruncatedSeries constant(const ElliottRational& c, std::size_t order, std::string var = "t");
    // var itself
    static TruncatedSeries variable(const VariableOrder& coeff_order, std::size_t order, std::string var = "t");
    static TruncatedSeries from_coefficients(const VariableOrder& coeff_order, const std::vector<Rational>& c,
                                             std::size_t order, std::string var = "t");

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::string& var() const { return var_; }
    const VariableOrder& coeff_order() const { return corder_; }
    const ElliottRational& coeff(std::size_t k) const;
    void set(std::size_t k, ElliottRational c);
    const std::vector<ElliottRational>& coeffs() const { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const ElliottRational& c) const;
    TruncatedSeries operator*(const Rational& c) const;

    TruncatedSeries inverse() const;
    TruncatedSeries pow(unsigned k) const;
    // requires constant coefficient 1
    TruncatedSeries log() const;
    // requires constant coefficient 0
    TruncatedSeries exp() const;
    TruncatedSeries derivative() const;
    // t^k · this
    TruncatedSeries shift(std::size_t k) const;
    // t -> t^k
    TruncatedSeries stretch(std::size_t k) const;
    TruncatedSeries map(const std::function<ElliottRational(const ElliottRational&)>& f) const;
    TruncatedSeries truncate(std::size_t order) const;

    bool equals(const TruncatedSeries& o) const;
    std::string to_string() const;

private:
    void require_compatible(const TruncatedSeries& o) const;
    VariableOrder corder_;
    std::vector<ElliottRational> coeffs_;
    std::string var_;
};

// Variable-order helpers: drop one variable (which must not occur) or embed
// into a larger order by name.
VariableOrder without_variable(const VariableOrder& order, std::size_t var);
ElliottRational drop_variable(const ElliottRational& f, std::size_t var);
ElliottRational embed(const ElliottRational& f, const VariableOrder& target);

// Expansion in var; every factor must be PT in var.
TruncatedSeries series_from_rational(const ElliottRational& f, const std::string& var, std::size_t order);

// Σ_i coeffs[i] · y^i at y = Y (Y without constant term).
TruncatedSeries evaluate_polynomial(const std::vector<TruncatedSeries>& coeffs, const TruncatedSeries& y);

// The unique Y with Y(0) = 0 and Σ_i g[i] Y^i = 0; g[1] must have an
// invertible constant term and g[0] none.
TruncatedSeries positive_root(const std::vector<TruncatedSeries>& g);

// CT_y (y F / G) = F(Y)/G_y(Y) with Y the positive root of G.
TruncatedSeries lagrange_ct(const std::vector<TruncatedSeries>& f, const std::vector<TruncatedSeries>& g);

// (Q(x) - Q(u)) / (x - u), or ∂Q/∂x when u is x.
ElliottRational divided_difference(const ElliottRational& q, std::size_t x, std::size_t u);

struct ThirdDecomposition {
    TruncatedSeries minus, zero, plus;
};

ThirdDecomposition third_decomposition(const TruncatedSeries& h, const std::string& x);

// Terms of total degree ≤ d, via x_i -> x_i·t and expansion in t. Each
// coefficient must cancel to a Laurent polynomial.
std::map<ExponentVector, Rational> graded_expansion(const ElliottRational& f, std::size_t d);

// Coefficient-wise CT in x (x is dropped from the coefficient order).
TruncatedSeries ct_coefficients(const TruncatedSeries& s, const std::string& x);

}  // namespace omegact
