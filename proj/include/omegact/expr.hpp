#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "omegact/elliott.hpp"
#include "omegact/omega.hpp"
#include "omegact/ratfunc.hpp"

namespace omegact {

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum Kind { Int, Var, Neg, Add, Sub, Mul, Div, Pow } kind;
    BigInt value;       // Int
    std::string name;   // Var
    long exponent = 0;  // Pow
    std::size_t offset = 0;
    ExprPtr lhs, rhs;   // Neg and Pow use lhs only
};

ExprPtr parse_expression(const std::string& text);
// Minimal parentheses; parse(print(e)) rebuilds e.
std::string print_expression(const ExprPtr& e);
bool same_expression(const ExprPtr& a, const ExprPtr& b);
std::vector<std::string> expression_variables(const ExprPtr& e);

// c · x^mono · ∏ base^mult, bases normalized so their first term in graded
// order is 1. Negative multiplicities are denominator factors.
struct FactoredRational {
    std::size_t nvars = 0;
    Rational coeff = 0;
    ExponentVector mono;
    std::vector<std::pair<LaurentPolynomial, int>> factors;

    bool is_zero() const { return omegact::is_zero(coeff); }
    LaurentPolynomial expanded_numerator() const;
};

FactoredRational lower(const ExprPtr& e, const VarNames& names);
// Every denominator factor must be a binomial; otherwise the error names it.
ElliottRational to_elliott(const FactoredRational& f, const VariableOrder& order);
ElliottRational lower_elliott(const std::string& text, const VariableOrder& order);
// Single-variable rational function.
RatFunc lower_ratfunc(const ExprPtr& e, const std::string& var);

// CT in names[ct] of a two-variable function with arbitrary denominators,
// coefficients in ℚ(names[other]).
RatFunc ct_general(const FactoredRational& f, const VarNames& names, std::size_t ct, std::size_t other);

// Rows of integers, one per line, plus an optional "b:" line.
DiophantineSystem parse_system(const std::string& text, bool strict = false);

}  // namespace omegact
