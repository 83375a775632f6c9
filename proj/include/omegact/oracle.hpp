#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "omegact/laurent.hpp"

// Brute-force references. Only rational.hpp and laurent.hpp are used here.
namespace omegact::oracle {

using CoefficientTable = std::map<ExponentVector, Rational>;

Rational lookup(const CoefficientTable& t, const ExponentVector& e);
// Drops zero entries.
CoefficientTable cleaned(const CoefficientTable& t);
std::string to_string(const CoefficientTable& t, const VarNames& names);

// Solutions of A α + b = 0 with α ∈ ℕⁿ (ℙⁿ when strict) and |α| ≤ bound.
CoefficientTable enumerate_solutions(const std::vector<std::vector<long>>& matrix, const std::vector<long>& shift,
                                     bool strict, long degree_bound);

struct SeriesFactor {
    LaurentPolynomial base;
    unsigned mult = 1;
};

// num / ∏ base^mult expanded by geometric series. Each base is inverted
// around its unique term of least weight w·e; all terms of total weight ≤ cap
// are exact. Returns the terms free of ct_vars, restricted to weight ≤ cap.
CoefficientTable truncated_ct(const LaurentPolynomial& num, const std::vector<SeriesFactor>& factors,
                              const std::vector<long>& weights, long cap, const std::vector<std::size_t>& ct_vars);

// CT of ∏_{i≠j} (1 - x_i/x_j)^{a_i}.
Rational dyson_ct(const std::vector<long>& a);

struct Step {
    long dx = 0, dy = 0;
    Rational weight = 1;
};

struct Constraint {
    enum Kind { None, Slit, NotAboveDiagonal, HeightBand, Quarter } kind = None;
    long lo = 0, hi = 0;
};

struct Window {
    long xmin, xmax, ymin, ymax;
};

using PointCounts = std::map<std::pair<long, long>, Rational>;

// Endpoint counts for lengths 0..length. Without a window the step set and
// length bound the reachable points; points leaving a window are dropped.
std::vector<PointCounts> count_walks(const std::vector<Step>& steps, const Constraint& c, std::pair<long, long> start,
                                     std::size_t length, const Window* window = nullptr);

// Σ over nontrivial n-th roots α of ∏ (α^{a_i}+1)/(α^{a_i}-1), in doubles.
double dedekind_float(long n, const std::vector<long>& a);

struct IdentityCheck {
    std::string identity;
    std::vector<long> params;
    Rational lhs, rhs;
    bool pass = false;
};

// Identities: "two_pow", "half_pow", "fibonacci", "saalschutz", "super_catalan".
// bound caps each parameter (for super_catalan, m + n).
std::vector<IdentityCheck> binomial_suite(const std::string& identity, long bound);
const std::vector<std::string>& binomial_identities();

}  // namespace omegact::oracle
