#pragma once

#include <vector>

#include "omegact/ratfunc.hpp"

namespace omegact {

// Σ R(α) over the n-th roots of unity α ≠ 1.
Rational generalized_sum(const RatFunc& r, long n);

// d(n; a_1..a_m) = Σ_{α^n=1, α≠1} ∏ (α^{a_i}+1)/(α^{a_i}-1)
Rational dedekind_sum(long n, const std::vector<long>& a);

struct DedekindReciprocity {
    Rational lhs, rhs;
    bool equal = false;
};

// Zagier reciprocity for pairwise coprime a_0..a_m.
DedekindReciprocity dedekind_reciprocity(const std::vector<long>& a);

}  // namespace omegact
