#pragma once

#include <string>
#include <vector>

#include "omegact/elliott.hpp"

namespace omegact {

// A α + b = 0 over α ∈ ℕⁿ (ℙⁿ when strict).
struct DiophantineSystem {
    IntMatrix matrix;
    std::vector<long> shift;
    bool strict = false;

    std::size_t rows() const { return matrix.size(); }
    std::size_t cols() const;
    void validate() const;
};

// Crude generating function over the order (l1..lr, x1..xn).
struct CrudeGF {
    ElliottRational gf;
    std::vector<std::string> lambdas;
    std::vector<std::string> xs;
};

CrudeGF crude_gf(const DiophantineSystem& sys);

// CT in one variable; the result no longer involves it.
ElliottRational ct_lambda(const ElliottRational& f, std::size_t var);
ElliottRational ct_lambda(const ElliottRational& f, const std::string& var);
// Successive elimination in the given order.
ElliottRational ct_lambdas(const ElliottRational& f, const std::vector<std::string>& vars);

// PT in each variable, then the variable set to 1.
ElliottRational omega_geq(const ElliottRational& f, const std::vector<std::string>& vars);

// f = positive + constant + negative in powers of var.
struct LambdaSplit {
    ElliottRational positive, constant, negative;
};
LambdaSplit lambda_split(const ElliottRational& f, std::size_t var);

// CT via repeated use of the Elliott reduction identity. Throws when the
// number of rewrite steps exceeds the budget.
ElliottRational elliott_reduce(const ElliottRational& f, std::size_t var, std::size_t step_budget = 200000);

// E(x) for the system: CT over all λ.
ElliottRational solve_system(const DiophantineSystem& sys, const std::vector<std::string>& elim_order = {});

long matrix_rank(const IntMatrix& m);

struct ReciprocityReport {
    bool hypothesis_ok = false;
    std::string reason;
    bool identity_holds = false;
    ElliottRational e, ebar;
    long sign = 1;
};

// E(x) = (-1)^{n-r} Ē(1/x), checked as an identity of rational functions.
// ebar_nonempty is the caller's certificate that Ē has a term.
ReciprocityReport check_reciprocity(const DiophantineSystem& sys, bool ebar_nonempty);

struct MonomialCheck {
    ElliottRational before, after;
    bool equal = false;
};

// CT over all variables of phi, directly and after x_i -> x^{images[i]}.
MonomialCheck monomial_substitute_ct_check(const ElliottRational& phi, const std::vector<ExponentVector>& images);

}  // namespace omegact
