#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omegact/laurent.hpp"
#include "omegact/ppfraction.hpp"
#include "omegact/ratfunc.hpp"

namespace omegact {

using IntMatrix = std::vector<std::vector<long>>;

// Variable list plus optional integer matrix ρ. Monomials compare through
// ρ·e in reverse-lex order: the highest differing index decides, so the last
// variable dominates and x1^2 ≺ x2. The initial term of a series is its
// minimal term.
class VariableOrder {
public:
    VariableOrder() = default;
    explicit VariableOrder(VarNames names, std::optional<IntMatrix> rho = std::nullopt);

    // ρ that sends the named variable to its inverse.
    static VariableOrder reversed_in(const VariableOrder& base, const std::string& var);

    std::size_t size() const { return names_.size(); }
    const VarNames& names() const { return names_; }
    const std::optional<IntMatrix>& rho() const { return rho_; }
    std::size_t index_of(const std::string& name) const;
    bool has(const std::string& name) const;

    // -1, 0, 1 for Less, Equal, Greater
    int compare(const ExponentVector& a, const ExponentVector& b) const;
    // sign of e against the zero vector
    int sign(const ExponentVector& e) const;

    bool operator==(const VariableOrder& o) const { return names_ == o.names_ && rho_ == o.rho_; }

private:
    VarNames names_;
    std::optional<IntMatrix> rho_;
};

Monomial initial_term(const LaurentPolynomial& f, const VariableOrder& order);

enum class FactorTag { PT, NT, Mixed };

struct FactorClass {
    FactorTag tag;
    Monomial initial;
};

std::string to_string(FactorTag t);

FactorClass classify_factor(const LaurentPolynomial& f, std::size_t var, const VariableOrder& order);

// Classifies a polynomial in the distinguished variable whose coefficients lie
// in a field carrying a valuation in later (dominant) variables.
template <class F>
FactorTag classify_univariate(const UnivariatePolynomial<F>& f) {
    using T = FieldTraits<F>;
    if (f.is_zero()) throw DomainError("classification of the zero factor");
    std::size_t low = f.low_degree();
    std::size_t best = low;
    long bestv = T::valuation(f.coeffs()[low]);
    for (std::size_t k = low + 1; k < f.coeffs().size(); ++k) {
        if (T::is_zero(f.coeffs()[k])) continue;
        long v = T::valuation(f.coeffs()[k]);
        if (v < bestv) {
            bestv = v;
            best = k;
        }
    }
    if (best == low) return FactorTag::PT;
    if (static_cast<long>(best) == f.degree()) return FactorTag::NT;
    return FactorTag::Mixed;
}

namespace detail {

template <class F>
F field_pow(const F& a, unsigned k) {
    F r = FieldTraits<F>::one_like(a);
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

}  // namespace detail

// CT in the distinguished variable of var^shift · N / ∏ factors^mult, with
// coefficients in F. Every factor must classify PT or NT; the answer is the
// polynomial part at 0 plus the PT fractional parts at 0.
template <class F>
F ct_rational(const UnivariatePolynomial<F>& n, const std::vector<std::pair<UnivariatePolynomial<F>, unsigned>>& factors,
              long shift = 0) {
    using P = UnivariatePolynomial<F>;
    using T = FieldTraits<F>;
    F proto = n.proto();
    const std::string var = n.var();
    P num = n;
    long s = shift;
    std::vector<std::pair<P, unsigned>> dens;
    std::vector<bool> pt;
    for (const auto& [f, m] : factors) {
        if (m == 0) continue;
        if (f.is_zero()) throw DomainError("zero factor in denominator");
        FactorTag tag = classify_univariate(f);
        if (tag == FactorTag::Mixed) throw DomainError("not rho-factorable: factor " + f.to_string());
        std::size_t low = f.low_degree();
        s -= static_cast<long>(low) * static_cast<long>(m);
        std::vector<F> c(f.coeffs().begin() + static_cast<long>(low), f.coeffs().end());
        P g(std::move(c), proto, var);
        F li = T::inv(g.leading());
        if (g.degree() == 0) {
            num = num * detail::field_pow(li, m);
            continue;
        }
        num = num * detail::field_pow(li, m);
        g = g * li;
        bool merged = false;
        for (std::size_t i = 0; i < dens.size(); ++i) {
            if (dens[i].first == g) {
                dens[i].second += m;
                merged = true;
                break;
            }
        }
        if (!merged) {
            dens.emplace_back(g, m);
            pt.push_back(tag == FactorTag::PT);
        }
    }
    if (s > 0) num = num * P::monomial(T::one_like(proto), static_cast<std::size_t>(s), var);
    if (s < 0) {
        dens.emplace_back(P::monomial(T::one_like(proto), 1, var), static_cast<unsigned>(-s));
        pt.push_back(false);
    }
    if (num.is_zero()) return T::zero_like(proto);
    std::vector<P> powered;
    P d = P::constant(T::one_like(proto), var);
    for (const auto& [g, m] : dens) {
        powered.push_back(g.pow(m));
        d = d * powered.back();
    }
    auto [q, r] = poly_divmod(num, d);
    F out = q.coeff(0);
    for (std::size_t i = 0; i < powered.size(); ++i) {
        if (!pt[i]) continue;
        auto fp = frac_at_factors(r, powered, i);
        out = out + fp.numerator.coeff(0) * T::inv(powered[i].coeff(0));
    }
    return out;
}

// f ⊙ g = CT_x f(t/x) g(x), computed over ℚ(t).
RatFunc hadamard(const RatFunc& f, const RatFunc& g);

}  // namespace omegact
