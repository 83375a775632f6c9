#pragma once

#include <string>
#include <utility>
#include <vector>

#include "omegact/quotient_field.hpp"
#include "omegact/upoly.hpp"

namespace omegact {

template <class F>
struct FracPart {
    UnivariatePolynomial<F> numerator;
    UnivariatePolynomial<F> factor;
};

template <class F>
struct PPFraction {
    UnivariatePolynomial<F> polynomial_part;
    std::vector<FracPart<F>> parts;
};

namespace detail {

template <class F>
void require_coprime(const UnivariatePolynomial<F>& a, const UnivariatePolynomial<F>& b, const std::string& what) {
    auto g = poly_gcd(a, b);
    if (g.degree() > 0) throw DomainError(what + " share the factor " + g.to_string());
}

}  // namespace detail

// First n coefficients of the power series N/E; E(0) must be nonzero.
template <class F>
UnivariatePolynomial<F> series_quotient(const UnivariatePolynomial<F>& n, const UnivariatePolynomial<F>& e,
                                        std::size_t len) {
    using T = FieldTraits<F>;
    F e0 = e.coeff(0);
    if (T::is_zero(e0)) throw DomainError("series quotient by a polynomial vanishing at 0");
    F inv0 = T::inv(e0);
    std::vector<F> s(len, e.zero());
    for (std::size_t k = 0; k < len; ++k) {
        F acc = n.coeff(k);
        std::size_t top = std::min<std::size_t>(k, e.coeffs().size() - 1);
        for (std::size_t i = 1; i <= top; ++i) acc = acc - e.coeffs()[i] * s[k - i];
        s[k] = acc * inv0;
    }
    return UnivariatePolynomial<F>(std::move(s), e.proto(), e.var());
}

// Frac(N/D, D1) with D1 | D and gcd(D1, D/D1) = 1. The complement is inverted
// modulo D1 and every product is reduced modulo D1.
template <class F>
FracPart<F> frac_at(const UnivariatePolynomial<F>& n, const UnivariatePolynomial<F>& d,
                    const UnivariatePolynomial<F>& d1) {
    if (d1.degree() == 0) return {UnivariatePolynomial<F>(n.proto(), n.var()), d1};
    auto [c, rem] = poly_divmod(d, d1);
    if (!rem.is_zero()) throw DomainError("factor " + d1.to_string() + " does not divide " + d.to_string());
    detail::require_coprime(d1, c, "factor and its complement");
    auto r = poly_mod(poly_mod(n, d1) * inverse_mod(c, d1), d1);
    return {r, d1};
}

// Same, with the complement given as a list of factors; each one is inverted
// against d1 separately.
template <class F>
FracPart<F> frac_at_factors(const UnivariatePolynomial<F>& n, const std::vector<UnivariatePolynomial<F>>& factors,
                            std::size_t index) {
    const auto& d1 = factors.at(index);
    if (d1.degree() == 0) return {UnivariatePolynomial<F>(n.proto(), n.var()), d1};
    auto r = poly_mod(n, d1);
    for (std::size_t j = 0; j < factors.size(); ++j) {
        if (j == index) continue;
        auto eg = extended_gcd(poly_mod(factors[j], d1), d1);
        if (eg.g.degree() != 0)
            throw DomainError("factors " + std::to_string(index) + " and " + std::to_string(j) + " are not coprime");
        r = poly_mod(r * eg.u, d1);
    }
    return {r, d1};
}

template <class F>
PPFraction<F> ppfraction_split(const UnivariatePolynomial<F>& n, const UnivariatePolynomial<F>& d,
                               const std::vector<UnivariatePolynomial<F>>& factors) {
    using P = UnivariatePolynomial<F>;
    P prod = P::constant(d.one(), d.var());
    for (const auto& f : factors) prod = prod * f;
    if (prod != d) throw DomainError("product of factors differs from the denominator");
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (poly_gcd(factors[i], factors[j]).degree() > 0)
                throw DomainError("factors " + std::to_string(i) + " and " + std::to_string(j) + " are not coprime");
    PPFraction<F> out;
    auto [q, r] = poly_divmod(n, d);
    out.polynomial_part = q;
    for (std::size_t i = 0; i < factors.size(); ++i) out.parts.push_back(frac_at_factors(r, factors, i));
    return out;
}

// Frac(N/D, t^m) where D = t^m E, E(0) != 0. The returned numerator R has
// degree < m and t^m R = ⌈t^m⌉ (N/E).
template <class F>
FracPart<F> frac_at_origin(const UnivariatePolynomial<F>& n, const UnivariatePolynomial<F>& d, std::size_t m) {
    using P = UnivariatePolynomial<F>;
    if (d.is_zero()) throw DomainError("zero denominator");
    std::size_t low = d.low_degree();
    if (low < m) throw DomainError("t^" + std::to_string(m) + " does not divide the denominator");
    if (low > m) throw DomainError("denominator cofactor vanishes at 0 (not coprime to t^" + std::to_string(m) + ")");
    std::vector<typename std::decay_t<decltype(d.coeffs())>::value_type> ec(d.coeffs().begin() + m, d.coeffs().end());
    P e(std::move(ec), d.proto(), d.var());
    return {series_quotient(n, e, m), P::monomial(d.one(), m, d.var())};
}

template <class F>
UnivariatePolynomial<F> translate(const UnivariatePolynomial<F>& p, const F& b) {
    return p.translate(b);
}

// Frac(N/D, D1) = τ_{-b} Frac(τ_b N / τ_b D, τ_b D1). When τ_b D1 is a power
// of t the inner step is frac_at_origin.
template <class F>
FracPart<F> conjugated_frac(const UnivariatePolynomial<F>& n, const UnivariatePolynomial<F>& d,
                            const UnivariatePolynomial<F>& d1, const F& b) {
    auto tn = n.translate(b), td = d.translate(b), td1 = d1.translate(b);
    FracPart<F> inner;
    if (td1.degree() > 0 && td1.low_degree() == static_cast<std::size_t>(td1.degree())) {
        // τ_b D1 = c·t^m
        std::size_t m = static_cast<std::size_t>(td1.degree());
        F c = td1.leading();
        inner = frac_at_origin(tn, td, m);
        inner.numerator = inner.numerator * FieldTraits<F>::inv(c);
        inner.factor = td1;
    } else {
        inner = frac_at(tn, td, td1);
    }
    F mb = -b;
    return {inner.numerator.translate(mb), inner.factor.translate(mb)};
}

// Returns A, B with 1/(p^m q^n) = A/p^m + B/q^n, built from 1/(pq) = r/p + s/q.
template <class F>
std::pair<UnivariatePolynomial<F>, UnivariatePolynomial<F>> power_split(const UnivariatePolynomial<F>& p,
                                                                        const UnivariatePolynomial<F>& q,
                                                                        unsigned m, unsigned n) {
    using P = UnivariatePolynomial<F>;
    using T = FieldTraits<F>;
    if (m == 0 || n == 0) throw DomainError("power_split needs positive exponents");
    auto eg = extended_gcd(p, q);
    if (eg.g.degree() != 0) throw DomainError("power_split of polynomials that are not coprime");
    // u p + v q = 1, so 1/(pq) = v/p + u/q
    const P& r = eg.v;
    const P& s = eg.u;
    F proto = p.proto();
    P a(proto, p.var()), bpoly(proto, p.var());
    P rn = r.pow(n), sm = s.pow(m);
    P sp_i = P::constant(T::one_like(proto), p.var());
    for (unsigned i = 0; i < m; ++i) {
        F c = T::from_rational(proto, Rational(binomial(static_cast<long>(n) - 1 + i, i)));
        a = a + rn * sp_i * c;
        sp_i = sp_i * s * p;
    }
    P rq_j = P::constant(T::one_like(proto), p.var());
    for (unsigned j = 0; j < n; ++j) {
        F c = T::from_rational(proto, Rational(binomial(static_cast<long>(m) - 1 + j, j)));
        bpoly = bpoly + sm * rq_j * c;
        rq_j = rq_j * r * q;
    }
    return {a, bpoly};
}

template <class F>
struct LinearBlock {
    F root;
    // coeffs[j-1] is A_j in A_j/(t - root)^j
    std::vector<F> coeffs;
};

// Full expansion over distinct linear factors: each block comes from
// frac_at_origin applied to F(t + a).
template <class F>
std::vector<LinearBlock<F>> full_pfd_linear(const UnivariatePolynomial<F>& n,
                                            const std::vector<std::pair<F, unsigned>>& roots) {
    using P = UnivariatePolynomial<F>;
    using T = FieldTraits<F>;
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (T::is_zero(roots[i].first - roots[j].first))
                throw DomainError("repeated root " + T::str(roots[i].first));
    F proto = n.proto();
    P d = P::constant(T::one_like(proto), n.var());
    for (const auto& [a, m] : roots) d = d * P::linear_root(a, n.var()).pow(m);
    P r = poly_mod(n, d);
    std::vector<LinearBlock<F>> out;
    for (const auto& [a, m] : roots) {
        auto fp = frac_at_origin(r.translate(a), d.translate(a), m);
        LinearBlock<F> blk{a, std::vector<F>(m, T::zero_like(proto))};
        for (unsigned k = 0; k < m; ++k) blk.coeffs[m - 1 - k] = fp.numerator.coeff(k);
        out.push_back(std::move(blk));
    }
    return out;
}

// Polynomial part of N/D from t^{-1}P(t^{-1}) = Frac(t^{-1}R(t^{-1}), t^k).
template <class F>
UnivariatePolynomial<F> polynomial_part_by_reversal(const UnivariatePolynomial<F>& n,
                                                    const UnivariatePolynomial<F>& d) {
    using P = UnivariatePolynomial<F>;
    if (d.is_zero()) throw DomainError("zero denominator");
    if (n.is_zero() || n.degree() < d.degree()) return P(n.proto(), n.var());
    std::size_t dn = static_cast<std::size_t>(n.degree()), dd = static_cast<std::size_t>(d.degree());
    std::size_t k = dn - dd + 1;
    P nrev = n.reversed(dn);
    P drev = d.reversed(dd);
    P shifted = drev * P::monomial(d.one(), k, d.var());
    auto fp = frac_at_origin(nrev, shifted, k);
    return fp.numerator.reversed(k - 1);
}

using QFE = QuotientFieldElement;
using QFEPoly = UnivariatePolynomial<QFE>;

struct PrimeBlock {
    std::shared_ptr<const QPoly> modulus;
    // h[j-1] is h_j(α) in h_j(α)/(t - α)^j
    std::vector<QFE> h;
    std::string to_string(const std::string& tvar = "t") const;
};

// Block Σ_j h_j(α)/(t-α)^j of N/D at a root α of the monic irreducible p.
PrimeBlock frac_at_prime(const QPoly& n, const QPoly& d, const QPoly& p);

// Sum of h over the conjugates of α.
Rational trace(const QFE& h);

// Re-assembles Σ over conjugate roots of the block into R/p^k, returning R.
QPoly symmetrize_prime_block(const PrimeBlock& blk);

}  // namespace omegact
