#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "omegact/rational.hpp"

namespace omegact {

// Coefficient-field interface. Every algorithm over UnivariatePolynomial only
// touches coefficients through these hooks. zero_like/one_like take a sample
// element so that fields carrying context (a modulus) can build constants.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static Rational zero_like(const Rational&) { return Rational(0); }
    static Rational one_like(const Rational&) { return Rational(1); }
    static Rational from_rational(const Rational&, const Rational& q) { return q; }
    static Rational inv(const Rational& a) {
        if (sgn(a) == 0) throw DomainError("inverse of zero");
        return 1 / a;
    }
    static std::string str(const Rational& a) { return a.get_str(); }
    // order of the element in the working field's dominant variable; ℚ is trivially 0
    static long valuation(const Rational&) { return 0; }
};

inline constexpr long kZeroPolyDegree = std::numeric_limits<long>::min();

template <class F>
class UnivariatePolynomial {
public:
    using Traits = FieldTraits<F>;

    explicit UnivariatePolynomial(F proto = F(), std::string var = "t")
        : proto_(Traits::zero_like(proto)), var_(std::move(var)) {}
    UnivariatePolynomial(std::vector<F> coeffs, F proto, std::string var = "t")
        : coeffs_(std::move(coeffs)), proto_(Traits::zero_like(proto)), var_(std::move(var)) {
        trim();
    }

    static UnivariatePolynomial constant(const F& c, std::string var = "t") {
        return UnivariatePolynomial(std::vector<F>{c}, c, std::move(var));
    }
    static UnivariatePolynomial monomial(const F& c, std::size_t k, std::string var = "t") {
        std::vector<F> v(k + 1, Traits::zero_like(c));
        v[k] = c;
        return UnivariatePolynomial(std::move(v), c, std::move(var));
    }
    // t - a
    static UnivariatePolynomial linear_root(const F& a, std::string var = "t") {
        return UnivariatePolynomial(std::vector<F>{-a, Traits::one_like(a)}, a, std::move(var));
    }

    const std::vector<F>& coeffs() const { return coeffs_; }
    const F& proto() const { return proto_; }
    const std::string& var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return coeffs_.empty() ? kZeroPolyDegree : static_cast<long>(coeffs_.size()) - 1; }
    F coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : proto_; }
    F leading() const { return coeffs_.empty() ? proto_ : coeffs_.back(); }
    F zero() const { return proto_; }
    F one() const { return Traits::one_like(proto_); }

    UnivariatePolynomial operator+(const UnivariatePolynomial& o) const {
        std::vector<F> r(std::max(coeffs_.size(), o.coeffs_.size()), proto_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] = r[i] + o.coeffs_[i];
        return UnivariatePolynomial(std::move(r), proto_, var_);
    }
    UnivariatePolynomial operator-() const {
        std::vector<F> r(coeffs_);
        for (auto& c : r) c = -c;
        return UnivariatePolynomial(std::move(r), proto_, var_);
    }
    UnivariatePolynomial operator-(const UnivariatePolynomial& o) const { return *this + (-o); }
    UnivariatePolynomial operator*(const UnivariatePolynomial& o) const {
        if (is_zero() || o.is_zero()) return UnivariatePolynomial(proto_, var_);
        std::vector<F> r(coeffs_.size() + o.coeffs_.size() - 1, proto_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (Traits::is_zero(coeffs_[i])) continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] = r[i + j] + coeffs_[i] * o.coeffs_[j];
        }
        return UnivariatePolynomial(std::move(r), proto_, var_);
    }
    UnivariatePolynomial operator*(const F& c) const {
        std::vector<F> r(coeffs_);
        for (auto& x : r) x = x * c;
        return UnivariatePolynomial(std::move(r), proto_, var_);
    }
    UnivariatePolynomial& operator+=(const UnivariatePolynomial& o) { return *this = *this + o; }
    UnivariatePolynomial& operator-=(const UnivariatePolynomial& o) { return *this = *this - o; }
    UnivariatePolynomial& operator*=(const UnivariatePolynomial& o) { return *this = *this * o; }
    bool operator==(const UnivariatePolynomial& o) const {
        if (coeffs_.size() != o.coeffs_.size()) return false;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!Traits::is_zero(coeffs_[i] - o.coeffs_[i])) return false;
        return true;
    }
    bool operator!=(const UnivariatePolynomial& o) const { return !(*this == o); }

    UnivariatePolynomial pow(unsigned k) const {
        UnivariatePolynomial r = constant(one(), var_), b = *this;
        while (k) {
            if (k & 1u) r = r * b;
            k >>= 1u;
            if (k) b = b * b;
        }
        return r;
    }

    F eval(const F& x) const {
        F acc = proto_;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    UnivariatePolynomial derivative() const {
        if (coeffs_.size() <= 1) return UnivariatePolynomial(proto_, var_);
        std::vector<F> r(coeffs_.size() - 1, proto_);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            r[i - 1] = coeffs_[i] * Traits::from_rational(proto_, Rational(static_cast<long>(i)));
        return UnivariatePolynomial(std::move(r), proto_, var_);
    }

    // p(t + b)
    UnivariatePolynomial translate(const F& b) const {
        UnivariatePolynomial r(proto_, var_);
        UnivariatePolynomial lin(std::vector<F>{b, one()}, proto_, var_);
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * lin + constant(coeffs_[i], var_);
        return r;
    }

    // Keeps the coefficients of t^0..t^{n-1}.
    UnivariatePolynomial truncate(std::size_t n) const {
        std::vector<F> r(coeffs_.begin(), coeffs_.begin() + std::min(n, coeffs_.size()));
        return UnivariatePolynomial(std::move(r), proto_, var_);
    }

    // t^deg p(1/t) for a fixed target degree (deg must be >= degree()).
    UnivariatePolynomial reversed(std::size_t deg) const {
        std::vector<F> r(deg + 1, proto_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[deg - i] = coeffs_[i];
        return UnivariatePolynomial(std::move(r), proto_, var_);
    }

    UnivariatePolynomial monic() const {
        if (is_zero()) return *this;
        return *this * Traits::inv(leading());
    }

    // Lowest power of t with a nonzero coefficient (0 for the zero polynomial).
    std::size_t low_degree() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!Traits::is_zero(coeffs_[i])) return i;
        return 0;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (Traits::is_zero(coeffs_[i])) continue;
            std::string c = Traits::str(coeffs_[i]);
            std::string term;
            if (i == 0) {
                term = c;
            } else {
                std::string pw = var_ + (i == 1 ? "" : "^" + std::to_string(i));
                if (c == "1") term = pw;
                else if (c == "-1") term = "-" + pw;
                else if (c.find_first_of("+-", 1) != std::string::npos) term = "(" + c + ")*" + pw;
                else term = c + "*" + pw;
            }
            if (!out.empty() && term[0] != '-') out += "+";
            out += term;
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && Traits::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<F> coeffs_;
    F proto_;
    std::string var_;
};

template <class F>
std::pair<UnivariatePolynomial<F>, UnivariatePolynomial<F>> poly_divmod(const UnivariatePolynomial<F>& n,
                                                                         const UnivariatePolynomial<F>& d) {
    using P = UnivariatePolynomial<F>;
    using T = FieldTraits<F>;
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    if (n.degree() < d.degree()) return {P(n.proto(), n.var()), n};
    std::vector<F> rem(n.coeffs());
    std::size_t dd = static_cast<std::size_t>(d.degree());
    std::vector<F> quot(rem.size() - dd, n.zero());
    F lead_inv = T::inv(d.leading());
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (T::is_zero(rem[k])) continue;
        F q = rem[k] * lead_inv;
        quot[k - dd] = q;
        for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] = rem[k - dd + i] - q * d.coeffs()[i];
    }
    rem.resize(dd);
    return {P(std::move(quot), n.proto(), n.var()), P(std::move(rem), n.proto(), n.var())};
}

template <class F>
UnivariatePolynomial<F> poly_mod(const UnivariatePolynomial<F>& n, const UnivariatePolynomial<F>& d) {
    return poly_divmod(n, d).second;
}

template <class F>
struct ExtendedGcd {
    UnivariatePolynomial<F> g, u, v;
};

// g = gcd(a, b) monic and u·a + v·b = g.
template <class F>
ExtendedGcd<F> extended_gcd(const UnivariatePolynomial<F>& a, const UnivariatePolynomial<F>& b) {
    using P = UnivariatePolynomial<F>;
    using T = FieldTraits<F>;
    if (a.is_zero() && b.is_zero()) throw DomainError("extended_gcd of two zero polynomials");
    F proto = a.is_zero() ? b.proto() : a.proto();
    const std::string& var = a.var();
    P r0 = a, r1 = b;
    P u0 = P::constant(T::one_like(proto), var), u1(proto, var);
    P v0(proto, var), v1 = P::constant(T::one_like(proto), var);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        P u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    F li = T::inv(r0.leading());
    return {r0 * li, u0 * li, v0 * li};
}

template <class F>
UnivariatePolynomial<F> poly_gcd(const UnivariatePolynomial<F>& a, const UnivariatePolynomial<F>& b) {
    using P = UnivariatePolynomial<F>;
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
    P r0 = a, r1 = b;
    while (!r1.is_zero()) {
        P r = poly_mod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return r0.monic();
}

// Inverse of a modulo m; throws when they share a factor.
template <class F>
UnivariatePolynomial<F> inverse_mod(const UnivariatePolynomial<F>& a, const UnivariatePolynomial<F>& m) {
    auto eg = extended_gcd(poly_mod(a, m), m);
    if (eg.g.degree() != 0) throw DomainError("polynomials are not coprime: gcd " + eg.g.to_string());
    return poly_mod(eg.u, m);
}

using QPoly = UnivariatePolynomial<Rational>;

}  // namespace omegact
