#include "omegact/dedekind.hpp"

#include <numeric>

#include "omegact/ppfraction.hpp"

namespace omegact {

namespace {

QPoly t_power_plus(long a, long c) {
    std::vector<Rational> v(static_cast<std::size_t>(a + 1), Rational(0));
    v[0] = c;
    v[static_cast<std::size_t>(a)] += 1;
    return QPoly(std::move(v), Rational(0), "t");
}

}  // namespace

Rational generalized_sum(const RatFunc& r, long n) {
    if (n < 1) throw DomainError("root of unity order must be positive");
    if (n == 1) return 0;
    // p = t^{n-1} + ... + t + 1
    QPoly p(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)), Rational(0), "t");
    auto g = poly_gcd(r.den(), p);
    if (g.degree() > 0) throw DomainError("R has a pole at a nontrivial root of unity: common factor " + g.to_string());
    QPoly d = r.den() * t_power_plus(n, -1);
    auto fp = frac_at(r.num(), d, p);
    return Rational(-n) * fp.numerator.coeff(0) / p.coeff(0);
}

static RatFunc dedekind_kernel(const std::vector<long>& a) {
    QPoly num = QPoly::constant(Rational(1)), den = QPoly::constant(Rational(1));
    for (long ai : a) {
        if (ai < 1) throw DomainError("Dedekind parameters must be positive");
        num = num * t_power_plus(ai, 1);
        den = den * t_power_plus(ai, -1);
    }
    return RatFunc(num, den);
}

Rational dedekind_sum(long n, const std::vector<long>& a) {
    if (n < 1) throw DomainError("n must be positive");
    for (long ai : a)
        if (std::gcd(n, ai) != 1)
            throw DomainError("gcd(" + std::to_string(n) + ", " + std::to_string(ai) + ") != 1");
    if (n == 1) return 0;
    return generalized_sum(dedekind_kernel(a), n);
}

DedekindReciprocity dedekind_reciprocity(const std::vector<long>& a) {
    if (a.size() < 2) throw DomainError("reciprocity needs at least two parameters");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (std::gcd(a[i], a[j]) != 1) throw DomainError("parameters must be pairwise coprime");
    DedekindReciprocity rep;
    for (std::size_t j = 0; j < a.size(); ++j) {
        std::vector<long> others;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != j) others.push_back(a[i]);
        rep.lhs += dedekind_sum(a[j], others) / Rational(a[j]);
    }
    std::size_t m1 = a.size();
    QPoly num = QPoly::constant(Rational(1)), den = QPoly::constant(Rational(1));
    for (long ai : a) {
        num = num * t_power_plus(ai, 1);
        den = den * t_power_plus(ai, -1);
    }
    QPoly d1 = QPoly::linear_root(Rational(1)).pow(static_cast<unsigned>(m1));
    auto fp = conjugated_frac(num, den, d1, Rational(1));
    Rational at0 = fp.numerator.coeff(0) / fp.factor.coeff(0);
    // F(0) = (-1)^{m+1}
    Rational f0 = (m1 % 2 == 0) ? Rational(1) : Rational(-1);
    rep.rhs = at0 / 2 + (1 - f0) / 2;
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace omegact
