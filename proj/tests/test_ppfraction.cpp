#include "doctest.h"
#include "gen.hpp"
#include "omegact/ppfraction.hpp"
#include "omegact/ratfunc.hpp"

using namespace omegact;

namespace {

QPoly denominator_of(const std::vector<std::pair<Rational, unsigned>>& roots) {
    QPoly d = QPoly::constant(Rational(1));
    for (const auto& [a, m] : roots) d = d * QPoly::linear_root(a).pow(m);
    return d;
}

}  // namespace

TEST_CASE("series quotient inverts multiplication") {
    gen::Rng r(21);
    for (int trial = 0; trial < 40; ++trial) {
        QPoly n = gen::poly(r, r.between(0, 5)), e = gen::poly(r, r.between(0, 4));
        if (is_zero(e.coeff(0))) e = e + QPoly::constant(Rational(1));
        std::size_t len = static_cast<std::size_t>(r.between(1, 9));
        QPoly s = series_quotient(n, e, len);
        CHECK((s * e).truncate(len) == n.truncate(len));
    }
    CHECK_THROWS_AS(series_quotient(QPoly::constant(Rational(1)), QPoly::monomial(Rational(1), 1), 3), DomainError);
}

TEST_CASE("split reassembles to N/D") {
    gen::Rng r(22);
    for (int trial = 0; trial < 40; ++trial) {
        auto roots = gen::linear_roots(r, 8, 3);
        QPoly d = denominator_of(roots);
        std::vector<QPoly> factors;
        for (const auto& [a, m] : roots) factors.push_back(QPoly::linear_root(a).pow(m));
        QPoly n = gen::poly(r, r.between(0, d.degree() + 2));
        auto split = ppfraction_split(n, d, factors);
        RatFunc sum(split.polynomial_part);
        for (const auto& part : split.parts) {
            CHECK(part.numerator.degree() < part.factor.degree());
            sum = sum + RatFunc(part.numerator, part.factor);
        }
        CHECK(sum == RatFunc(n, d));
    }
}

TEST_CASE("split rejects bad factor lists") {
    QPoly a = QPoly::linear_root(Rational(1)), b = QPoly::linear_root(Rational(2));
    QPoly n = QPoly::constant(Rational(1));
    CHECK_THROWS_AS(ppfraction_split(n, a * b, {a}), DomainError);
    CHECK_THROWS_AS(ppfraction_split(n, a * a, {a, a}), DomainError);
    CHECK_THROWS_AS(frac_at(n, a * b, a * a), DomainError);
    CHECK_THROWS_AS(frac_at(n, a * a * b, a), DomainError);
}

TEST_CASE("frac at the origin keeps the low part of N/E") {
    gen::Rng r(23);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t m = static_cast<std::size_t>(r.between(1, 5));
        QPoly e = gen::poly(r, r.between(0, 4));
        if (is_zero(e.coeff(0))) e = e + QPoly::constant(Rational(2));
        QPoly d = QPoly::monomial(Rational(1), m) * e;
        QPoly n = gen::poly(r, r.between(0, 6));
        auto fp = frac_at_origin(n, d, m);
        CHECK(fp.numerator.degree() < static_cast<long>(m));
        CHECK(fp.numerator == series_quotient(n, e, m));
        // agrees with the generic modular route
        CHECK(fp.numerator == frac_at(n, d, fp.factor).numerator);
    }
    QPoly t2 = QPoly::monomial(Rational(1), 2);
    CHECK_THROWS_AS(frac_at_origin(QPoly::constant(Rational(1)), t2, 3), DomainError);
    CHECK_THROWS_AS(frac_at_origin(QPoly::constant(Rational(1)), t2, 1), DomainError);
}

TEST_CASE("linear routes agree") {
    gen::Rng r(24);
    for (int trial = 0; trial < 30; ++trial) {
        auto roots = gen::linear_roots(r, 9, 4);
        QPoly d = denominator_of(roots);
        QPoly n = gen::poly(r, r.between(0, d.degree() - 1));
        auto blocks = full_pfd_linear(n, roots);
        RatFunc sum;
        for (const auto& blk : blocks)
            for (std::size_t j = 1; j <= blk.coeffs.size(); ++j)
                sum = sum + RatFunc(QPoly::constant(blk.coeffs[j - 1]),
                                    QPoly::linear_root(blk.root).pow(static_cast<unsigned>(j)));
        CHECK(sum == RatFunc(n, d));
        for (const auto& [a, m] : roots) {
            QPoly dk = QPoly::linear_root(a).pow(m);
            CHECK(conjugated_frac(n, d, dk, a).numerator == frac_at(n, d, dk).numerator);
        }
    }
    CHECK_THROWS_AS(full_pfd_linear(QPoly::constant(Rational(1)),
                                    std::vector<std::pair<Rational, unsigned>>{{Rational(1), 1}, {Rational(1), 2}}),
                    DomainError);
}

TEST_CASE("power split") {
    gen::Rng r(25);
    for (int trial = 0; trial < 30; ++trial) {
        auto roots = gen::linear_roots(r, 6, 2);
        if (roots.size() < 2) continue;
        QPoly p = QPoly::linear_root(roots[0].first), q = QPoly::linear_root(roots[1].first);
        if (r.coin()) p = p * QPoly::linear_root(roots[0].first + 20);
        unsigned m = static_cast<unsigned>(r.between(1, 4)), n = static_cast<unsigned>(r.between(1, 4));
        auto [a, b] = power_split(p, q, m, n);
        QPoly pm = p.pow(m), qn = q.pow(n);
        CHECK(a * qn + b * pm == QPoly::constant(Rational(1)));
    }
    QPoly p = QPoly::linear_root(Rational(1));
    CHECK_THROWS_AS(power_split(p, p * p, 1, 1), DomainError);
    CHECK_THROWS_AS(power_split(p, QPoly::linear_root(Rational(2)), 0, 1), DomainError);
}

TEST_CASE("polynomial part by reversal matches division") {
    gen::Rng r(26);
    for (int trial = 0; trial < 60; ++trial) {
        QPoly d = gen::poly(r, r.between(0, 4));
        QPoly n = gen::poly(r, r.between(0, 9));
        CHECK(polynomial_part_by_reversal(n, d) == poly_divmod(n, d).first);
    }
}

TEST_CASE("prime blocks reassemble over conjugates") {
    QPoly p({-1, -1, 1}, Rational(0));  // t^2 - t - 1
    QPoly q({2, -1, 1}, Rational(0));   // t^2 - t + 2
    QPoly den = p * p * q;
    auto mp = std::make_shared<const QPoly>(p);
    CHECK(trace(QFE::generator(mp)) == 1);
    CHECK(trace(QFE::from_rational(mp, Rational(3))) == 6);
    gen::Rng r(27);
    for (int trial = 0; trial < 20; ++trial) {
        QPoly n = gen::poly(r, r.between(0, 5));
        PrimeBlock a = frac_at_prime(n, den, p), b = frac_at_prime(n, den, q);
        CHECK(a.h.size() == 2);
        CHECK(b.h.size() == 1);
        RatFunc sum = RatFunc(symmetrize_prime_block(a), p * p) + RatFunc(symmetrize_prime_block(b), q);
        CHECK(sum == RatFunc(n, den));
        // agrees with the rational split over the same factors
        auto split = ppfraction_split(n, den, {p * p, q});
        CHECK(split.parts[0].numerator == symmetrize_prime_block(a));
    }
}
