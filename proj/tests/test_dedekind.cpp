#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "gen.hpp"
#include "omegact/dedekind.hpp"
#include "omegact/oracle.hpp"
#include "omegact/ratfunc.hpp"

using namespace omegact;

namespace {

double float_sum(const RatFunc& r, long n) {
    std::complex<double> acc = 0;
    for (long k = 1; k < n; ++k) {
        std::complex<double> a = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
        std::complex<double> num = 0, den = 0;
        for (std::size_t i = r.num().coeffs().size(); i-- > 0;) num = num * a + r.num().coeffs()[i].get_d();
        for (std::size_t i = r.den().coeffs().size(); i-- > 0;) den = den * a + r.den().coeffs()[i].get_d();
        acc += num / den;
    }
    return acc.real();
}

}  // namespace

TEST_CASE("property: Dedekind sums match the floating-point oracle") {
    gen::Rng r(51);
    for (int trial = 0; trial < 60; ++trial) {
        long n = r.between(2, 19);
        std::vector<long> a;
        long m = r.between(1, 4);
        while (static_cast<long>(a.size()) < m) {
            long x = r.between(1, 30);
            if (std::gcd(x, n) == 1) a.push_back(x);
        }
        CHECK(std::abs(dedekind_sum(n, a).get_d() - oracle::dedekind_float(n, a)) < 1e-9);
    }
}

TEST_CASE("odd-length sums vanish") {
    // each factor is odd under alpha -> 1/alpha
    for (long n = 2; n <= 9; ++n) CHECK(dedekind_sum(n, {1}) == 0);
    CHECK(dedekind_sum(7, {1, 2, 3}) == 0);
}

TEST_CASE("non-coprime or negative arguments are rejected") {
    CHECK_THROWS_AS(dedekind_sum(6, {2}), DomainError);
    CHECK_THROWS_AS(dedekind_sum(5, {-2}), DomainError);
}

TEST_CASE("property: reciprocity on coprime tuples") {
    gen::Rng r(52);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 25; ++trial) {
        std::vector<long> a;
        long m = r.between(3, 4);
        for (long i = 0; i < m; ++i) a.push_back(r.between(1, 13));
        bool coprime = true;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j) coprime = coprime && std::gcd(a[i], a[j]) == 1;
        if (!coprime) continue;
        DedekindReciprocity rec = dedekind_reciprocity(a);
        CHECK(rec.equal);
        CHECK(rec.lhs == rec.rhs);
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("property: generalized sums match complex arithmetic") {
    gen::Rng r(53);
    for (int trial = 0; trial < 30; ++trial) {
        long n = r.between(2, 11);
        QPoly num = gen::poly(r, r.between(0, 3));
        // denominator with integer roots away from the unit circle
        QPoly den = QPoly::linear_root(Rational(r.between(2, 4))) * QPoly::linear_root(Rational(-r.between(2, 4)));
        RatFunc f(num, den);
        CHECK(std::abs(generalized_sum(f, n).get_d() - float_sum(f, n)) < 1e-9);
    }
}
