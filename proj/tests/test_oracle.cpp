#include <cmath>
#include <numeric>

#include "doctest.h"
#include "gen.hpp"
#include "omegact/oracle.hpp"

using namespace omegact;
using namespace omegact::oracle;

TEST_CASE("solutions of x1 + x2 = 3") {
    auto all = cleaned(enumerate_solutions({{1, 1}}, {-3}, false, 10));
    CHECK(all.size() == 4);
    for (int a = 0; a <= 3; ++a) CHECK(lookup(all, {a, 3 - a}) == 1);
    auto strict = cleaned(enumerate_solutions({{1, 1}}, {-3}, true, 10));
    CHECK(strict.size() == 2);
    CHECK(lookup(strict, {0, 3}) == 0);
    // degree bound cuts the table
    CHECK(cleaned(enumerate_solutions({{1, -1}}, {0}, false, 4)).size() == 3);
}

TEST_CASE("Dyson constant terms are multinomials") {
    for (long a = 0; a <= 2; ++a)
        for (long b = 0; b <= 2; ++b)
            for (long c = 0; c <= 1; ++c)
                for (long d = 0; d <= 1; ++d) {
                    BigInt m = factorial(a + b + c + d) / (factorial(a) * factorial(b) * factorial(c) * factorial(d));
                    CHECK(dyson_ct({a, b, c, d}) == Rational(m));
                }
}

TEST_CASE("unconstrained one-dimensional walks are binomial") {
    auto w = count_walks({{1, 0}, {-1, 0}}, {}, {0, 0}, 9);
    for (long n = 0; n <= 9; ++n)
        for (long k = -n; k <= n; k += 2) {
            auto it = w[static_cast<std::size_t>(n)].find({k, 0});
            REQUIRE(it != w[static_cast<std::size_t>(n)].end());
            CHECK(it->second == Rational(binomial(n, (n + k) / 2)));
        }
}

TEST_CASE("walk constraints and windows") {
    auto dyck = count_walks({{0, 1}, {0, -1}}, {Constraint::HeightBand, 0, 100}, {0, 0}, 8);
    for (long h = 0; h <= 4; ++h) CHECK(dyck[static_cast<std::size_t>(2 * h)].at({0, 0}) == Rational(catalan(h)));
    Window win{-1, 1, -1, 1};
    auto boxed = count_walks({{1, 0}, {-1, 0}}, {}, {0, 0}, 6, &win);
    for (const auto& counts : boxed)
        for (const auto& [pt, c] : counts) CHECK(std::abs(pt.first) <= 1);
    // weighted steps multiply
    auto weighted = count_walks({{1, 0, Rational(2)}, {0, 1, Rational(3)}}, {}, {0, 0}, 4);
    CHECK(weighted[4].at({2, 2}) == Rational(binomial(4, 2) * 36));
    auto quarter = count_walks({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {Constraint::Quarter}, {1, 1}, 2);
    CHECK(quarter[1].size() == 2);
}

TEST_CASE("truncated CT of 1/((1 - l x)(1 - y/l))") {
    LaurentPolynomial one = LaurentPolynomial::constant(3, 1);
    std::vector<SeriesFactor> f{{one - LaurentPolynomial(Monomial(Rational(1), {1, 1, 0})), 1},
                                {one - LaurentPolynomial(Monomial(Rational(1), {-1, 0, 1})), 1}};
    auto t = cleaned(truncated_ct(one, f, {1, 1, 2}, 9, {0}));
    CHECK(t.size() == 4);
    for (int k = 0; k <= 3; ++k) CHECK(lookup(t, {0, k, k}) == 1);
    // the CT does not depend on the order of the factors
    std::vector<SeriesFactor> g{f[1], f[0]};
    CHECK(cleaned(truncated_ct(one, g, {1, 1, 2}, 9, {0})) == t);
}

TEST_CASE("floating Dedekind oracle") {
    CHECK(std::abs(dedekind_float(3, {1})) < 1e-12);
    CHECK(std::abs(dedekind_float(4, {1, 1}) + 2) < 1e-12);
}

TEST_CASE("binomial identity suite") {
    for (const auto& id : binomial_identities()) {
        if (id == "saalschutz") continue;  // covered by the acceptance run
        auto checks = binomial_suite(id, 6);
        CHECK(!checks.empty());
        for (const auto& c : checks) {
            INFO(id);
            CHECK(c.pass);
            CHECK(c.lhs == c.rhs);
        }
    }
    CHECK_THROWS(binomial_suite("nope", 3));
}
