#include "doctest.h"
#include "gen.hpp"
#include "omegact/expr.hpp"
#include "omegact/oracle.hpp"
#include "omegact/series.hpp"
#include "omegact/walks.hpp"

using namespace omegact;

namespace {

Rational scalar(const TruncatedSeries& s, std::size_t k) {
    ElliottRational c = s.coeff(k).cancel_common();
    REQUIRE(c.is_polynomial());
    return c.numerator().constant_term();
}

Rational at(const TruncatedSeries& s, std::size_t k, const ExponentVector& e) {
    ElliottRational c = s.coeff(k).cancel_common();
    REQUIRE(c.is_polynomial());
    return c.numerator().coefficient(e);
}

TruncatedSeries random_unit_series(gen::Rng& r, std::size_t n) {
    std::vector<Rational> c{Rational(1)};
    for (std::size_t k = 1; k <= n; ++k) c.push_back(r.small_rational());
    return TruncatedSeries::from_coefficients(scalar_order(), c, n);
}

}  // namespace

TEST_CASE("property: series field operations") {
    gen::Rng r(61);
    const std::size_t n = 7;
    TruncatedSeries one = TruncatedSeries::constant(ElliottRational::constant(scalar_order(), 1), n);
    for (int trial = 0; trial < 15; ++trial) {
        TruncatedSeries a = random_unit_series(r, n), b = random_unit_series(r, n);
        CHECK((a * a.inverse()).equals(one));
        CHECK(a.log().exp().equals(a));
        CHECK((a * b).log().equals(a.log() + b.log()));
        CHECK(a.pow(3).equals(a * a * a));
        CHECK((a * b).derivative().equals((a.derivative() * b + a * b.derivative()).truncate(n - 1)));
    }
    TruncatedSeries t = TruncatedSeries::variable(scalar_order(), n);
    CHECK_THROWS_AS(t.inverse(), DomainError);
    CHECK_THROWS_AS(t.log(), DomainError);
    CHECK_THROWS_AS(one.exp(), DomainError);
}

TEST_CASE("positive root of y = t (1 + y^2) is t C(t^2)") {
    const std::size_t n = 13;
    VariableOrder so = scalar_order();
    TruncatedSeries t = TruncatedSeries::variable(so, n);
    TruncatedSeries one = TruncatedSeries::constant(ElliottRational::constant(so, 1), n);
    TruncatedSeries y = positive_root({t, -one, t});
    for (std::size_t k = 0; k <= n; ++k)
        CHECK(scalar(y, k) == (k % 2 ? Rational(catalan(static_cast<long>(k / 2))) : Rational(0)));
}

TEST_CASE("Lagrange CT gives central binomials") {
    // CT_y 1/(1 - t/y - t y)
    const std::size_t n = 12;
    VariableOrder so = scalar_order();
    TruncatedSeries t = TruncatedSeries::variable(so, n);
    TruncatedSeries one = TruncatedSeries::constant(ElliottRational::constant(so, 1), n);
    TruncatedSeries ct = lagrange_ct({one}, {-t, one, -t});
    for (std::size_t k = 0; k <= n; ++k) {
        long h = static_cast<long>(k / 2);
        CHECK(scalar(ct, k) == (k % 2 ? Rational(0) : Rational(binomial(2 * h, h))));
    }
}

TEST_CASE("divided differences") {
    VariableOrder o(VarNames{"x", "u", "z"});
    ElliottRational cube = lower_elliott("x^3", o);
    CHECK(divided_difference(cube, 0, 1).equals(lower_elliott("x^2+x*u+u^2", o)));
    CHECK(divided_difference(cube, 0, 0).equals(lower_elliott("3*x^2", o)));
    ElliottRational q = lower_elliott("x/(1-x*z)", o);
    ElliottRational d = divided_difference(q, 0, 1);
    CHECK((d * lower_elliott("x-u", o)).equals(q - lower_elliott("u/(1-u*z)", o)));
}

TEST_CASE("third decomposition multiplies back") {
    StepSet s = StepSet::from_steps({{1, 0}, {-1, 0}, {0, 1}, {2, -1}});
    TruncatedSeries h = free_walks(s, 5);
    ThirdDecomposition d = third_decomposition(h, "x");
    CHECK((d.minus * d.zero * d.plus).equals(h));
    for (std::size_t k = 0; k <= 5; ++k) {
        CHECK_FALSE(d.zero.coeff(k).cancel_common().depends_on(0));
        LambdaSplit sp = lambda_split(d.plus.coeff(k), 0);
        CHECK(sp.negative.is_zero());
    }
}

TEST_CASE("property: graded expansion matches the truncated oracle") {
    gen::Rng r(62);
    VariableOrder o(VarNames{"x", "y"});
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPolynomial num = LaurentPolynomial::constant(2, 1);
        std::vector<BinomialFactor> den;
        std::vector<oracle::SeriesFactor> sf;
        long k = r.between(1, 3);
        for (long i = 0; i < k; ++i) {
            ExponentVector e{static_cast<int>(r.between(0, 2)), static_cast<int>(r.between(0, 2))};
            if (is_zero(e)) e[0] = 1;
            Rational c = r.coin() ? Rational(1) : Rational(-2);
            den.push_back({c, e, 1});
            sf.push_back({LaurentPolynomial::constant(2, 1) - LaurentPolynomial(Monomial(c, e)), 1});
        }
        ElliottRational f(num, den, o);
        auto got = graded_expansion(f, 6);
        auto want = oracle::cleaned(oracle::truncated_ct(num, sf, {1, 1}, 6, {}));
        CHECK(oracle::cleaned(got) == want);
    }
}

TEST_CASE("free walks count unconstrained walks") {
    std::vector<LatticeStep> steps{{1, 0}, {-1, 0}, {0, 1}, {1, 1}};
    TruncatedSeries w = free_walks(StepSet::from_steps(steps), 6);
    auto ref = oracle::count_walks({{1, 0}, {-1, 0}, {0, 1}, {1, 1}}, {}, {0, 0}, 6);
    for (std::size_t k = 0; k <= 6; ++k)
        for (const auto& [pt, c] : ref[k])
            CHECK(at(w, k, {static_cast<int>(pt.first), static_cast<int>(pt.second)}) == c);
}

TEST_CASE("unbounded Dyck heights match the oracle") {
    BoundedDyck b = dyck_bounded(0, 10);
    auto ref = oracle::count_walks({{0, 1}, {0, -1}}, {oracle::Constraint::HeightBand, 0, 100}, {0, 0}, 10);
    for (std::size_t k = 0; k <= 10; ++k)
        for (long h = 0; h <= 10; ++h) {
            auto it = ref[k].find({0, h});
            CHECK(at(b.h, k, {static_cast<int>(h)}) == (it == ref[k].end() ? Rational(0) : it->second));
        }
}

TEST_CASE("slit plane walks to (1, 0) on the ordinary lattice") {
    StepSet lat = StepSet::ordinary_lattice();
    SlitPlane sp = slit_plane(lat, 7, 1);
    auto ref = oracle::count_walks({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {oracle::Constraint::Slit}, {0, 0}, 7);
    for (std::size_t k = 1; k <= 7; ++k) {
        auto it = ref[k].find({1, 0});
        CHECK(scalar(sp.s_p0, k) == (it == ref[k].end() ? Rational(0) : it->second));
    }
}
