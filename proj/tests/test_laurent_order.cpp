#include "doctest.h"
#include "gen.hpp"
#include "omegact/expr.hpp"
#include "omegact/ppfraction.hpp"
#include "omegact/ratfunc.hpp"

using namespace omegact;

TEST_CASE("reverse-lex order: the last variable dominates") {
    VariableOrder o(VarNames{"x1", "x2"});
    CHECK(o.compare({2, 0}, {0, 1}) == -1);
    CHECK(o.compare({0, 1}, {5, 0}) == 1);
    CHECK(o.compare({1, 1}, {1, 1}) == 0);
    CHECK(o.sign({7, -1}) == -1);
    CHECK(o.sign({-7, 1}) == 1);
    CHECK_THROWS_AS(o.sign({1}), DomainError);
    CHECK_THROWS_AS(o.index_of("y"), DomainError);
}

TEST_CASE("reversing one variable flips its sign only") {
    VariableOrder o(VarNames{"l", "x"});
    VariableOrder r = VariableOrder::reversed_in(o, "l");
    CHECK(r.sign({1, 0}) == -1);
    CHECK(r.sign({-1, 0}) == 1);
    CHECK(r.sign({5, 1}) == 1);
    // reversing twice restores the plain order on every vector
    VariableOrder rr = VariableOrder::reversed_in(r, "l");
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) CHECK(rr.sign({a, b}) == o.sign({a, b}));
}

TEST_CASE("property: compare is a total order compatible with addition") {
    gen::Rng r(31);
    VariableOrder o(VarNames{"a", "b", "c"});
    for (int trial = 0; trial < 200; ++trial) {
        ExponentVector a(3), b(3), c(3);
        for (auto* v : {&a, &b, &c})
            for (auto& x : *v) x = static_cast<int>(r.between(-3, 3));
        CHECK(o.compare(a, b) == -o.compare(b, a));
        CHECK(o.compare(a, b) == o.compare(add(a, c), add(b, c)));
        if (o.compare(a, b) <= 0 && o.compare(b, c) <= 0) CHECK(o.compare(a, c) <= 0);
    }
}

TEST_CASE("initial term is the minimal term") {
    VariableOrder o(VarNames{"x", "y"});
    auto x = LaurentPolynomial::variable(2, 0), y = LaurentPolynomial::variable(2, 1);
    auto one = LaurentPolynomial::constant(2, 1);
    CHECK(initial_term(one - x + y, o) == Monomial::one(2));
    LaurentPolynomial f = x + x * x * LaurentPolynomial::variable(2, 1, -1) * Rational(3);
    CHECK(initial_term(f, o) == Monomial(Rational(3), {2, -1}));
    CHECK_THROWS_AS(initial_term(LaurentPolynomial(2), o), DomainError);
}

TEST_CASE("factor classification") {
    VariableOrder o(VarNames{"l", "x"});
    auto l = LaurentPolynomial::variable(2, 0), li = LaurentPolynomial::variable(2, 0, -1);
    auto x = LaurentPolynomial::variable(2, 1);
    auto one = LaurentPolynomial::constant(2, 1);
    CHECK(classify_factor(one - l * x, 0, o).tag == FactorTag::PT);
    CHECK(classify_factor(one - x * li, 0, o).tag == FactorTag::NT);
    CHECK(classify_factor(one - l * x - x * li, 0, o).tag == FactorTag::Mixed);
    // in the order where l is reversed, 1 - l is led by l
    VariableOrder r = VariableOrder::reversed_in(o, "l");
    FactorClass c = classify_factor(one - l, 0, r);
    CHECK(c.tag == FactorTag::NT);
    CHECK(c.initial == Monomial(Rational(-1), {1, 0}));
}

TEST_CASE("ct_rational over Q equals the series coefficient") {
    gen::Rng r(32);
    for (int trial = 0; trial < 40; ++trial) {
        QPoly n = gen::poly(r, r.between(0, 3));
        std::vector<std::pair<QPoly, unsigned>> factors;
        QPoly prod = QPoly::constant(Rational(1));
        long k = r.between(1, 3);
        for (long i = 0; i < k; ++i) {
            QPoly f = gen::poly(r, r.between(1, 2));
            if (is_zero(f.coeff(0))) f = f + QPoly::constant(Rational(1));
            unsigned m = static_cast<unsigned>(r.between(1, 2));
            factors.emplace_back(f, m);
            prod = prod * f.pow(m);
        }
        long shift = -r.between(0, 4);
        Rational got = ct_rational(n, factors, shift);
        CHECK(got == series_quotient(n, prod, static_cast<std::size_t>(1 - shift)).coeff(static_cast<std::size_t>(-shift)));
    }
    // CT t^-2 (1-t)^-3 = C(4, 2)
    QPoly one_minus_t({1, -1}, Rational(0));
    CHECK(ct_rational(QPoly::constant(Rational(1)), {{one_minus_t, 3}}, -2) == Rational(binomial(4, 2)));
}

TEST_CASE("Hadamard product multiplies coefficients") {
    gen::Rng r(33);
    for (int trial = 0; trial < 12; ++trial) {
        QPoly nf = gen::poly(r, r.between(0, 2)), ng = gen::poly(r, r.between(0, 1));
        QPoly df = gen::poly(r, r.between(1, 2)), dg = gen::poly(r, r.between(1, 2));
        if (is_zero(df.coeff(0))) df = df + QPoly::constant(Rational(1));
        if (is_zero(dg.coeff(0))) dg = dg + QPoly::constant(Rational(1));
        RatFunc f(nf, df), g(ng, dg);
        auto h = hadamard(f, g).series(10), a = f.series(10), b = g.series(10);
        for (std::size_t k = 0; k < 10; ++k) CHECK(h[k] == a[k] * b[k]);
    }
    RatFunc pole(QPoly::constant(Rational(1)), QPoly::monomial(Rational(1), 1));
    CHECK_THROWS_AS(hadamard(pole, pole), DomainError);
}

TEST_CASE("Elliott rationals print canonically") {
    VariableOrder o(VarNames{"x", "y"});
    ElliottRational f = lower_elliott("(1+x^2*y)/((1-x)*(1-x^3*y^2))", o);
    CHECK(f.to_string() == "(1+x^2*y)/((1-x^3*y^2)*(1-x))");
    CHECK(lower_elliott(f.to_string(), o).to_string() == f.to_string());
    // a factor led by its non-unit term is flipped
    ElliottRational g = lower_elliott("1/(1-1/x)", VariableOrder(VarNames{"x"}));
    CHECK(g.equals(lower_elliott("-x/(1-x)", VariableOrder(VarNames{"x"}))));
    CHECK(g.denominator().size() == 1);
    CHECK(g.denominator()[0].exps == ExponentVector{1});
    CHECK_THROWS_AS(lower_elliott("1/(1-x-y)", o), DomainError);
}

TEST_CASE("property: Elliott rational arithmetic") {
    gen::Rng r(34);
    VariableOrder o(VarNames{"l", "x", "y"});
    for (int trial = 0; trial < 30; ++trial) {
        ElliottRational a = gen::elliott(r, o), b = gen::elliott(r, o);
        CHECK((a * b).equals(b * a));
        CHECK(((a + b) - b).equals(a));
        CHECK((a * b).cancel_common().equals(a * b));
        CHECK((a - a).is_zero());
    }
}
