#include "omegact/walks.hpp"

#include <map>

#include "omegact/omega.hpp"

namespace omegact {

const VariableOrder& walk_order() {
    static const VariableOrder o(VarNames{"x", "y"});
    return o;
}
const VariableOrder& x_order() {
    static const VariableOrder o(VarNames{"x"});
    return o;
}
const VariableOrder& y_order() {
    static const VariableOrder o(VarNames{"y"});
    return o;
}
const VariableOrder& scalar_order() {
    static const VariableOrder o{VarNames{}};
    return o;
}

StepSet StepSet::from_steps(const std::vector<LatticeStep>& steps) {
    LaurentPolynomial g(2);
    for (const auto& s : steps) g.add_term(ExponentVector{static_cast<int>(s.dx), static_cast<int>(s.dy)}, s.weight);
    return {ElliottRational(g, {}, walk_order()), steps};
}

StepSet StepSet::from_gamma(const ElliottRational& gamma) {
    if (!(gamma.order() == walk_order())) throw DomainError("step weights must be over the order (x, y)");
    return {gamma, std::nullopt};
}

StepSet StepSet::ordinary_lattice() { return from_steps({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}); }

namespace {

TruncatedSeries lift(const TruncatedSeries& s, const VariableOrder& target) {
    TruncatedSeries r(target, s.order(), s.var());
    for (std::size_t k = 0; k <= s.order(); ++k) r.set(k, embed(s.coeff(k), target));
    return r;
}

TruncatedSeries one(const VariableOrder& o, std::size_t n) {
    return TruncatedSeries::constant(ElliottRational::constant(o, 1), n);
}

ElliottRational var_power(const VariableOrder& o, std::size_t i, int k) {
    return ElliottRational::monomial(o, Monomial(Rational(1), unit_exponents(o.size(), i, k)));
}

// Positive root in the variable `var` of var - t·var·gamma, coefficients in the
// other walk variable.
TruncatedSeries kernel_root(const ElliottRational& gamma, std::size_t var, std::size_t n) {
    std::size_t other = 1 - var;
    const VariableOrder& co = other == 0 ? x_order() : y_order();
    std::map<int, LaurentPolynomial> by_power;
    for (const auto& [e, c] : gamma.numerator().terms()) {
        int j = e[var];
        if (j < -1 || j > 1) throw DomainError("steps must move by at most one unit in each direction");
        auto it = by_power.find(j);
        if (it == by_power.end()) it = by_power.emplace(j, LaurentPolynomial(1)).first;
        it->second.add_term(ExponentVector{e[other]}, c);
    }
    std::vector<TruncatedSeries> g(3, TruncatedSeries(co, n));
    g[1] = one(co, n);
    for (const auto& [j, p] : by_power) {
        ElliottRational c(p, {}, co);
        TruncatedSeries& slot = g[static_cast<std::size_t>(j + 1)];
        slot.set(1, (slot.coeff(1) - c).cancel_common());
    }
    return positive_root(g);
}

// PT_v(R·v - R/v) coefficientwise.
TruncatedSeries reflect_positive(const TruncatedSeries& r) {
    const VariableOrder& o = r.coeff_order();
    ElliottRational up = var_power(o, 0, 1), down = var_power(o, 0, -1);
    TruncatedSeries out(o, r.order(), r.var());
    for (std::size_t k = 0; k <= r.order(); ++k) {
        ElliottRational d = (r.coeff(k) * up - r.coeff(k) * down).cancel_common();
        out.set(k, lambda_split(d, 0).positive);
    }
    return out;
}

bool invariant_under_inversion(const ElliottRational& g, std::size_t var) {
    std::vector<ExponentVector> images{unit_exponents(2, 0), unit_exponents(2, 1)};
    images[var] = unit_exponents(2, var, -1);
    return g.substitute_monomials(images, g.order()).equals(g);
}

}  // namespace

TruncatedSeries free_walks(const StepSet& s, std::size_t n) {
    TruncatedSeries r(s.gamma.order(), n);
    ElliottRational g = ElliottRational::constant(s.gamma.order(), 1);
    for (std::size_t k = 0; k <= n; ++k) {
        r.set(k, g);
        g = (g * s.gamma).cancel_common();
    }
    return r;
}

SlitPlane slit_plane(const StepSet& s, std::size_t n, int p) {
    const VariableOrder& xo = x_order();
    TruncatedSeries sx(xo, n);
    ElliottRational g = ElliottRational::constant(walk_order(), 1);
    for (std::size_t k = 0; k <= n; ++k) {
        sx.set(k, drop_variable(ct_lambda(g, 1), 1));
        if (k < n) g = (g * s.gamma).cancel_common();
    }
    TruncatedSeries l = sx.log();
    TruncatedSeries pos(xo, n), rest(xo, n), sp0(scalar_order(), n);
    ElliottRational shift = var_power(xo, 0, -p);
    for (std::size_t k = 1; k <= n; ++k) {
        LambdaSplit sp = lambda_split(l.coeff(k), 0);
        pos.set(k, sp.positive);
        rest.set(k, (sp.negative + sp.constant).cancel_common());
        sp0.set(k, drop_variable(ct_lambda(l.coeff(k) * shift, 0), 0));
    }
    TruncatedSeries bridge = one(xo, n) - (-rest).exp();
    return {sx, l, pos, pos.exp(), bridge, sp0};
}

TruncatedSeries slit_walks(const StepSet& s, const SlitPlane& sp) {
    std::size_t n = sp.sx.order();
    TruncatedSeries inv = one(x_order(), n) - sp.bridge;
    return free_walks(s, n) * lift(inv, walk_order());
}

Rational conj1_value(long i, long n) {
    if (i < 1 || n < i) throw DomainError("closed form needs 1 <= i <= n");
    return make_rational(i, 2 * n) * Rational(binomial(2 * i, i) * binomial(n + i, 2 * i) * binomial(4 * n, 2 * n)) /
           Rational(binomial(2 * n + 2 * i, 2 * i));
}

BoundedDyck dyck_bounded(long m, std::size_t n) {
    if (m < 0) throw DomainError("height bound must be nonnegative");
    const VariableOrder& so = scalar_order();
    TruncatedSeries mt(so, n);
    mt.set(1, ElliottRational::constant(so, -1));
    TruncatedSeries y = positive_root({mt, one(so, n), mt});
    TruncatedSeries b = y, top(so, n);
    if (m > 0) {
        TruncatedSeries den = (one(so, n) - y.pow(static_cast<unsigned>(2 * m + 2))).inverse();
        b = y * (one(so, n) - y.pow(static_cast<unsigned>(2 * m))) * den;
        top = (y.pow(static_cast<unsigned>(m)) - y.pow(static_cast<unsigned>(m + 2))) * den;
    }
    const VariableOrder& yo = y_order();
    TruncatedSeries num = one(yo, n) - lift(b, yo) * var_power(yo, 0, -1) - lift(top, yo) * var_power(yo, 0, static_cast<int>(m));
    TruncatedSeries kernel(yo, n);
    ElliottRational step = var_power(yo, 0, 1) + var_power(yo, 0, -1);
    ElliottRational acc = ElliottRational::constant(yo, 1);
    for (std::size_t k = 0; k <= n; ++k) {
        kernel.set(k, acc);
        acc = (acc * step).cancel_common();
    }
    return {y, b, top, num * kernel};
}

QuarterPlane quarter_plane_symmetric(const StepSet& s, std::size_t n) {
    if (!s.gamma.is_polynomial()) throw DomainError("quarter plane needs a finite step set");
    if (!invariant_under_inversion(s.gamma, 1)) throw DomainError("step set is not symmetric under y -> 1/y");
    if (!invariant_under_inversion(s.gamma, 0)) throw DomainError("step set is not symmetric under x -> 1/x");
    TruncatedSeries xr = kernel_root(s.gamma, 0, n);
    TruncatedSeries yr = kernel_root(s.gamma, 1, n);
    TruncatedSeries v = reflect_positive(xr);
    TruncatedSeries h = reflect_positive(yr);

    // H(X): H is a polynomial in x at each order of t
    std::map<int, std::vector<Rational>> cols;
    for (std::size_t k = 0; k <= n; ++k) {
        const ElliottRational& c = h.coeff(k);
        if (!c.is_polynomial()) throw DomainError("H(x) has a non-polynomial coefficient");
        for (const auto& [e, q] : c.numerator().terms()) {
            if (e[0] < 0) throw DomainError("H(x) has a negative power of x");
            auto& col = cols[e[0]];
            col.resize(n + 1, Rational(0));
            col[k] += q;
        }
    }
    const VariableOrder& yo = y_order();
    std::vector<TruncatedSeries> poly;
    for (const auto& [j, col] : cols) {
        while (poly.size() <= static_cast<std::size_t>(j)) poly.emplace_back(yo, n);
        poly[static_cast<std::size_t>(j)] = TruncatedSeries::from_coefficients(yo, col, n);
    }
    TruncatedSeries hx = evaluate_polynomial(poly, xr);
    TruncatedSeries orig = xr * var_power(yo, 0, 1) - hx - v;
    TruncatedSeries o(scalar_order(), n);
    for (std::size_t k = 0; k <= n; ++k) {
        if (orig.coeff(k).depends_on(0)) throw DomainError("O(t) depends on y at order " + std::to_string(k));
        o.set(k, drop_variable(orig.coeff(k), 0));
    }
    const VariableOrder& w = walk_order();
    TruncatedSeries start(w, n);
    start.set(0, ElliottRational::monomial(w, Monomial(Rational(1), ExponentVector{1, 1})));
    TruncatedSeries num = start - lift(h, w) - lift(v, w) - lift(o, w);
    return {xr, v, h, o, num * free_walks(s, n)};
}

CatalanPaths catalan_paths(std::size_t n) {
    const VariableOrder& so = scalar_order();
    TruncatedSeries my(so, n + 1, "y");
    my.set(1, ElliottRational::constant(so, -1));
    TruncatedSeries b = positive_root({my, one(so, n + 1), one(so, n + 1) * Rational(-1)});
    TruncatedSeries st = b.stretch(2);
    TruncatedSeries q(so, n, "t");
    for (std::size_t k = 0; k <= n; ++k) q.set(k, st.coeff(k + 1));
    TruncatedSeries lin(so, n, "t");
    lin.set(0, ElliottRational::constant(so, 1));
    lin.set(1, ElliottRational::constant(so, -2));
    TruncatedSeries ones = TruncatedSeries::constant(ElliottRational::constant(so, 1), n, "t");
    return {b, (ones - q) * lin.inverse()};
}

}  // namespace omegact
