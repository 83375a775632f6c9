#include "omegact/series.hpp"

#include <map>

#include "omegact/omega.hpp"

namespace omegact {

TruncatedSeries::TruncatedSeries(VariableOrder coeff_order, std::size_t order, std::string var)
    : corder_(std::move(coeff_order)), var_(std::move(var)) {
    coeffs_.assign(order + 1, ElliottRational(corder_));
}

TruncatedSeries TruncatedSeries::constant(const ElliottRational& c, std::size_t order, std::string var) {
    TruncatedSeries s(c.order(), order, std::move(var));
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::variable(const VariableOrder& coeff_order, std::size_t order, std::string var) {
    TruncatedSeries s(coeff_order, order, std::move(var));
    if (order >= 1) s.coeffs_[1] = ElliottRational::constant(coeff_order, 1);
    return s;
}

TruncatedSeries TruncatedSeries::from_coefficients(const VariableOrder& coeff_order, const std::vector<Rational>& c,
                                                   std::size_t order, std::string var) {
    TruncatedSeries s(coeff_order, order, std::move(var));
    for (std::size_t k = 0; k < c.size() && k <= order; ++k) s.coeffs_[k] = ElliottRational::constant(coeff_order, c[k]);
    return s;
}

const ElliottRational& TruncatedSeries::coeff(std::size_t k) const {
    static thread_local ElliottRational zero;
    if (k < coeffs_.size()) return coeffs_[k];
    zero = ElliottRational(corder_);
    return zero;
}

void TruncatedSeries::set(std::size_t k, ElliottRational c) {
    if (k >= coeffs_.size()) return;
    coeffs_[k] = std::move(c);
}

void TruncatedSeries::require_compatible(const TruncatedSeries& o) const {
    if (!(corder_ == o.corder_)) throw DomainError("series over different coefficient orders");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    require_compatible(o);
    TruncatedSeries r(corder_, std::min(order(), o.order()), var_);
    for (std::size_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = (coeffs_[k] + o.coeffs_[k]).cancel_common();
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const { return *this + (-o); }

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    require_compatible(o);
    std::size_t n = std::min(order(), o.order());
    TruncatedSeries r(corder_, n, var_);
    for (std::size_t k = 0; k <= n; ++k) {
        ElliottRational acc(corder_);
        for (std::size_t i = 0; i <= k; ++i) {
            if (coeffs_[i].is_zero() || o.coeffs_[k - i].is_zero()) continue;
            acc = acc + coeffs_[i] * o.coeffs_[k - i];
        }
        r.coeffs_[k] = acc.cancel_common();
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const ElliottRational& c) const {
    TruncatedSeries r(*this);
    for (auto& x : r.coeffs_) x = (x * c).cancel_common();
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
    TruncatedSeries r(*this);
    for (auto& x : r.coeffs_) x = x * c;
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeffs_[0].is_zero()) throw DomainError("series inverse needs a nonzero constant term");
    TruncatedSeries r(corder_, order(), var_);
    ElliottRational g0 = coeffs_[0].inverse().cancel_common();
    r.coeffs_[0] = g0;
    for (std::size_t k = 1; k <= order(); ++k) {
        ElliottRational acc(corder_);
        for (std::size_t i = 1; i <= k; ++i) {
            if (coeffs_[i].is_zero() || r.coeffs_[k - i].is_zero()) continue;
            acc = acc + coeffs_[i] * r.coeffs_[k - i];
        }
        r.coeffs_[k] = (-(acc * g0)).cancel_common();
    }
    return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned k) const {
    TruncatedSeries r = constant(ElliottRational::constant(corder_, 1), order(), var_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
    TruncatedSeries r(corder_, order(), var_);
    for (std::size_t k = 1; k <= order(); ++k) r.coeffs_[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return r;
}

TruncatedSeries TruncatedSeries::log() const {
    if (!coeffs_[0].equals(ElliottRational::constant(corder_, 1)))
        throw DomainError("log needs constant coefficient 1");
    TruncatedSeries q = derivative() * inverse();
    TruncatedSeries r(corder_, order(), var_);
    for (std::size_t k = 1; k <= order(); ++k) r.coeffs_[k] = q.coeffs_[k - 1] * Rational(1, static_cast<long>(k));
    return r;
}

TruncatedSeries TruncatedSeries::exp() const {
    if (!coeffs_[0].is_zero()) throw DomainError("exp needs constant coefficient 0");
    TruncatedSeries g(corder_, order(), var_);
    g.coeffs_[0] = ElliottRational::constant(corder_, 1);
    for (std::size_t k = 1; k <= order(); ++k) {
        ElliottRational acc(corder_);
        for (std::size_t i = 1; i <= k; ++i) {
            if (coeffs_[i].is_zero() || g.coeffs_[k - i].is_zero()) continue;
            acc = acc + coeffs_[i] * g.coeffs_[k - i] * Rational(static_cast<long>(i));
        }
        g.coeffs_[k] = (acc * Rational(1, static_cast<long>(k))).cancel_common();
    }
    return g;
}

TruncatedSeries TruncatedSeries::shift(std::size_t k) const {
    TruncatedSeries r(corder_, order(), var_);
    for (std::size_t i = 0; i + k <= order(); ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
}

TruncatedSeries TruncatedSeries::stretch(std::size_t k) const {
    if (k == 0) throw DomainError("stretch factor must be positive");
    TruncatedSeries r(corder_, order(), var_);
    for (std::size_t i = 0; i * k <= order(); ++i) r.coeffs_[i * k] = coeffs_[i];
    return r;
}

TruncatedSeries TruncatedSeries::map(const std::function<ElliottRational(const ElliottRational&)>& f) const {
    std::vector<ElliottRational> out;
    for (const auto& c : coeffs_) out.push_back(f(c));
    TruncatedSeries r(out.empty() ? corder_ : out.front().order(), order(), var_);
    r.coeffs_ = std::move(out);
    return r;
}

TruncatedSeries TruncatedSeries::truncate(std::size_t n) const {
    TruncatedSeries r(corder_, std::min(n, order()), var_);
    for (std::size_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = coeffs_[k];
    return r;
}

bool TruncatedSeries::equals(const TruncatedSeries& o) const {
    if (!(corder_ == o.corder_)) return false;
    std::size_t n = std::min(order(), o.order());
    for (std::size_t k = 0; k <= n; ++k)
        if (!coeffs_[k].equals(o.coeffs_[k])) return false;
    return true;
}

std::string TruncatedSeries::to_string() const {
    std::string out;
    for (std::size_t k = 0; k <= order(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        std::string c = coeffs_[k].to_string();
        std::string pw = k == 0 ? "" : (k == 1 ? var_ : var_ + "^" + std::to_string(k));
        std::string term;
        if (pw.empty()) term = c;
        else if (c == "1") term = pw;
        else if (c == "-1") term = "-" + pw;
        else if (c.find_first_of("+-/", 1) != std::string::npos) term = "(" + c + ")*" + pw;
        else term = c + "*" + pw;
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    out += (out.empty() ? "O(" : "+O(") + var_ + "^" + std::to_string(order() + 1) + ")";
    return out;
}

VariableOrder without_variable(const VariableOrder& order, std::size_t var) {
    VarNames names;
    for (std::size_t i = 0; i < order.size(); ++i)
        if (i != var) names.push_back(order.names()[i]);
    std::optional<IntMatrix> rho;
    if (order.rho()) {
        IntMatrix m;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (i == var) continue;
            std::vector<long> row;
            for (std::size_t j = 0; j < order.size(); ++j)
                if (j != var) row.push_back((*order.rho())[i][j]);
            m.push_back(row);
        }
        rho = m;
    }
    return VariableOrder(names, rho);
}

ElliottRational drop_variable(const ElliottRational& f, std::size_t var) {
    if (f.depends_on(var)) throw DomainError("cannot drop " + f.order().names()[var] + ": it still occurs");
    VariableOrder target = without_variable(f.order(), var);
    std::vector<ExponentVector> images;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        if (i == var) images.push_back(zero_exponents(target.size()));
        else images.push_back(unit_exponents(target.size(), i < var ? i : i - 1));
    }
    return f.substitute_monomials(images, target);
}

ElliottRational embed(const ElliottRational& f, const VariableOrder& target) {
    std::vector<ExponentVector> images;
    for (const auto& name : f.order().names()) images.push_back(unit_exponents(target.size(), target.index_of(name)));
    return f.substitute_monomials(images, target);
}

TruncatedSeries series_from_rational(const ElliottRational& f, const std::string& var, std::size_t order) {
    const auto& full = f.order();
    std::size_t ti = full.index_of(var);
    std::size_t n = full.size();
    VariableOrder corder = without_variable(full, ti);
    std::vector<BinomialFactor> geo, keep;
    for (const auto& b : f.denominator()) {
        int k = b.exps[ti];
        if (k < 0) throw DomainError("factor " + b.to_string(full.names()) + " is not a power series in " + var);
        (k == 0 ? keep : geo).push_back(b);
    }
    std::map<int, LaurentPolynomial> numer;
    int dmin = 0;
    for (const auto& [e, c] : f.numerator().terms()) {
        ExponentVector base = e;
        base[ti] = 0;
        auto it = numer.find(e[ti]);
        if (it == numer.end()) it = numer.emplace(e[ti], LaurentPolynomial(n)).first;
        it->second.add_term(base, c);
        dmin = std::min(dmin, e[ti]);
    }
    long wmax = static_cast<long>(order) - dmin;
    std::map<long, LaurentPolynomial> g;
    g[0] = LaurentPolynomial::constant(n, 1);
    for (const auto& b : geo) {
        long j = b.exps[ti];
        ExponentVector e = b.exps;
        e[ti] = 0;
        Monomial x(b.coeff, e);
        std::map<long, LaurentPolynomial> next;
        for (const auto& [w1, c1] : g)
            for (long r = 0; w1 + r * j <= wmax; ++r) {
                LaurentPolynomial t = c1 * x.pow(r) * Rational(binomial(b.mult - 1 + r, r));
                auto it = next.find(w1 + r * j);
                if (it == next.end()) next.emplace(w1 + r * j, t);
                else it->second += t;
            }
        g = std::move(next);
    }
    TruncatedSeries out(corder, order, var);
    for (long k = dmin; k <= static_cast<long>(order); ++k) {
        LaurentPolynomial acc(n);
        for (const auto& [d, nd] : numer) {
            auto it = g.find(k - d);
            if (it != g.end()) acc += nd * it->second;
        }
        ElliottRational c = ElliottRational(acc, keep, full).cancel_common();
        if (k < 0) {
            if (!c.is_zero()) throw DomainError("expansion has negative powers of " + var);
            continue;
        }
        out.set(static_cast<std::size_t>(k), drop_variable(c, ti));
    }
    return out;
}

TruncatedSeries evaluate_polynomial(const std::vector<TruncatedSeries>& coeffs, const TruncatedSeries& y) {
    if (coeffs.empty()) return TruncatedSeries(y.coeff_order(), y.order(), y.var());
    TruncatedSeries acc = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * y + coeffs[i];
    return acc;
}

TruncatedSeries positive_root(const std::vector<TruncatedSeries>& g) {
    if (g.size() < 2) throw DomainError("positive root needs a linear term");
    const ElliottRational& a = g[1].coeff(0);
    if (a.is_zero()) throw DomainError("linear coefficient of the positive-root equation is not invertible");
    if (!g[0].coeff(0).is_zero()) throw DomainError("equation must vanish at the origin");
    ElliottRational ainv = a.inverse().cancel_common();
    std::size_t n = g[0].order();
    TruncatedSeries y(g[0].coeff_order(), n, g[0].var());
    for (std::size_t k = 1; k <= n; ++k) {
        // terms up to t^k only need Y below degree k
        std::vector<TruncatedSeries> gk;
        for (const auto& s : g) gk.push_back(s.truncate(k));
        TruncatedSeries val = evaluate_polynomial(gk, y.truncate(k));
        y.set(k, (-(val.coeff(k) * ainv)).cancel_common());
    }
    return y;
}

TruncatedSeries lagrange_ct(const std::vector<TruncatedSeries>& f, const std::vector<TruncatedSeries>& g) {
    TruncatedSeries y = positive_root(g);
    std::vector<TruncatedSeries> dg;
    for (std::size_t i = 1; i < g.size(); ++i) dg.push_back(g[i] * Rational(static_cast<long>(i)));
    if (f.empty()) return TruncatedSeries(y.coeff_order(), y.order(), y.var());
    return evaluate_polynomial(f, y) * evaluate_polynomial(dg, y).inverse();
}

ElliottRational divided_difference(const ElliottRational& q, std::size_t x, std::size_t u) {
    if (x == u) return q.derivative(x);
    std::size_t n = q.nvars();
    std::vector<ExponentVector> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(unit_exponents(n, i == x ? u : i));
    ElliottRational qu = q.substitute_monomials(images, q.order());
    Monomial mx(Rational(1), unit_exponents(n, x)), mu(Rational(1), unit_exponents(n, u));
    return (q - qu).divide_binomial(mx, mu).cancel_common();
}

ThirdDecomposition third_decomposition(const TruncatedSeries& h, const std::string& x) {
    std::size_t xi = h.coeff_order().index_of(x);
    TruncatedSeries l = h.log();
    const auto& co = h.coeff_order();
    TruncatedSeries neg(co, h.order(), h.var()), zer = neg, pos = neg;
    for (std::size_t k = 1; k <= h.order(); ++k) {
        LambdaSplit s = lambda_split(l.coeff(k), xi);
        neg.set(k, s.negative);
        zer.set(k, s.constant);
        pos.set(k, s.positive);
    }
    return {neg.exp(), zer.exp(), pos.exp()};
}

TruncatedSeries ct_coefficients(const TruncatedSeries& s, const std::string& x) {
    std::size_t xi = s.coeff_order().index_of(x);
    return s.map([&](const ElliottRational& c) { return drop_variable(ct_lambda(c, xi), xi); });
}

std::map<ExponentVector, Rational> graded_expansion(const ElliottRational& f, std::size_t d) {
    const auto& o = f.order();
    std::size_t n = o.size();
    VarNames names = o.names();
    names.push_back("__t");
    std::optional<IntMatrix> rho;
    if (o.rho()) {
        IntMatrix m = *o.rho();
        for (auto& row : m) row.push_back(0);
        m.emplace_back(n + 1, 0);
        m.back()[n] = 1;
        rho = m;
    }
    VariableOrder big(names, rho);
    std::vector<ExponentVector> images;
    for (std::size_t i = 0; i < n; ++i) {
        ExponentVector e = unit_exponents(n + 1, i);
        e[n] = 1;
        images.push_back(e);
    }
    TruncatedSeries s = series_from_rational(f.substitute_monomials(images, big), "__t", d);
    std::map<ExponentVector, Rational> out;
    for (std::size_t k = 0; k <= d; ++k) {
        ElliottRational c = s.coeff(k).cancel_common();
        if (!c.is_polynomial()) throw DomainError("graded coefficient of degree " + std::to_string(k) + " is not a polynomial");
        for (const auto& [e, q] : c.numerator().terms()) out[e] += q;
    }
    return out;
}

}  // namespace omegact
