#include "omegact/elliott.hpp"

#include <algorithm>
#include <map>

namespace omegact {

LaurentPolynomial BinomialFactor::base() const {
    LaurentPolynomial p = LaurentPolynomial::constant(exps.size(), 1);
    p.add_term(exps, -coeff);
    return p;
}

std::string BinomialFactor::to_string(const VarNames& names) const {
    if (sgn(coeff) > 0) return "1-" + monomial_to_string(Monomial(coeff, exps), names);
    return "1+" + monomial_to_string(Monomial(-coeff, exps), names);
}

Binomialized make_binomial(const Monomial& a, const Monomial& b, const VariableOrder& order) {
    if (a.is_zero() && b.is_zero()) throw DomainError("difference of two zero monomials");
    if (a.is_zero()) return {-b, std::nullopt};
    if (b.is_zero()) return {a, std::nullopt};
    if (a.exps == b.exps) {
        Rational c = a.coeff - b.coeff;
        if (is_zero(c)) throw DomainError("binomial factor is identically zero");
        return {Monomial(c, a.exps), std::nullopt};
    }
    if (order.compare(a.exps, b.exps) < 0) return {a, BinomialFactor{b.coeff / a.coeff, sub(b.exps, a.exps), 1}};
    return {-b, BinomialFactor{a.coeff / b.coeff, sub(a.exps, b.exps), 1}};
}

std::optional<LaurentPolynomial> divide_by_binomial(const LaurentPolynomial& p, const Rational& c,
                                                    const ExponentVector& e) {
    std::size_t piv = 0;
    while (piv < e.size() && e[piv] == 0) ++piv;
    if (piv == e.size() || is_zero(c)) throw DomainError("divisor is not a binomial");
    // Terms differing by multiples of e form chains; on each chain the divisor
    // acts as 1 - c·s with s = x^e.
    std::map<ExponentVector, std::map<long, Rational>> chains;
    for (const auto& [v, a] : p.terms()) {
        long num = v[piv], den = e[piv];
        long k = num / den;
        if ((num % den != 0) && ((num < 0) != (den < 0))) --k;
        ExponentVector key = sub(v, scale(e, static_cast<int>(k)));
        chains[key][k] = a;
    }
    LaurentPolynomial q(p.nvars());
    for (const auto& [key, terms] : chains) {
        long lo = terms.begin()->first, hi = terms.rbegin()->first;
        if (lo == hi) return std::nullopt;
        std::vector<Rational> n(static_cast<std::size_t>(hi - lo + 1), Rational(0));
        for (const auto& [k, a] : terms) n[static_cast<std::size_t>(k - lo)] = a;
        Rational prev = 0;
        for (std::size_t i = 0; i + 1 < n.size(); ++i) {
            Rational qi = n[i] + c * prev;
            if (!is_zero(qi)) q.add_term(add(key, scale(e, static_cast<int>(lo + static_cast<long>(i)))), qi);
            prev = qi;
        }
        if (!is_zero(n.back() + c * prev)) return std::nullopt;
    }
    return q;
}

ElliottRational::ElliottRational(VariableOrder order) : num_(order.size()), order_(std::move(order)) {}

ElliottRational::ElliottRational(LaurentPolynomial num, std::vector<BinomialFactor> den, VariableOrder order)
    : num_(std::move(num)), den_(std::move(den)), order_(std::move(order)) {
    if (num_.nvars() != order_.size()) throw DomainError("numerator arity does not match the variable order");
    normalize();
}

ElliottRational ElliottRational::constant(const VariableOrder& order, const Rational& c) {
    return ElliottRational(LaurentPolynomial::constant(order.size(), c), {}, order);
}

ElliottRational ElliottRational::monomial(const VariableOrder& order, const Monomial& m) {
    return ElliottRational(LaurentPolynomial(m), {}, order);
}

ElliottRational ElliottRational::inverse_binomial(const VariableOrder& order, const Monomial& a, const Monomial& b,
                                                  unsigned k) {
    return constant(order, 1).divide_binomial(a, b, k);
}

static bool factor_less(const BinomialFactor& a, const BinomialFactor& b) {
    long da = total_degree(a.exps), db = total_degree(b.exps);
    if (da != db) return da > db;
    if (a.exps != b.exps) return graded_revlex_less(b.exps, a.exps);
    return a.coeff < b.coeff;
}

void ElliottRational::normalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::vector<BinomialFactor> out;
    for (auto f : den_) {
        if (f.mult == 0) continue;
        if (f.exps.size() != order_.size()) throw DomainError("factor arity does not match the variable order");
        if (omegact::is_zero(f.coeff)) continue;
        int s = order_.sign(f.exps);
        if (s == 0) {
            Rational v = 1 - f.coeff;
            if (omegact::is_zero(v)) throw DomainError("denominator factor vanishes identically");
            num_ = num_ * omegact::pow(v, -static_cast<long>(f.mult));
            continue;
        }
        if (s < 0) {
            // 1 - c x^e = -c x^e (1 - c^{-1} x^{-e})
            Monomial pre(-f.coeff, f.exps);
            num_ = num_ * pre.pow(-static_cast<long>(f.mult));
            f.coeff = 1 / f.coeff;
            f.exps = negate(f.exps);
        }
        auto it = std::find_if(out.begin(), out.end(), [&](const BinomialFactor& g) { return g.same_base(f); });
        if (it != out.end()) it->mult += f.mult;
        else out.push_back(f);
    }
    std::sort(out.begin(), out.end(), factor_less);
    den_ = std::move(out);
}

bool ElliottRational::depends_on(std::size_t var) const {
    if (num_.depends_on(var)) return true;
    for (const auto& f : den_)
        if (f.exps[var] != 0) return true;
    return false;
}

// Least common multiple of the two factor multisets and the cofactors that
// bring each side up to it.
static std::vector<BinomialFactor> lcm_factors(const std::vector<BinomialFactor>& a,
                                               const std::vector<BinomialFactor>& b, LaurentPolynomial& extra_a,
                                               LaurentPolynomial& extra_b) {
    std::vector<BinomialFactor> out = a;
    for (const auto& f : b) {
        auto it = std::find_if(out.begin(), out.end(), [&](const BinomialFactor& g) { return g.same_base(f); });
        if (it == out.end()) {
            out.push_back(f);
            extra_a = extra_a * f.expand();
        } else if (it->mult < f.mult) {
            extra_a = extra_a * f.base().pow(f.mult - it->mult);
            it->mult = f.mult;
        }
    }
    for (const auto& f : out) {
        auto it = std::find_if(b.begin(), b.end(), [&](const BinomialFactor& g) { return g.same_base(f); });
        unsigned have = it == b.end() ? 0 : it->mult;
        if (have < f.mult) extra_b = extra_b * f.base().pow(f.mult - have);
    }
    return out;
}

ElliottRational ElliottRational::operator+(const ElliottRational& o) const {
    if (!(order_ == o.order_)) throw DomainError("adding rational functions over different variable orders");
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    LaurentPolynomial ea = LaurentPolynomial::constant(nvars(), 1), eb = ea;
    auto den = lcm_factors(den_, o.den_, ea, eb);
    return ElliottRational(num_ * ea + o.num_ * eb, std::move(den), order_);
}

ElliottRational ElliottRational::operator-(const ElliottRational& o) const { return *this + (-o); }

ElliottRational ElliottRational::operator-() const {
    ElliottRational r(*this);
    r.num_ = -r.num_;
    return r;
}

ElliottRational ElliottRational::operator*(const ElliottRational& o) const {
    if (!(order_ == o.order_)) throw DomainError("multiplying rational functions over different variable orders");
    std::vector<BinomialFactor> den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return ElliottRational(num_ * o.num_, std::move(den), order_);
}

ElliottRational ElliottRational::operator*(const LaurentPolynomial& p) const {
    return ElliottRational(num_ * p, den_, order_);
}

ElliottRational ElliottRational::operator*(const Monomial& m) const {
    ElliottRational r(*this);
    r.num_ = r.num_ * m;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

ElliottRational ElliottRational::operator*(const Rational& c) const {
    ElliottRational r(*this);
    r.num_ = r.num_ * c;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

ElliottRational ElliottRational::divide_binomial(const Monomial& a, const Monomial& b, unsigned k) const {
    auto bz = make_binomial(a, b, order_);
    std::vector<BinomialFactor> den = den_;
    if (bz.factor) {
        den.push_back(*bz.factor);
        den.back().mult = k;
    }
    return ElliottRational(num_ * bz.prefactor.pow(-static_cast<long>(k)), std::move(den), order_);
}

ElliottRational ElliottRational::inverse() const {
    if (num_.is_zero()) throw DomainError("inverse of zero");
    ElliottRational r(denominator_product(), {}, order_);
    const auto& t = num_.terms();
    if (t.size() == 1) return r * Monomial(t.begin()->second, t.begin()->first).inverse();
    if (t.size() == 2) {
        auto it = t.begin();
        Monomial a(it->second, it->first);
        ++it;
        Monomial b(-it->second, it->first);
        return r.divide_binomial(a, b);
    }
    throw DomainError("inverse of a numerator with more than two terms is not Elliott-rational");
}

ElliottRational ElliottRational::pow(unsigned k) const {
    ElliottRational r = constant(order_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

ElliottRational ElliottRational::cancel_common() const {
    ElliottRational r(*this);
    if (r.num_.is_zero()) return r;
    std::vector<BinomialFactor> kept;
    for (auto f : r.den_) {
        while (f.mult > 0) {
            auto q = divide_by_binomial(r.num_, f.coeff, f.exps);
            if (!q) break;
            r.num_ = std::move(*q);
            --f.mult;
        }
        if (f.mult > 0) kept.push_back(f);
    }
    r.den_ = std::move(kept);
    return r;
}

bool ElliottRational::equals(const ElliottRational& o) const {
    if (!(order_ == o.order_)) return false;
    LaurentPolynomial ea = LaurentPolynomial::constant(nvars(), 1), eb = ea;
    lcm_factors(den_, o.den_, ea, eb);
    return num_ * ea == o.num_ * eb;
}

ElliottRational ElliottRational::evaluate(std::size_t var, const Rational& value) const {
    std::vector<BinomialFactor> den;
    for (auto f : den_) {
        int k = f.exps[var];
        if (k != 0) {
            if (omegact::is_zero(value)) {
                if (k < 0) throw DomainError("evaluating a negative power at zero");
                continue;
            }
            f.coeff *= omegact::pow(value, k);
            f.exps[var] = 0;
        }
        den.push_back(f);
    }
    return ElliottRational(num_.evaluate(var, value), std::move(den), order_);
}

ElliottRational ElliottRational::derivative(std::size_t var) const {
    if (den_.empty()) return ElliottRational(num_.derivative(var), {}, order_);
    // (N' P - N Σ m_i B_i' P/B_i) / ∏ B_i^{m_i+1}, P = ∏ B_i
    LaurentPolynomial p = LaurentPolynomial::constant(nvars(), 1);
    for (const auto& f : den_) p = p * f.base();
    LaurentPolynomial acc = num_.derivative(var) * p;
    for (std::size_t i = 0; i < den_.size(); ++i) {
        LaurentPolynomial rest = LaurentPolynomial::constant(nvars(), 1);
        for (std::size_t j = 0; j < den_.size(); ++j)
            if (j != i) rest = rest * den_[j].base();
        acc -= num_ * den_[i].base().derivative(var) * rest * Rational(den_[i].mult);
    }
    std::vector<BinomialFactor> den = den_;
    for (auto& f : den) ++f.mult;
    return ElliottRational(std::move(acc), std::move(den), order_).cancel_common();
}

ElliottRational ElliottRational::substitute_monomials(const std::vector<ExponentVector>& images,
                                                      const VariableOrder& target) const {
    std::vector<BinomialFactor> den;
    for (const auto& f : den_) {
        LaurentPolynomial m(Monomial(Rational(1), f.exps));
        auto img = m.substitute_monomials(images, target.size());
        den.push_back(BinomialFactor{f.coeff, img.terms().begin()->first, f.mult});
    }
    return ElliottRational(num_.substitute_monomials(images, target.size()), std::move(den), target);
}

ElliottRational ElliottRational::with_order(const VariableOrder& order) const {
    if (order.size() != nvars()) throw DomainError("new order has a different number of variables");
    return ElliottRational(num_, den_, order);
}

LaurentPolynomial ElliottRational::denominator_product() const {
    LaurentPolynomial p = LaurentPolynomial::constant(nvars(), 1);
    for (const auto& f : den_) p = p * f.expand();
    return p;
}

std::string ElliottRational::to_string() const {
    const VarNames& names = order_.names();
    std::string n = num_.to_string(names);
    if (den_.empty()) return n;
    if (num_.size() > 1) n = "(" + n + ")";
    std::string d;
    for (const auto& f : den_) {
        if (!d.empty()) d += "*";
        d += "(" + f.to_string(names) + ")";
        if (f.mult > 1) d += "^" + std::to_string(f.mult);
    }
    if (den_.size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace omegact
