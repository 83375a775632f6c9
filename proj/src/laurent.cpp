#include "omegact/laurent.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace omegact {

ExponentVector zero_exponents(std::size_t n) { return ExponentVector(n, 0); }

ExponentVector unit_exponents(std::size_t n, std::size_t i, int power) {
    ExponentVector e(n, 0);
    e.at(i) = power;
    return e;
}

ExponentVector add(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent vector length mismatch");
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExponentVector sub(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent vector length mismatch");
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

ExponentVector scale(const ExponentVector& a, int k) {
    ExponentVector r(a);
    for (auto& x : r) x *= k;
    return r;
}

ExponentVector negate(const ExponentVector& a) { return scale(a, -1); }

bool is_zero(const ExponentVector& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

long total_degree(const ExponentVector& a) {
    long s = 0;
    for (int x : a) s += x;
    return s;
}

bool graded_revlex_less(const ExponentVector& a, const ExponentVector& b) {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

Monomial Monomial::operator*(const Monomial& o) const { return Monomial(coeff * o.coeff, add(exps, o.exps)); }

Monomial Monomial::inverse() const {
    if (omegact::is_zero(coeff)) throw DomainError("inverse of the zero monomial");
    return Monomial(1 / coeff, negate(exps));
}

Monomial Monomial::pow(long k) const { return Monomial(omegact::pow(coeff, k), scale(exps, static_cast<int>(k))); }

static std::string power_string(const ExponentVector& e, const VarNames& names) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += i < names.size() ? names[i] : ("v" + std::to_string(i));
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string monomial_to_string(const Monomial& m, const VarNames& names) {
    std::string pw = power_string(m.exps, names);
    if (pw.empty()) return to_string(m.coeff);
    if (m.coeff == 1) return pw;
    if (m.coeff == -1) return "-" + pw;
    return to_string(m.coeff) + "*" + pw;
}

LaurentPolynomial::LaurentPolynomial(const Monomial& m) : nvars_(m.exps.size()) {
    if (!m.is_zero()) terms_.emplace(m.exps, m.coeff);
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t nvars, const Rational& c) {
    return LaurentPolynomial(Monomial(c, zero_exponents(nvars)));
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t nvars, std::size_t i, int power) {
    return LaurentPolynomial(Monomial(Rational(1), unit_exponents(nvars, i, power)));
}

bool LaurentPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && omegact::is_zero(terms_.begin()->first));
}

Monomial LaurentPolynomial::as_monomial() const {
    if (terms_.size() != 1) throw std::logic_error("polynomial is not a single monomial");
    return Monomial(terms_.begin()->second, terms_.begin()->first);
}

Rational LaurentPolynomial::constant_term() const { return coefficient(zero_exponents(nvars_)); }

Rational LaurentPolynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& e, const Rational& c) {
    if (omegact::is_zero(c)) return;
    if (e.size() != nvars_) throw std::invalid_argument("term has wrong number of variables");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (omegact::is_zero(it->second)) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r(*this);
    r += o;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r(*this);
    r -= o;
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    if (is_zero()) nvars_ = o.nvars_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    if (is_zero()) nvars_ = o.nvars_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(*this);
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r(std::max(nvars_, o.nvars_));
    if (is_zero() || o.is_zero()) return r;
    if (nvars_ != o.nvars_) throw std::invalid_argument("product of polynomials in different rings");
    ExponentVector e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const Monomial& m) const {
    LaurentPolynomial r(nvars_);
    if (m.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(add(e, m.exps), c * m.coeff);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const Rational& c) const {
    LaurentPolynomial r(nvars_);
    if (omegact::is_zero(c)) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
    return r;
}

LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& p) { return p * c; }

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
    LaurentPolynomial result = constant(nvars_, 1);
    LaurentPolynomial base(*this);
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

bool LaurentPolynomial::divides_into(const LaurentPolynomial& d, LaurentPolynomial* quotient) const {
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    LaurentPolynomial q(nvars_);
    if (is_zero()) {
        if (quotient) *quotient = q;
        return true;
    }
    // Lex order on exponent vectors is a group order, so quotient terms are
    // squeezed between trail(N)/trail(D) and lead(N)/lead(D).
    const auto& dlead = *d.terms_.rbegin();
    const auto& dtrail = *d.terms_.begin();
    ExponentVector floor_e = sub(terms_.begin()->first, dtrail.first);
    LaurentPolynomial r(*this);
    while (!r.is_zero()) {
        const auto& rlead = *r.terms_.rbegin();
        ExponentVector qe = sub(rlead.first, dlead.first);
        if (qe < floor_e) return false;
        Monomial qm(rlead.second / dlead.second, qe);
        q.add_term(qm);
        r -= d * qm;
    }
    if (quotient) *quotient = q;
    return true;
}

LaurentPolynomial LaurentPolynomial::exact_div(const LaurentPolynomial& d) const {
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    LaurentPolynomial q(nvars_);
    if (divides_into(d, &q)) return q;
    // report the first term that cannot be cleared
    LaurentPolynomial r(*this);
    const auto& dlead = *d.terms_.rbegin();
    ExponentVector floor_e = sub(terms_.begin()->first, d.terms_.begin()->first);
    while (!r.is_zero()) {
        const auto& rlead = *r.terms_.rbegin();
        ExponentVector qe = sub(rlead.first, dlead.first);
        if (qe < floor_e) break;
        r -= d * Monomial(rlead.second / dlead.second, qe);
    }
    VarNames none;
    std::string term = r.is_zero() ? "?" : monomial_to_string(Monomial(r.terms_.rbegin()->second, r.terms_.rbegin()->first), none);
    throw DomainError("inexact division: remainder term " + term);
}

LaurentPolynomial LaurentPolynomial::substitute_monomials(const std::vector<ExponentVector>& images,
                                                          std::size_t new_nvars) const {
    if (images.size() != nvars_) throw std::invalid_argument("substitution needs one image per variable");
    LaurentPolynomial r(new_nvars);
    for (const auto& [e, c] : terms_) {
        ExponentVector ne(new_nvars, 0);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (images[i].size() != new_nvars) throw std::invalid_argument("image has wrong length");
            for (std::size_t k = 0; k < new_nvars; ++k) ne[k] += e[i] * images[i][k];
        }
        r.add_term(ne, c);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::evaluate(std::size_t var, const Rational& value) const {
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        ExponentVector ne(e);
        int k = ne[var];
        ne[var] = 0;
        if (k == 0) {
            r.add_term(ne, c);
        } else if (omegact::is_zero(value)) {
            if (k < 0) throw DomainError("evaluating a negative power at zero");
        } else {
            r.add_term(ne, c * omegact::pow(value, k));
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::derivative(std::size_t var) const {
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExponentVector ne(e);
        ne[var] -= 1;
        r.add_term(ne, c * e[var]);
    }
    return r;
}

int LaurentPolynomial::min_degree(std::size_t var) const {
    int m = INT_MAX;
    for (const auto& kv : terms_) m = std::min(m, kv.first[var]);
    return terms_.empty() ? 0 : m;
}

int LaurentPolynomial::max_degree(std::size_t var) const {
    int m = INT_MIN;
    for (const auto& kv : terms_) m = std::max(m, kv.first[var]);
    return terms_.empty() ? 0 : m;
}

bool LaurentPolynomial::depends_on(std::size_t var) const {
    for (const auto& kv : terms_)
        if (kv.first[var] != 0) return true;
    return false;
}

std::vector<std::pair<ExponentVector, Rational>> LaurentPolynomial::canonical_terms() const {
    std::vector<std::pair<ExponentVector, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return graded_revlex_less(a.first, b.first); });
    return v;
}

std::string LaurentPolynomial::to_string(const VarNames& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : canonical_terms()) {
        std::string t = monomial_to_string(Monomial(c, e), names);
        if (!out.empty() && t[0] != '-') out += "+";
        out += t;
    }
    return out;
}

}  // namespace omegact
