#include "omegact/order.hpp"

#include <algorithm>
#include <set>

namespace omegact {

VariableOrder::VariableOrder(VarNames names, std::optional<IntMatrix> rho)
    : names_(std::move(names)), rho_(std::move(rho)) {
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw DomainError("variable names must be unique");
    if (rho_) {
        if (rho_->size() != names_.size()) throw DomainError("rho must be square over the declared variables");
        for (const auto& row : *rho_)
            if (row.size() != names_.size()) throw DomainError("rho must be square over the declared variables");
        // nonzero determinant check by elimination over ℚ
        std::size_t n = names_.size();
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational((*rho_)[i][j]);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            while (piv < n && sgn(m[piv][c]) == 0) ++piv;
            if (piv == n) throw DomainError("rho must have nonzero determinant");
            std::swap(m[piv], m[c]);
            for (std::size_t r = c + 1; r < n; ++r) {
                Rational f = m[r][c] / m[c][c];
                for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
            }
        }
    }
}

VariableOrder VariableOrder::reversed_in(const VariableOrder& base, const std::string& var) {
    std::size_t n = base.size();
    std::size_t k = base.index_of(var);
    IntMatrix rho(n, std::vector<long>(n, 0));
    if (base.rho_) rho = *base.rho_;
    else
        for (std::size_t i = 0; i < n; ++i) rho[i][i] = 1;
    for (std::size_t i = 0; i < n; ++i) rho[i][k] = -rho[i][k];
    return VariableOrder(base.names_, rho);
}

std::size_t VariableOrder::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw DomainError("unknown variable " + name);
    return static_cast<std::size_t>(it - names_.begin());
}

bool VariableOrder::has(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

int VariableOrder::sign(const ExponentVector& e) const {
    if (e.size() != names_.size()) throw DomainError("exponent vector length does not match the variable order");
    for (std::size_t i = e.size(); i-- > 0;) {
        long v = 0;
        if (rho_) {
            for (std::size_t j = 0; j < e.size(); ++j) v += (*rho_)[i][j] * e[j];
        } else {
            v = e[i];
        }
        if (v != 0) return v < 0 ? -1 : 1;
    }
    return 0;
}

int VariableOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
    if (a.size() != b.size()) throw DomainError("exponent vectors of different lengths");
    return sign(sub(a, b));
}

Monomial initial_term(const LaurentPolynomial& f, const VariableOrder& order) {
    if (f.is_zero()) throw DomainError("initial term of zero");
    const ExponentVector* best = nullptr;
    const Rational* coeff = nullptr;
    for (const auto& [e, c] : f.terms()) {
        if (!best || order.compare(e, *best) < 0) {
            best = &e;
            coeff = &c;
        }
    }
    return Monomial(*coeff, *best);
}

std::string to_string(FactorTag t) {
    switch (t) {
        case FactorTag::PT: return "PT";
        case FactorTag::NT: return "NT";
        case FactorTag::Mixed: return "Mixed";
    }
    return "?";
}

FactorClass classify_factor(const LaurentPolynomial& f, std::size_t var, const VariableOrder& order) {
    Monomial init = initial_term(f, order);
    int lo = f.min_degree(var), hi = f.max_degree(var);
    int at = init.exps[var];
    FactorTag tag = FactorTag::Mixed;
    if (at == lo) tag = FactorTag::PT;
    else if (at == hi) tag = FactorTag::NT;
    return {tag, init};
}

RatFunc hadamard(const RatFunc& f, const RatFunc& g) {
    using RP = UnivariatePolynomial<RatFunc>;
    const std::string tv = f.var();
    if (sgn(f.den().coeff(0)) == 0 || sgn(g.den().coeff(0)) == 0)
        throw DomainError("hadamard product needs denominators nonzero at 0");
    RatFunc zero(Rational(0), tv);
    RatFunc tvar = RatFunc::variable(tv);
    // x^D P(t/x) / (x^d Q(t/x)) · x^{d-D}
    long dp = f.num().is_zero() ? 0 : f.num().degree();
    long dq = f.den().degree();
    long top = std::max(dp, dq);
    auto scaled = [&](const QPoly& p, long deg) {
        std::vector<RatFunc> c(static_cast<std::size_t>(deg + 1), zero);
        RatFunc tk(Rational(1), tv);
        for (long k = 0; k <= deg; ++k) {
            c[static_cast<std::size_t>(deg - k)] = tk * RatFunc(p.coeff(static_cast<std::size_t>(k)), tv);
            tk = tk * tvar;
        }
        return RP(std::move(c), zero, "x");
    };
    RP num = scaled(f.num(), top);
    RP fden = scaled(f.den(), dq);
    auto lift = [&](const QPoly& p) {
        std::vector<RatFunc> c;
        for (const auto& a : p.coeffs()) c.emplace_back(a, tv);
        return RP(std::move(c), zero, "x");
    };
    num = num * lift(g.num());
    std::vector<std::pair<RP, unsigned>> factors{{fden, 1u}, {lift(g.den()), 1u}};
    return ct_rational(num, factors, dq - top);
}

}  // namespace omegact
