#include "omegact/ratfunc.hpp"

namespace omegact {

RatFunc::RatFunc(const Rational& c, std::string var)
    : num_(QPoly::constant(c, var)), den_(QPoly::constant(Rational(1), var)) {}

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        // default-constructed denominator means 1
        den_ = QPoly::constant(Rational(1), num_.var());
    }
    normalize();
}

RatFunc RatFunc::variable(std::string var) {
    return RatFunc(QPoly(std::vector<Rational>{0, 1}, Rational(0), var), QPoly::constant(Rational(1), var));
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly::constant(Rational(1), num_.var());
        return;
    }
    QPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_divmod(num_, g).first;
        den_ = poly_divmod(den_, g).first;
    }
    Rational lc = den_.leading();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    // cross-cancel first to keep degrees small
    QPoly g1 = num_.is_zero() ? QPoly::constant(Rational(1), var()) : poly_gcd(num_, o.den_);
    QPoly g2 = o.num_.is_zero() ? QPoly::constant(Rational(1), var()) : poly_gcd(o.num_, den_);
    QPoly a = g1.degree() > 0 ? poly_divmod(num_, g1).first : num_;
    QPoly d2 = g1.degree() > 0 ? poly_divmod(o.den_, g1).first : o.den_;
    QPoly b = g2.degree() > 0 ? poly_divmod(o.num_, g2).first : o.num_;
    QPoly d1 = g2.degree() > 0 ? poly_divmod(den_, g2).first : den_;
    return RatFunc(a * b, d1 * d2);
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw DomainError("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

Rational RatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (sgn(d) == 0) throw DomainError("rational function has a pole at " + x.get_str());
    return num_.eval(x) / d;
}

long RatFunc::valuation() const {
    if (num_.is_zero()) return 0;
    return static_cast<long>(num_.low_degree()) - static_cast<long>(den_.low_degree());
}

std::vector<Rational> RatFunc::series(std::size_t n) const {
    Rational d0 = den_.coeff(0);
    if (sgn(d0) == 0) throw DomainError("rational function is not a power series at 0");
    std::vector<Rational> s(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
        Rational acc = num_.coeff(k);
        for (std::size_t i = 1; i <= k && i < den_.coeffs().size(); ++i) acc -= den_.coeffs()[i] * s[k - i];
        s[k] = acc / d0;
    }
    return s;
}

std::string RatFunc::to_string() const {
    if (den_.degree() == 0) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace omegact
