#pragma once

#include <string>

#include "omegact/upoly.hpp"

namespace omegact {

// Univariate rational function over ℚ, kept reduced: gcd(num, den) = 1 and
// den monic. Reduction runs after every operation.
class RatFunc {
public:
    RatFunc() : num_(Rational(0), "t"), den_(QPoly::constant(Rational(1), "t")) {}
    RatFunc(const Rational& c, std::string var = "t");
    RatFunc(QPoly num, QPoly den = QPoly());

    static RatFunc variable(std::string var = "t");

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    const std::string& var() const { return num_.var(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    Rational eval(const Rational& x) const;
    // Order at t = 0 (negative for a pole).
    long valuation() const;
    // First n power-series coefficients; requires den(0) != 0.
    std::vector<Rational> series(std::size_t n) const;

    std::string to_string() const;

private:
    void normalize();
    QPoly num_, den_;
};

template <>
struct FieldTraits<RatFunc> {
    static bool is_zero(const RatFunc& a) { return a.is_zero(); }
    static RatFunc zero_like(const RatFunc& a) { return RatFunc(Rational(0), a.var()); }
    static RatFunc one_like(const RatFunc& a) { return RatFunc(Rational(1), a.var()); }
    static RatFunc from_rational(const RatFunc& a, const Rational& q) { return RatFunc(q, a.var()); }
    static RatFunc inv(const RatFunc& a) { return a.inverse(); }
    static std::string str(const RatFunc& a) { return a.to_string(); }
    static long valuation(const RatFunc& a) { return a.valuation(); }
};

}  // namespace omegact
