#include "omegact/rational.hpp"

namespace omegact {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational '" + text + "'");
    }
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

Rational pow(const Rational& q, long e) {
    if (e < 0) {
        if (is_zero(q)) throw DomainError("zero raised to a negative power");
        Rational inv = 1 / q;
        return pow(inv, -e);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    return make_rational(n, d);
}

BigInt binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        BigInt r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    // C(n, k) = (-1)^k C(k - n - 1, k) for negative n
    BigInt r = binomial(k - n - 1, k);
    return (k % 2 == 0) ? r : BigInt(-r);
}

BigInt factorial(long n) {
    if (n < 0) throw DomainError("factorial of a negative integer");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt catalan(long n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace omegact
