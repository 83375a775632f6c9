#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace omegact {

// Exact rationals. mpq_class keeps gcd(num, den) = 1 and den > 0 after every
// arithmetic operation; values built from raw parts go through make_rational.
using Rational = mpq_class;
using BigInt = mpz_class;

// Errors raised for mathematically invalid input (exit code 1 in the CLI).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

// Parses "p" or "p/q".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

Rational pow(const Rational& q, long e);

// Binomial coefficient C(n, k) with integer (possibly negative) n; zero for k < 0.
BigInt binomial(long n, long k);
BigInt factorial(long n);
// Catalan number C_n.
BigInt catalan(long n);

}  // namespace omegact
