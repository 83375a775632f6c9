#pragma once

// Seeded generators shared by the property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "omegact/elliott.hpp"
#include "omegact/omega.hpp"
#include "omegact/upoly.hpp"

namespace gen {

using namespace omegact;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long between(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng); }
    bool coin() { return between(0, 1) == 1; }
    Rational small_rational() {
        long d = between(1, 4);
        return make_rational(between(-6, 6), d);
    }
};

inline QPoly poly(Rng& r, long degree) {
    std::vector<Rational> c;
    for (long i = 0; i <= degree; ++i) c.push_back(r.small_rational());
    if (degree >= 0 && is_zero(c.back())) c.back() = 1;
    return QPoly(c, Rational(0));
}

// Distinct integer roots with multiplicities; Σ m ≤ max_degree.
inline std::vector<std::pair<Rational, unsigned>> linear_roots(Rng& r, unsigned max_degree, unsigned max_mult) {
    std::vector<std::pair<Rational, unsigned>> out;
    std::vector<long> used;
    unsigned total = 0;
    long count = r.between(1, 4);
    for (long i = 0; i < count && total < max_degree; ++i) {
        long a;
        do a = r.between(-6, 6);
        while (std::find(used.begin(), used.end(), a) != used.end());
        used.push_back(a);
        unsigned m = static_cast<unsigned>(r.between(1, max_mult));
        m = std::min(m, max_degree - total);
        total += m;
        out.emplace_back(Rational(a), m);
    }
    return out;
}

// An exponent vector that is positive in the plain reverse-lex order.
inline ExponentVector positive_exponent(Rng& r, std::size_t n, int span) {
    while (true) {
        ExponentVector e(n);
        for (auto& x : e) x = static_cast<int>(r.between(-span, span));
        std::size_t k = n;
        while (k > 0 && e[k - 1] == 0) --k;
        if (k == 0) continue;
        if (e[k - 1] < 0)
            for (auto& x : e) x = -x;
        return e;
    }
}

// num / ∏ (1 - c x^e) over the given order, with one to three factors.
inline ElliottRational elliott(Rng& r, const VariableOrder& order, int span = 2) {
    std::size_t n = order.size();
    LaurentPolynomial num(n);
    long terms = r.between(1, 2);
    for (long i = 0; i < terms; ++i) {
        ExponentVector e(n);
        for (auto& x : e) x = static_cast<int>(r.between(-span, span));
        num.add_term(e, Rational(r.between(1, 3)));
    }
    if (num.is_zero()) num = LaurentPolynomial::constant(n, 1);
    std::vector<BinomialFactor> den;
    long k = r.between(1, 3);
    for (long i = 0; i < k; ++i) {
        Rational c = r.coin() ? Rational(1) : Rational(r.between(2, 3));
        den.push_back({c, positive_exponent(r, n, span), 1});
    }
    return ElliottRational(num, den, order);
}

inline DiophantineSystem system(Rng& r, bool with_shift) {
    DiophantineSystem s;
    long rows = r.between(1, 2), cols = r.between(2, 4);
    for (long i = 0; i < rows; ++i) {
        std::vector<long> row;
        for (long j = 0; j < cols; ++j) row.push_back(r.between(-3, 3));
        s.matrix.push_back(row);
    }
    for (long i = 0; i < rows; ++i) s.shift.push_back(with_shift ? r.between(-3, 3) : 0);
    return s;
}

}  // namespace gen
