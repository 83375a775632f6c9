#include "omegact/oracle.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>

namespace omegact::oracle {

namespace {

using Terms = std::map<ExponentVector, Rational>;

long weight_of(const ExponentVector& e, const std::vector<long>& w) {
    long s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += w[i] * e[i];
    return s;
}

Terms multiply(const Terms& a, const Terms& b, const std::vector<long>& w, long bound) {
    Terms out;
    for (const auto& [ea, ca] : a) {
        long wa = weight_of(ea, w);
        for (const auto& [eb, cb] : b) {
            if (wa + weight_of(eb, w) > bound) continue;
            Rational& slot = out[add(ea, eb)];
            slot += ca * cb;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (is_zero(it->second))
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

Terms terms_of(const LaurentPolynomial& p) { return Terms(p.terms().begin(), p.terms().end()); }

long min_weight(const Terms& t, const std::vector<long>& w) {
    long m = 0;
    bool first = true;
    for (const auto& kv : t) {
        long x = weight_of(kv.first, w);
        if (first || x < m) m = x;
        first = false;
    }
    return m;
}

// a^{-1} Σ (1 - D/a)^k, terms of weight ≤ bound.
Terms geometric_inverse(const LaurentPolynomial& d, const std::vector<long>& w, long bound) {
    const auto& dt = d.terms();
    if (dt.empty()) throw DomainError("oracle: zero factor");
    auto lead = dt.begin();
    long lw = weight_of(lead->first, w);
    int ties = 0;
    for (auto it = dt.begin(); it != dt.end(); ++it) {
        long x = weight_of(it->first, w);
        if (x < lw) {
            lw = x;
            lead = it;
            ties = 0;
        } else if (x == lw && it != lead) {
            ++ties;
        }
    }
    if (ties) throw DomainError("oracle: factor has no unique least-weight term");
    Monomial ainv = Monomial(lead->second, lead->first).inverse();
    Terms u;
    for (const auto& [e, c] : dt) {
        if (e == lead->first) continue;
        Monomial m = Monomial(c, e) * ainv;
        u[m.exps] = -m.coeff;
    }
    Terms sum, term{{ainv.exps, ainv.coeff}};
    while (!term.empty()) {
        for (const auto& [e, c] : term) sum[e] += c;
        term = multiply(term, u, w, bound);
    }
    return sum;
}

}  // namespace

Rational lookup(const CoefficientTable& t, const ExponentVector& e) {
    auto it = t.find(e);
    return it == t.end() ? Rational(0) : it->second;
}

CoefficientTable cleaned(const CoefficientTable& t) {
    CoefficientTable out;
    for (const auto& [e, c] : t)
        if (!is_zero(c)) out.emplace(e, c);
    return out;
}

std::string to_string(const CoefficientTable& t, const VarNames& names) {
    std::ostringstream os;
    for (const auto& [e, c] : t) os << monomial_to_string(Monomial(Rational(1), e), names) << ": " << omegact::to_string(c) << "\n";
    return os.str();
}

CoefficientTable enumerate_solutions(const std::vector<std::vector<long>>& matrix, const std::vector<long>& shift,
                                     bool strict, long degree_bound) {
    CoefficientTable out;
    if (matrix.empty()) return out;
    std::size_t n = matrix[0].size();
    std::size_t r = matrix.size();
    long lo = strict ? 1 : 0;
    ExponentVector a(n, static_cast<int>(lo));
    if (lo * static_cast<long>(n) > degree_bound) return out;
    auto check = [&] {
        for (std::size_t i = 0; i < r; ++i) {
            long s = i < shift.size() ? shift[i] : 0;
            for (std::size_t j = 0; j < n; ++j) s += matrix[i][j] * a[j];
            if (s != 0) return;
        }
        out[a] = 1;
    };
    // odometer over the simplex
    while (true) {
        check();
        std::size_t j = 0;
        for (; j < n; ++j) {
            ++a[j];
            long tot = std::accumulate(a.begin(), a.end(), 0L);
            if (tot <= degree_bound) break;
            a[j] = static_cast<int>(lo);
        }
        if (j == n) break;
    }
    return out;
}

CoefficientTable truncated_ct(const LaurentPolynomial& num, const std::vector<SeriesFactor>& factors,
                              const std::vector<long>& weights, long cap, const std::vector<std::size_t>& ct_vars) {
    if (weights.size() != num.nvars()) throw DomainError("oracle: weight vector length mismatch");
    CoefficientTable out;
    if (num.is_zero()) return out;
    Terms n = terms_of(num);
    std::vector<long> mins{min_weight(n, weights)};
    std::vector<const LaurentPolynomial*> pieces;
    for (const auto& f : factors) {
        for (unsigned k = 0; k < f.mult; ++k) pieces.push_back(&f.base);
    }
    std::vector<long> piece_min;
    for (auto* p : pieces) {
        Terms t = terms_of(*p);
        long lw = min_weight(t, weights);
        piece_min.push_back(-lw);
    }
    long total = mins[0];
    for (long m : piece_min) total += m;
    if (total > cap) return out;

    Terms prod = n;
    long rest = total - mins[0];
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        Terms inv = geometric_inverse(*pieces[i], weights, cap - total + piece_min[i]);
        rest -= piece_min[i];
        prod = multiply(prod, inv, weights, cap - rest);
    }
    for (const auto& [e, c] : prod) {
        if (weight_of(e, weights) > cap) continue;
        bool keep = true;
        for (auto v : ct_vars)
            if (e[v] != 0) keep = false;
        if (keep) out[e] = c;
    }
    return out;
}

Rational dyson_ct(const std::vector<long>& a) {
    std::size_t n = a.size();
    LaurentPolynomial p = LaurentPolynomial::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || a[i] == 0) continue;
            ExponentVector e = zero_exponents(n);
            e[i] = 1;
            e[j] = -1;
            LaurentPolynomial f = LaurentPolynomial::constant(n, 1);
            f.add_term(e, -1);
            p = p * f.pow(static_cast<unsigned>(a[i]));
        }
    }
    return p.constant_term();
}

std::vector<PointCounts> count_walks(const std::vector<Step>& steps, const Constraint& c, std::pair<long, long> start,
                                     std::size_t length, const Window* window) {
    constexpr std::size_t kMaxPoints = 4000000;
    auto ok = [&](long x, long y) {
        if (window && (x < window->xmin || x > window->xmax || y < window->ymin || y > window->ymax)) return false;
        switch (c.kind) {
            case Constraint::None: return true;
            case Constraint::Slit: return !(y == 0 && x <= 0);
            case Constraint::NotAboveDiagonal: return y <= x;
            case Constraint::HeightBand: return c.lo <= y && y <= c.hi;
            case Constraint::Quarter: return x > 0 && y > 0;
        }
        return true;
    };
    std::vector<PointCounts> out(length + 1);
    out[0][start] = 1;
    for (std::size_t n = 1; n <= length; ++n) {
        PointCounts next;
        for (const auto& [pt, cnt] : out[n - 1]) {
            for (const auto& s : steps) {
                long x = pt.first + s.dx, y = pt.second + s.dy;
                if (!ok(x, y)) continue;
                next[{x, y}] += cnt * s.weight;
            }
        }
        for (auto it = next.begin(); it != next.end();) {
            if (is_zero(it->second))
                it = next.erase(it);
            else
                ++it;
        }
        if (!window && next.size() > kMaxPoints) throw DomainError("walk state space too large; supply a window");
        out[n] = std::move(next);
    }
    return out;
}

double dedekind_float(long n, const std::vector<long>& a) {
    using C = std::complex<double>;
    C sum = 0;
    for (long k = 1; k < n; ++k) {
        C term = 1;
        for (long ai : a) {
            if ((k * ai) % n == 0) throw DomainError("dedekind_float: a_i not coprime to n");
            C z = std::polar(1.0, 2.0 * M_PI * static_cast<double>((k * ai) % n) / static_cast<double>(n));
            term *= (z + 1.0) / (z - 1.0);
        }
        sum += term;
    }
    return sum.real();
}

namespace {

Rational B(long n, long k) { return Rational(binomial(n, k)); }

std::vector<IdentityCheck> two_pow(long bound) {
    std::vector<IdentityCheck> out;
    for (long n = 0; n <= bound; ++n) {
        Rational l = 0;
        for (long k = 0; k <= n; ++k) l += B(n, k);
        Rational r = pow(Rational(2), n);
        out.push_back({"two_pow", {n}, l, r, l == r});
    }
    return out;
}

std::vector<IdentityCheck> half_pow(long bound) {
    // coefficients of x/(1-2x)
    std::vector<Rational> gf(bound + 1, Rational(0));
    if (bound >= 1) gf[1] = 1;
    for (long n = 2; n <= bound; ++n) gf[n] = 2 * gf[n - 1];
    std::vector<IdentityCheck> out;
    for (long n = 0; n <= bound; ++n) {
        Rational l = 0;
        for (long k = 0; k <= n - 1; ++k) l += B(n + k - 1, k) / pow(Rational(2), k);
        out.push_back({"half_pow", {n}, l, gf[n], l == gf[n]});
    }
    return out;
}

std::vector<IdentityCheck> fibonacci(long bound) {
    std::vector<Rational> f{0, 1};
    for (long n = 2; n <= bound + 1; ++n) f.push_back(f[n - 1] + f[n - 2]);
    std::vector<IdentityCheck> out;
    for (long n = 0; n <= bound; ++n) {
        Rational l = 0;
        for (long k = 0; 2 * k <= n; ++k) l += B(n - k, k);
        out.push_back({"fibonacci", {n}, l, f[n + 1], l == f[n + 1]});
    }
    return out;
}

std::vector<IdentityCheck> saalschutz(long bound) {
    // (1-x3)(1-x3-x3x4) / ((1-x1-x3+x1x3+x1x3x4)(1-x2-x3-x3x4))
    auto mono = [](int a, int b, int c, int d) { return ExponentVector{a, b, c, d}; };
    LaurentPolynomial n1 = LaurentPolynomial::constant(4, 1), n2 = LaurentPolynomial::constant(4, 1);
    n1.add_term(mono(0, 0, 1, 0), -1);
    n2.add_term(mono(0, 0, 1, 0), -1);
    n2.add_term(mono(0, 0, 1, 1), -1);
    LaurentPolynomial d1 = LaurentPolynomial::constant(4, 1), d2 = LaurentPolynomial::constant(4, 1);
    d1.add_term(mono(1, 0, 0, 0), -1);
    d1.add_term(mono(0, 0, 1, 0), -1);
    d1.add_term(mono(1, 0, 1, 0), 1);
    d1.add_term(mono(1, 0, 1, 1), 1);
    d2.add_term(mono(0, 1, 0, 0), -1);
    d2.add_term(mono(0, 0, 1, 0), -1);
    d2.add_term(mono(0, 0, 1, 1), -1);
    auto gf = truncated_ct(n1 * n2, {{d1, 1}, {d2, 1}}, {1, 1, 1, 1}, 4 * bound, {});
    std::vector<IdentityCheck> out;
    for (long a = 0; a <= bound; ++a)
        for (long d = 0; d <= bound; ++d)
            for (long e = 0; e <= bound; ++e)
                for (long n = 0; n <= bound; ++n) {
                    Rational l = 0;
                    for (long k = 0; k <= n; ++k) {
                        Rational t = B(a + k - 1, k) * B(a + e, n - k) * B(d + e + k - 1, e);
                        l += (k % 2) ? -t : t;
                    }
                    Rational r = lookup(gf, mono(a, d, e, n));
                    out.push_back({"saalschutz", {a, d, e, n}, l, r, l == r});
                }
    return out;
}

std::vector<IdentityCheck> super_catalan(long bound) {
    // [x^k] x (1-4x)^{-1/2} from the binomial series
    std::vector<Rational> half(bound + 2, Rational(0));
    Rational c = 1;
    for (long k = 0; k + 1 <= bound + 1; ++k) {
        half[k + 1] = c;
        c = c * (Rational(-1, 2) - k) / (k + 1) * -4;
    }
    auto T = [&](long a, long b) -> Rational {
        Rational s = 0;
        if (b == 0 && a >= 1) s += half[a];
        if (a == 0 && b >= 1) s += half[b];
        return s;
    };
    // (x + y - 4xy) G = T, solved along each antidiagonal
    std::map<std::pair<long, long>, Rational> G;
    auto g = [&](long m, long n) -> Rational {
        if (m < 0 || n < 0) return 0;
        auto it = G.find({m, n});
        return it == G.end() ? Rational(0) : it->second;
    };
    for (long s = 0; s <= bound; ++s)
        for (long n = 0; n <= s; ++n) {
            long m = s - n;
            G[{m, n}] = T(m + 1, n) - g(m + 1, n - 1) + 4 * g(m, n - 1);
        }
    std::vector<IdentityCheck> out;
    for (long s = 0; s <= bound; ++s)
        for (long n = 0; n <= s; ++n) {
            long m = s - n;
            Rational l = Rational(factorial(2 * m) * factorial(2 * n)) / Rational(factorial(m) * factorial(n) * factorial(m + n));
            Rational r = g(m, n);
            out.push_back({"super_catalan", {m, n}, l, r, l == r});
        }
    return out;
}

}  // namespace

const std::vector<std::string>& binomial_identities() {
    static const std::vector<std::string> ids{"two_pow", "half_pow", "fibonacci", "saalschutz", "super_catalan"};
    return ids;
}

std::vector<IdentityCheck> binomial_suite(const std::string& identity, long bound) {
    if (identity == "two_pow") return two_pow(bound);
    if (identity == "half_pow") return half_pow(bound);
    if (identity == "fibonacci") return fibonacci(bound);
    if (identity == "saalschutz") return saalschutz(bound);
    if (identity == "super_catalan") return super_catalan(bound);
    throw DomainError("unknown identity: " + identity);
}

}  // namespace omegact::oracle
