#include "omegact/omega.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace omegact {

std::size_t DiophantineSystem::cols() const {
    if (matrix.empty()) return 0;
    return matrix.front().size();
}

void DiophantineSystem::validate() const {
    for (const auto& row : matrix)
        if (row.size() != cols()) throw DomainError("matrix rows have different lengths");
    if (!shift.empty() && shift.size() != rows()) throw DomainError("shift length must equal the number of rows");
}

CrudeGF crude_gf(const DiophantineSystem& sys) {
    sys.validate();
    std::size_t r = sys.rows(), n = sys.cols();
    if (n == 0) throw DomainError("system needs at least one unknown");
    CrudeGF out;
    VarNames names;
    for (std::size_t i = 0; i < r; ++i) out.lambdas.push_back("l" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) out.xs.push_back("x" + std::to_string(i + 1));
    names = out.lambdas;
    names.insert(names.end(), out.xs.begin(), out.xs.end());
    VariableOrder order(names);
    ExponentVector shift(r + n, 0);
    for (std::size_t i = 0; i < r && i < sys.shift.size(); ++i) shift[i] = static_cast<int>(sys.shift[i]);
    LaurentPolynomial num(Monomial(Rational(1), shift));
    std::vector<BinomialFactor> den;
    for (std::size_t c = 0; c < n; ++c) {
        ExponentVector e(r + n, 0);
        for (std::size_t i = 0; i < r; ++i) e[i] = static_cast<int>(sys.matrix[i][c]);
        e[r + c] = 1;
        if (sys.strict) num = num * Monomial(Rational(1), e);
        den.push_back(BinomialFactor{Rational(1), e, 1});
    }
    out.gf = ElliottRational(std::move(num), std::move(den), order);
    return out;
}

namespace {

// (λ^j - a)^m with a free of λ. a may be the zero monomial only for the
// λ^s factor that carries negative numerator powers.
struct LamFactor {
    int j;
    Monomial a;
    unsigned m;
    bool pt;
};

struct Prepared {
    std::size_t li;
    LaurentPolynomial num;
    std::vector<LamFactor> fs;
    std::vector<BinomialFactor> rest;
};

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// λ^k · a^e as a one-term polynomial
LaurentPolynomial lam_mono(std::size_t n, std::size_t li, int k, const Monomial& a, long e) {
    if (e > 0 && a.is_zero()) return LaurentPolynomial(n);
    Monomial m = e == 0 ? Monomial::one(n) : a.pow(e);
    m.exps[li] += k;
    return LaurentPolynomial(m);
}

// Σ_{i<count} λ^{i·step} x^{count-1-i}
LaurentPolynomial geometric_cofactor(std::size_t n, std::size_t li, int step, const Monomial& x, long count) {
    LaurentPolynomial q(n);
    for (long i = 0; i < count; ++i) q += lam_mono(n, li, static_cast<int>(i * step), x, count - 1 - i);
    return q;
}

Prepared prepare(const ElliottRational& f, std::size_t li) {
    std::size_t n = f.nvars();
    Prepared p{li, f.numerator(), {}, {}};
    for (const auto& b : f.denominator()) {
        int j = b.exps[li];
        if (j == 0) {
            p.rest.push_back(b);
            continue;
        }
        ExponentVector e = b.exps;
        e[li] = 0;
        Monomial cm(b.coeff, e);
        if (j > 0) {
            // 1 - cM λ^j = -cM (λ^j - (cM)^{-1})
            p.num = p.num * Monomial(-b.coeff, e).pow(-static_cast<long>(b.mult));
            p.fs.push_back({j, cm.inverse(), b.mult, true});
        } else {
            // 1 - cM λ^{-k} = λ^{-k} (λ^k - cM)
            p.num = p.num * LaurentPolynomial::variable(n, li, -j * static_cast<int>(b.mult));
            p.fs.push_back({-j, cm, b.mult, false});
        }
    }
    // Merge factors whose roots coincide: λ^j - a and λ^k - b share a root
    // iff a^{k'} = b^{j'}; both then divide λ^L - a^{k'} with L = lcm(j, k).
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < p.fs.size() && !changed; ++i) {
            for (std::size_t l = i + 1; l < p.fs.size() && !changed; ++l) {
                auto& fi = p.fs[i];
                auto& fl = p.fs[l];
                long g = std::gcd(fi.j, fl.j);
                long jp = fi.j / g, kp = fl.j / g;
                Monomial A = fi.a.pow(kp), B = fl.a.pow(jp);
                if (!(A == B)) continue;
                if (fi.pt != fl.pt) throw DomainError("internal: coincident roots of opposite type");
                int L = static_cast<int>(fi.j * kp);
                p.num = p.num * geometric_cofactor(n, li, fi.j, fi.a, kp).pow(fi.m) *
                        geometric_cofactor(n, li, fl.j, fl.a, jp).pow(fl.m);
                LamFactor merged{L, A, fi.m + fl.m, fi.pt};
                p.fs.erase(p.fs.begin() + static_cast<long>(l));
                p.fs[i] = merged;
                changed = true;
            }
        }
    }
    return p;
}

int lam_deg_min(const LaurentPolynomial& p, std::size_t li) { return p.min_degree(li); }
int lam_deg_max(const LaurentPolynomial& p, std::size_t li) { return p.max_degree(li); }

// P mod (λ^j - a) by λ^d -> λ^{d mod j} a^{⌊d/j⌋}
LaurentPolynomial reduce_simple(const LaurentPolynomial& p, std::size_t li, int j, const Monomial& a) {
    LaurentPolynomial r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        long d = e[li];
        long q = floor_div(d, j);
        Monomial m(c, e);
        m.exps[li] = static_cast<int>(d - q * j);
        if (q != 0) m = m * a.pow(q);
        r.add_term(m);
    }
    return r;
}

// P mod (λ^j - a)^m for P polynomial in λ
LaurentPolynomial reduce_power(LaurentPolynomial p, std::size_t li, int j, const Monomial& a, unsigned m,
                               const LaurentPolynomial& dm) {
    if (m == 1) return reduce_simple(p, li, j, a);
    int top = j * static_cast<int>(m);
    while (!p.is_zero()) {
        int d = lam_deg_max(p, li);
        if (d < top) break;
        LaurentPolynomial lead(p.nvars());
        for (const auto& [e, c] : p.terms())
            if (e[li] == d) {
                ExponentVector ne = e;
                ne[li] = d - top;
                lead.add_term(ne, c);
            }
        p -= lead * dm;
    }
    return p;
}

LaurentPolynomial lam_power_poly(std::size_t n, std::size_t li, int j, const Monomial& a, unsigned m) {
    LaurentPolynomial base = LaurentPolynomial::variable(n, li, j);
    if (!a.is_zero()) base -= LaurentPolynomial(a);
    return base.pow(m);
}

// Denominator pieces that are free of λ: binomials δ (or monomials) raised
// to powers.
struct DenPiece {
    LaurentPolynomial delta;
    unsigned power;
};

struct PTBlock {
    LamFactor f;
    LaurentPolynomial r;
    std::vector<DenPiece> dens;
};

struct Parts {
    Prepared prep;
    std::map<int, LaurentPolynomial> poly;  // polynomial part by λ-degree
    std::vector<PTBlock> blocks;
};

// Inverse of (λ^k - b) modulo (λ^j - a)^m, as U/δ^m.
std::pair<LaurentPolynomial, LaurentPolynomial> inverse_mod(std::size_t n, std::size_t li, int k, const Monomial& b,
                                                           int j, const Monomial& a, unsigned m,
                                                           const LaurentPolynomial& dm) {
    long g = std::gcd(j, k);
    long jp = j / g, kp = k / g;
    LaurentPolynomial u(n);
    for (long i = 0; i < jp; ++i) u += lam_mono(n, li, static_cast<int>(i * k), b, jp - 1 - i);
    LaurentPolynomial delta = LaurentPolynomial(a.pow(kp));
    if (!b.is_zero()) delta -= LaurentPolynomial(b.pow(jp));
    if (delta.is_zero()) throw DomainError("internal: factors share a root after merging");
    if (m == 1) return {reduce_simple(u, li, j, a), delta};
    LaurentPolynomial dl = lam_power_poly(n, li, k, b, 1);
    LaurentPolynomial e = dl * u - delta;
    LaurentPolynomial acc(n);
    LaurentPolynomial epow = LaurentPolynomial::constant(n, 1);
    for (unsigned q = 0; q < m; ++q) {
        acc += epow * delta.pow(m - 1 - q);
        epow = reduce_power(epow * (-e), li, j, a, m, dm);
    }
    return {reduce_power(u * acc, li, j, a, m, dm), delta};
}

Parts compute_parts(const ElliottRational& f, std::size_t li) {
    std::size_t n = f.nvars();
    Parts out{prepare(f, li), {}, {}};
    const auto& num = out.prep.num;
    const auto& fs = out.prep.fs;
    if (num.is_zero()) return out;

    // polynomial part from the expansion at infinity
    long dd = 0;
    for (const auto& fc : fs) dd += static_cast<long>(fc.j) * fc.m;
    long top = lam_deg_max(num, li);
    if (top >= dd) {
        long w = top - dd;
        // Σ_weight coefficients of ∏ (1 - a λ^{-j})^{-m}, weight = -λ-degree
        std::map<long, LaurentPolynomial> s;
        s[0] = LaurentPolynomial::constant(n, 1);
        for (const auto& fc : fs) {
            if (fc.a.is_zero()) continue;
            std::map<long, LaurentPolynomial> geo;
            for (long r = 0; r * fc.j <= w; ++r)
                geo[r * fc.j] = LaurentPolynomial(fc.a.pow(r)) * Rational(binomial(fc.m - 1 + r, r));
            std::map<long, LaurentPolynomial> next;
            for (const auto& [w1, c1] : s)
                for (const auto& [w2, c2] : geo) {
                    if (w1 + w2 > w) break;
                    auto it = next.find(w1 + w2);
                    if (it == next.end()) next.emplace(w1 + w2, c1 * c2);
                    else it->second += c1 * c2;
                }
            s = std::move(next);
        }
        for (const auto& [e, c] : num.terms()) {
            long deg = e[li] - dd;
            if (deg < 0) continue;
            ExponentVector base = e;
            base[li] = 0;
            Monomial mono(c, base);
            for (const auto& [wt, coef] : s) {
                long d = deg - wt;
                if (d < 0) break;
                auto it = out.poly.find(static_cast<int>(d));
                LaurentPolynomial term = coef * mono;
                if (it == out.poly.end()) out.poly.emplace(static_cast<int>(d), term);
                else it->second += term;
            }
        }
        for (auto it = out.poly.begin(); it != out.poly.end();) {
            if (it->second.is_zero()) it = out.poly.erase(it);
            else ++it;
        }
    }

    int s = std::max(0, -lam_deg_min(num, li));
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!fs[i].pt) continue;
        const auto& fi = fs[i];
        PTBlock blk{fi, LaurentPolynomial(n), {}};
        LaurentPolynomial dm = lam_power_poly(n, li, fi.j, fi.a, fi.m);
        LaurentPolynomial r(n);
        if (fi.m == 1) {
            r = reduce_simple(num, li, fi.j, fi.a);
        } else {
            r = reduce_power(num * LaurentPolynomial::variable(n, li, s), li, fi.j, fi.a, fi.m, dm);
            if (s > 0) {
                auto [u, delta] = inverse_mod(n, li, s, Monomial(Rational(0), zero_exponents(n)), fi.j, fi.a, fi.m, dm);
                r = reduce_power(r * u, li, fi.j, fi.a, fi.m, dm);
                blk.dens.push_back({delta, fi.m});
            }
        }
        for (std::size_t l = 0; l < fs.size(); ++l) {
            if (l == i) continue;
            auto [u, delta] = inverse_mod(n, li, fs[l].j, fs[l].a, fi.j, fi.a, fi.m, dm);
            for (unsigned q = 0; q < fs[l].m; ++q) r = reduce_power(r * u, li, fi.j, fi.a, fi.m, dm);
            blk.dens.push_back({delta, fi.m * fs[l].m});
        }
        blk.r = std::move(r);
        out.blocks.push_back(std::move(blk));
    }
    return out;
}

ElliottRational divide_pieces(ElliottRational x, const std::vector<DenPiece>& dens) {
    for (const auto& d : dens) {
        const auto& t = d.delta.terms();
        if (t.size() == 1) {
            x = x * Monomial(t.begin()->second, t.begin()->first).pow(-static_cast<long>(d.power));
        } else if (t.size() == 2) {
            auto it = t.begin();
            Monomial a(it->second, it->first);
            ++it;
            Monomial b(-it->second, it->first);
            x = x.divide_binomial(a, b, d.power);
        } else {
            throw DomainError("internal: resultant is not a binomial");
        }
    }
    return x;
}

ElliottRational over_rest(const ElliottRational& x, const std::vector<BinomialFactor>& rest) {
    if (rest.empty() || x.is_zero()) return x;
    return x * ElliottRational(LaurentPolynomial::constant(x.nvars(), 1), rest, x.order());
}

// Σ over the PT blocks of R(at)/((at^j - a)^m ∏ δ)
ElliottRational block_value(const PTBlock& b, const VariableOrder& order, std::size_t li, const Rational& at) {
    std::size_t n = order.size();
    LaurentPolynomial rv = b.r.evaluate(li, at);
    ElliottRational x(rv, {}, order);
    if (x.is_zero()) return x;
    x = divide_pieces(x, b.dens);
    Monomial lam_at(pow(at, b.f.j), zero_exponents(n));
    return x.divide_binomial(lam_at, b.f.a, b.f.m);
}

}  // namespace

ElliottRational ct_lambda(const ElliottRational& f, std::size_t var) {
    if (!f.depends_on(var)) return f;
    Parts parts = compute_parts(f, var);
    const auto& order = f.order();
    ElliottRational acc(order);
    auto it = parts.poly.find(0);
    if (it != parts.poly.end()) acc = ElliottRational(it->second, {}, order);
    for (const auto& b : parts.blocks) acc = acc + block_value(b, order, var, Rational(0));
    return over_rest(acc, parts.prep.rest).cancel_common();
}

ElliottRational ct_lambda(const ElliottRational& f, const std::string& var) {
    return ct_lambda(f, f.order().index_of(var));
}

ElliottRational ct_lambdas(const ElliottRational& f, const std::vector<std::string>& vars) {
    ElliottRational r = f.cancel_common();
    for (const auto& v : vars) r = ct_lambda(r, v);
    return r;
}

LambdaSplit lambda_split(const ElliottRational& f, std::size_t var) {
    const auto& order = f.order();
    if (!f.depends_on(var)) return {ElliottRational(order), f, ElliottRational(order)};
    Parts parts = compute_parts(f, var);
    std::size_t n = f.nvars();
    ElliottRational pos(order), ct(order);
    for (const auto& [d, c] : parts.poly) {
        if (d == 0) ct = ct + ElliottRational(c, {}, order);
        else pos = pos + ElliottRational(c * LaurentPolynomial::variable(n, var, d), {}, order);
    }
    for (const auto& b : parts.blocks) {
        ElliottRational at0 = block_value(b, order, var, Rational(0));
        ElliottRational full(b.r, {}, order);
        full = divide_pieces(full, b.dens);
        Monomial lam_j(Rational(1), unit_exponents(n, var, b.f.j));
        full = full.divide_binomial(lam_j, b.f.a, b.f.m);
        pos = pos + full - at0;
        ct = ct + at0;
    }
    pos = over_rest(pos, parts.prep.rest).cancel_common();
    ct = over_rest(ct, parts.prep.rest).cancel_common();
    ElliottRational neg = (f - pos - ct).cancel_common();
    return {pos, ct, neg};
}

ElliottRational omega_geq(const ElliottRational& f, const std::vector<std::string>& vars) {
    ElliottRational r = f.cancel_common();
    for (const auto& v : vars) {
        std::size_t li = r.order().index_of(v);
        if (!r.depends_on(li)) continue;
        Parts parts = compute_parts(r, li);
        const auto& order = r.order();
        ElliottRational acc(order);
        LaurentPolynomial p1(r.nvars());
        for (const auto& [d, c] : parts.poly) p1 += c;
        acc = ElliottRational(p1, {}, order);
        for (const auto& b : parts.blocks) {
            if (b.f.j == 0 || (b.f.a.coeff == 1 && is_zero(b.f.a.exps)))
                throw DomainError("pole at " + v + " = 1");
            acc = acc + block_value(b, order, li, Rational(1));
        }
        r = over_rest(acc, parts.prep.rest).evaluate(li, Rational(1)).cancel_common();
    }
    return r;
}

namespace {

// [λ^w] ∏ (1 - c_i M_i λ^{j_i})^{-m_i}, all j_i of one sign; w counted in
// units of that sign.
LaurentPolynomial geometric_coeff(const std::vector<BinomialFactor>& fs, std::size_t li, long w, std::size_t n) {
    std::map<long, LaurentPolynomial> acc;
    acc[0] = LaurentPolynomial::constant(n, 1);
    for (const auto& b : fs) {
        long j = std::labs(b.exps[li]);
        ExponentVector e = b.exps;
        e[li] = 0;
        Monomial x(b.coeff, e);
        std::map<long, LaurentPolynomial> next;
        for (const auto& [w1, c1] : acc)
            for (long r = 0; w1 + r * j <= w; ++r) {
                LaurentPolynomial t = c1 * x.pow(r) * Rational(binomial(b.mult - 1 + r, r));
                auto it = next.find(w1 + r * j);
                if (it == next.end()) next.emplace(w1 + r * j, t);
                else it->second += t;
            }
        acc = std::move(next);
    }
    auto it = acc.find(w);
    return it == acc.end() ? LaurentPolynomial(n) : it->second;
}

}  // namespace

ElliottRational elliott_reduce(const ElliottRational& f, std::size_t li, std::size_t step_budget) {
    const auto& order = f.order();
    std::size_t n = f.nvars();
    std::vector<ElliottRational> work{f.cancel_common()};
    ElliottRational result(order);
    std::size_t steps = 0;
    while (!work.empty()) {
        ElliottRational cur = std::move(work.back());
        work.pop_back();
        if (cur.is_zero()) continue;
        const auto& den = cur.denominator();
        long ip = -1, in = -1;
        for (std::size_t i = 0; i < den.size(); ++i) {
            if (den[i].exps[li] > 0 && ip < 0) ip = static_cast<long>(i);
            if (den[i].exps[li] < 0 && in < 0) in = static_cast<long>(i);
        }
        if (ip >= 0 && in >= 0) {
            if (++steps > step_budget)
                throw DomainError("elliott_reduce exceeded its step budget with " + std::to_string(work.size() + 1) +
                                  " pending terms");
            // 1/((1-X)(1-Y)) = 1/(1-XY) · (1/(1-X) + 1/(1-Y) - 1)
            BinomialFactor x = den[static_cast<std::size_t>(ip)], y = den[static_cast<std::size_t>(in)];
            std::vector<BinomialFactor> others;
            for (std::size_t i = 0; i < den.size(); ++i) {
                BinomialFactor g = den[i];
                if (static_cast<long>(i) == ip || static_cast<long>(i) == in) --g.mult;
                if (g.mult > 0) others.push_back(g);
            }
            BinomialFactor xy{x.coeff * y.coeff, add(x.exps, y.exps), 1};
            BinomialFactor x1{x.coeff, x.exps, 1}, y1{y.coeff, y.exps, 1};
            auto make = [&](std::vector<BinomialFactor> extra, const Rational& sgn) {
                std::vector<BinomialFactor> d = others;
                d.insert(d.end(), extra.begin(), extra.end());
                return ElliottRational(cur.numerator() * sgn, std::move(d), order);
            };
            work.push_back(make({xy, x1}, Rational(1)));
            work.push_back(make({xy, y1}, Rational(1)));
            work.push_back(make({xy}, Rational(-1)));
            continue;
        }
        // one-sided: finite coefficient extraction
        std::vector<BinomialFactor> lam, rest;
        for (const auto& b : den) (b.exps[li] != 0 ? lam : rest).push_back(b);
        int sign = lam.empty() ? 0 : (lam.front().exps[li] > 0 ? 1 : -1);
        LaurentPolynomial acc(n);
        for (const auto& [e, c] : cur.numerator().terms()) {
            long d = e[li];
            ExponentVector base = e;
            base[li] = 0;
            Monomial mono(c, base);
            if (sign == 0) {
                if (d == 0) acc.add_term(mono);
            } else if (sign > 0 && d <= 0) {
                acc += geometric_coeff(lam, li, -d, n) * mono;
            } else if (sign < 0 && d >= 0) {
                acc += geometric_coeff(lam, li, d, n) * mono;
            }
        }
        result = result + ElliottRational(acc, rest, order);
    }
    return result.cancel_common();
}

long matrix_rank(const IntMatrix& m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m.front().size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rational(m[i][j]);
    long rank = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == static_cast<std::size_t>(rank) || sgn(a[r][c]) == 0) continue;
            Rational f = a[r][c] / a[static_cast<std::size_t>(rank)][c];
            for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[static_cast<std::size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

ElliottRational solve_system(const DiophantineSystem& sys, const std::vector<std::string>& elim_order) {
    CrudeGF g = crude_gf(sys);
    std::vector<std::string> order = elim_order.empty() ? g.lambdas : elim_order;
    return ct_lambdas(g.gf, order);
}

ReciprocityReport check_reciprocity(const DiophantineSystem& sys, bool ebar_nonempty) {
    ReciprocityReport rep;
    long r = static_cast<long>(sys.rows());
    long n = static_cast<long>(sys.cols());
    if (matrix_rank(sys.matrix) != r) {
        rep.reason = "hypothesis violated: A does not have full row rank";
        return rep;
    }
    if (!ebar_nonempty) {
        rep.reason = "hypothesis violated: no strictly positive solution";
        return rep;
    }
    DiophantineSystem plain = sys, strict = sys;
    plain.strict = false;
    strict.strict = true;
    plain.shift.clear();
    strict.shift.clear();
    rep.hypothesis_ok = true;
    rep.e = solve_system(plain);
    rep.ebar = solve_system(strict);
    rep.sign = ((n - r) % 2 == 0) ? 1 : -1;
    std::size_t total = rep.ebar.nvars();
    std::vector<ExponentVector> inv(total);
    for (std::size_t i = 0; i < total; ++i) inv[i] = unit_exponents(total, i, -1);
    ElliottRational flipped = rep.ebar.substitute_monomials(inv, rep.ebar.order()) * Rational(rep.sign);
    rep.identity_holds = rep.e.equals(flipped);
    return rep;
}

MonomialCheck monomial_substitute_ct_check(const ElliottRational& phi, const std::vector<ExponentVector>& images) {
    std::size_t n = phi.nvars();
    if (images.size() != n) throw DomainError("one image per variable is required");
    IntMatrix m(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (images[i].size() != n) throw DomainError("image has the wrong length");
        for (std::size_t j = 0; j < n; ++j) m[i][j] = images[i][j];
    }
    if (matrix_rank(m) != static_cast<long>(n)) throw DomainError("exponent matrix of the substitution is singular");
    MonomialCheck out;
    const auto& names = phi.order().names();
    out.before = ct_lambdas(phi, names);
    out.after = ct_lambdas(phi.substitute_monomials(images, phi.order()), names);
    out.equal = out.before.equals(out.after);
    return out;
}

}  // namespace omegact
