// Acceptance run: one PASS/FAIL line per criterion with wall time.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "gen.hpp"
#include "omegact/dedekind.hpp"
#include "omegact/expr.hpp"
#include "omegact/oracle.hpp"
#include "omegact/ppfraction.hpp"
#include "omegact/walks.hpp"

using namespace omegact;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

struct CliRun {
    int status = -1;
    std::string out;
};

CliRun cli(const std::string& args) {
    CliRun r;
    std::string cmd = std::string("'") + OMEGACT_CLI_PATH + "' " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

oracle::CoefficientTable project_tail(const std::map<ExponentVector, Rational>& t, std::size_t keep) {
    oracle::CoefficientTable out;
    for (const auto& [e, c] : t) {
        ExponentVector p(e.end() - static_cast<long>(keep), e.end());
        out[p] += c;
    }
    return oracle::cleaned(out);
}

Rational series_coeff(const TruncatedSeries& s, std::size_t k, const ExponentVector& e) {
    ElliottRational c = s.coeff(k).cancel_common();
    if (!c.is_polynomial()) throw DomainError("series coefficient is not a polynomial");
    return c.numerator().coefficient(e);
}

Rational walk_count(const std::vector<oracle::PointCounts>& w, std::size_t k, long x, long y) {
    auto it = w[k].find({x, y});
    return it == w[k].end() ? Rational(0) : it->second;
}

std::string str(const Rational& q) { return to_string(q); }

int failures = 0;

void criterion(int id, const std::string& name, double limit, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && s > limit) o.fail("took " + std::to_string(s) + " s, limit " + std::to_string(limit) + " s");
    if (!o.pass) ++failures;
    std::printf("%s %2d  %-44s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), s, o.detail.c_str());
    std::fflush(stdout);
}

const char* kSixFactor =
    "1/((1-l2*x/l1^2)*(1-l3*x/l1^2)*(1-l1*x/l2^2)*(1-l3*x/l2^2)*(1-l1*x/l3^2)*(1-l2*x/l3^2))";

}  // namespace

int main() {
    criterion(1, "omega geq, 2a >= 3b", 1.0, [](Outcome& o) {
        CliRun r = cli("omega geq '1/((1-l^2*x)*(1-y/l^3))' --vars l,x,y --eliminate l");
        std::string want = "(1+x^2*y)/((1-x^3*y^2)*(1-x))\n";
        if (r.status != 0 || r.out != want) o.fail("got '" + r.out + "' status " + std::to_string(r.status));
        o.detail = o.pass ? r.out.substr(0, r.out.size() - 1) : o.detail;
    });

    criterion(2, "omega ct, six-factor F, all 6 orders", 5.0, [](Outcome& o) {
        std::vector<std::string> v{"l1", "l2", "l3"};
        int done = 0;
        do {
            CliRun r = cli(std::string("omega ct '") + kSixFactor + "' --vars l1,l2,l3,x --eliminate l1,l2,l3 --elim-order " +
                           v[0] + "," + v[1] + "," + v[2]);
            if (r.status != 0 || r.out != "1\n") o.fail(v[0] + v[1] + v[2] + " gave '" + r.out + "'");
            ++done;
        } while (std::next_permutation(v.begin(), v.end()));
        if (o.pass) o.detail = std::to_string(done) + " orders give 1";
    });

    criterion(3, "Zeilberger kernel n = 2, 3, 4", 10.0, [](Outcome& o) {
        std::ostringstream d;
        for (std::size_t n = 2; n <= 4; ++n) {
            VarNames nm;
            for (std::size_t i = 1; i <= n; ++i) nm.push_back("x" + std::to_string(i));
            VariableOrder order(nm);
            std::vector<BinomialFactor> den;
            for (std::size_t i = 0; i < n; ++i) den.push_back({Rational(1), unit_exponents(n, i), 1});
            ElliottRational z(LaurentPolynomial::constant(n, 1), den, order);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    z = z.divide_binomial(Monomial(Rational(1), unit_exponents(n, i)),
                                          Monomial(Rational(1), unit_exponents(n, j)));
            BigInt want = 1;
            for (long i = 1; i < static_cast<long>(n); ++i) want *= catalan(i);
            VarNames rev(nm.rbegin(), nm.rend());
            for (const auto& elim : {rev, nm}) {
                ElliottRational r = ct_lambdas(z, elim);
                if (!r.is_polynomial() || r.numerator() != LaurentPolynomial::constant(r.nvars(), Rational(want)))
                    o.fail("n=" + std::to_string(n) + " gave " + r.to_string());
            }
            d << (n > 2 ? ", " : "") << to_string(want);
        }
        if (o.pass) o.detail = "values " + d.str();
    });

    // Every generated system is checked; generation stops once 24 of them
    // have at least two solutions of degree <= 10.
    std::vector<DiophantineSystem> systems;

    criterion(4, "oracle equivalence, random systems", 0, [&](Outcome& o) {
        gen::Rng rng(20240401);
        std::size_t compared = 0, nontrivial = 0;
        while (nontrivial < 24 && systems.size() < 500) {
            DiophantineSystem s = gen::system(rng, systems.size() % 2 == 1);
            systems.push_back(s);
            ElliottRational e = solve_system(s);
            auto got = project_tail(graded_expansion(e, 10), s.cols());
            auto want = oracle::cleaned(oracle::enumerate_solutions(s.matrix, s.shift, false, 10));
            if (got != want) o.fail("system " + std::to_string(systems.size()) + " differs");
            compared += want.size();
            if (want.size() >= 2) ++nontrivial;
        }
        if (nontrivial < 24) o.fail("only " + std::to_string(nontrivial) + " nontrivial systems");
        if (o.pass)
            o.detail = std::to_string(systems.size()) + " systems (" + std::to_string(nontrivial) + " nontrivial), " +
                       std::to_string(compared) + " coefficients to degree 10";
    });

    criterion(5, "reciprocity on full-rank systems", 0, [&](Outcome& o) {
        gen::Rng rng(777);
        std::size_t checked = 0, tried = 0;
        std::vector<DiophantineSystem> pool;
        for (auto s : systems) {
            s.shift.assign(s.rows(), 0);
            pool.push_back(s);
        }
        while (tried < pool.size() || (checked < 20 && tried < 400)) {
            DiophantineSystem s = tried < pool.size() ? pool[tried] : gen::system(rng, false);
            ++tried;
            if (matrix_rank(s.matrix) != static_cast<long>(s.rows())) continue;
            auto strict = oracle::cleaned(oracle::enumerate_solutions(s.matrix, s.shift, true, 10));
            if (strict.empty()) continue;
            ReciprocityReport rep = check_reciprocity(s, true);
            std::size_t n = s.cols();
            if (!rep.identity_holds) o.fail("identity fails for system " + std::to_string(tried));
            std::vector<ExponentVector> inv;
            for (std::size_t i = 0; i < rep.ebar.nvars(); ++i) inv.push_back(unit_exponents(rep.ebar.nvars(), i, -1));
            ElliottRational flipped =
                (rep.ebar.substitute_monomials(inv, rep.ebar.order()) * Rational(rep.sign)).cancel_common();
            auto lhs = oracle::cleaned(oracle::enumerate_solutions(s.matrix, s.shift, false, 10));
            if (project_tail(graded_expansion(flipped, 10), n) != lhs)
                o.fail("coefficients of (-1)^(n-r) Ebar(1/x) differ from E for system " + std::to_string(tried));
            if (project_tail(graded_expansion(rep.ebar, 10), n) != strict)
                o.fail("Ebar differs from the strict oracle for system " + std::to_string(tried));
            ++checked;
        }
        if (checked < 20) o.fail("only " + std::to_string(checked) + " qualifying systems");
        if (o.pass) o.detail = std::to_string(checked) + " systems, degree 10";
    });

    criterion(6, "ppfraction goldens", 0, [](Outcome& o) {
        QPoly t = QPoly::monomial(Rational(1), 1);
        auto blocks = full_pfd_linear(t, std::vector<std::pair<Rational, unsigned>>{
                                             {Rational(-1), 2}, {Rational(1), 3}, {Rational(2), 5}});
        auto expect = [&](std::size_t b, std::size_t j, const Rational& v) {
            if (blocks[b].coeffs[j - 1] != v)
                o.fail("A_" + std::to_string(j) + " at " + str(blocks[b].root) + " is " + str(blocks[b].coeffs[j - 1]));
        };
        expect(0, 2, Rational(-1, 8 * 243));
        expect(0, 1, Rational(-13, 16 * 729));
        expect(1, 3, Rational(-1, 4));
        expect(1, 2, Rational(-5, 4));
        expect(1, 1, Rational(-59, 16));
        std::vector<Rational> at2{Rational(2, 9), Rational(-19, 27), Rational(13, 9), Rational(-593, 243),
                                  Rational(2689, 729)};
        for (std::size_t k = 0; k < 5; ++k) expect(2, 5 - k, at2[k]);
        QPoly n({4, -3, 2, 1}, Rational(0)), d({2, -4, 1}, Rational(0));
        if (polynomial_part_by_reversal(n, d) != QPoly({6, 1}, Rational(0))) o.fail("polynomial part is not t+6");
        QPoly p({-1, -1, 1}, Rational(0)), q({2, -1, 1}, Rational(0));
        QPoly den = p * p * q;
        PrimeBlock a = frac_at_prime(t, den, p);
        if (a.h.size() != 2 || a.h[1].value() != QPoly({0, Rational(1, 15)}, Rational(0)))
            o.fail("alpha^2 block is not alpha/15");
        else if (a.h[0].value() != QPoly({Rational(-7, 225), Rational(-11, 225)}, Rational(0)))
            o.fail("alpha block is " + a.h[0].to_string());
        PrimeBlock b = frac_at_prime(t, den, q);
        if (b.h.size() != 1 || b.h[0].value() != QPoly({Rational(4, 63), Rational(-1, 63)}, Rational(0)))
            o.fail("beta block is not (4-beta)/63");
        if (o.pass) o.detail = "linear blocks, t+6, alpha/15, (-7-11a)/225, (4-b)/63";
    });

    criterion(7, "route equivalence, 50 linear + 20 Elliott", 0, [](Outcome& o) {
        gen::Rng rng(4242);
        for (int i = 0; i < 50; ++i) {
            auto roots = gen::linear_roots(rng, 12, 4);
            QPoly d = QPoly::constant(Rational(1));
            unsigned total = 0;
            for (const auto& [a, m] : roots) {
                d = d * QPoly::linear_root(a).pow(m);
                total += m;
            }
            QPoly n = gen::poly(rng, static_cast<long>(rng.between(0, total - 1)));
            auto full = full_pfd_linear(n, roots);
            for (std::size_t k = 0; k < roots.size(); ++k) {
                const auto& [a, m] = roots[k];
                QPoly dk = QPoly::linear_root(a).pow(m);
                auto direct = frac_at(n, d, dk);
                auto conj = conjugated_frac(n, d, dk, a);
                QPoly rebuilt(Rational(0));
                for (unsigned j = 1; j <= m; ++j)
                    rebuilt = rebuilt + QPoly::linear_root(a).pow(m - j) * full[k].coeffs[j - 1];
                if (direct.numerator != conj.numerator || direct.numerator != rebuilt)
                    o.fail("instance " + std::to_string(i) + " root " + str(a));
            }
        }
        VariableOrder order(VarNames{"l", "x", "y"});
        for (int i = 0; i < 20; ++i) {
            ElliottRational f = gen::elliott(rng, order);
            ElliottRational a = ct_lambda(f, 0), b = elliott_reduce(f, 0);
            if (!a.equals(b)) o.fail("Elliott instance " + std::to_string(i) + ": " + f.to_string());
        }
        if (o.pass) o.detail = "all routes agree";
    });

    criterion(8, "Hadamard Fibonacci", 0, [](Outcome& o) {
        RatFunc f = lower_ratfunc(parse_expression("1/(1-t-t^2)"), "t");
        RatFunc h = hadamard(f, f);
        if (h.to_string() != "(1-t)/(1-2*t-2*t^2+t^3)") o.fail("got " + h.to_string());
        auto c = h.series(12);
        BigInt a = 1, b = 1;  // F_1, F_2
        for (std::size_t k = 0; k < 12; ++k) {
            if (c[k] != Rational(a * a)) o.fail("coefficient " + std::to_string(k));
            BigInt nx = a + b;
            a = b;
            b = nx;
        }
        if (o.pass) o.detail = h.to_string();
    });

    criterion(9, "Dedekind vs float, Zagier reciprocity", 0, [](Outcome& o) {
        std::size_t count = 0, triples = 0;
        double worst = 0;
        for (long n = 2; n <= 12; ++n) {
            std::vector<long> as;
            for (long a = 1; a <= 12; ++a)
                if (std::gcd(a, n) == 1) as.push_back(a);
            std::function<void(std::vector<long>&, std::size_t)> rec = [&](std::vector<long>& cur, std::size_t from) {
                if (!cur.empty()) {
                    double f = oracle::dedekind_float(n, cur);
                    double x = dedekind_sum(n, cur).get_d();
                    worst = std::max(worst, std::abs(f - x));
                    if (std::abs(f - x) > 1e-9) o.fail("d(" + std::to_string(n) + "; ...) off by " + std::to_string(f - x));
                    ++count;
                }
                if (cur.size() == 3) return;
                for (std::size_t i = from; i < as.size(); ++i) {
                    cur.push_back(as[i]);
                    rec(cur, i);
                    cur.pop_back();
                }
            };
            std::vector<long> cur;
            rec(cur, 0);
        }
        for (long a = 1; a <= 12; ++a)
            for (long b = a; b <= 12; ++b)
                for (long c = b; c <= 12; ++c) {
                    if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
                    ++triples;
                    if (!dedekind_reciprocity({a, b, c}).equal)
                        o.fail("reciprocity fails for " + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c));
                }
        if (o.pass) {
            std::ostringstream d;
            d << count << " sums (max error " << worst << "), " << triples << " triples";
            o.detail = d.str();
        }
    });

    criterion(10, "Dyson constant terms, n = 2, 3", 0, [](Outcome& o) {
        std::size_t cases = 0;
        for (std::size_t n = 2; n <= 3; ++n) {
            std::vector<long> a(n, 0);
            while (true) {
                long sum = std::accumulate(a.begin(), a.end(), 0L);
                BigInt want = factorial(sum);
                for (long x : a) want /= factorial(x);
                if (oracle::dyson_ct(a) != Rational(want)) o.fail("a = " + std::to_string(a[0]) + "...");
                ++cases;
                std::size_t i = 0;
                while (i < n && a[i] == 3) a[i++] = 0;
                if (i == n) break;
                ++a[i];
            }
        }
        if (o.pass) o.detail = std::to_string(cases) + " cases";
    });

    criterion(11, "slit plane, S_10 and a(-i,-i)(2n)", 60.0, [](Outcome& o) {
        StepSet s = StepSet::from_gamma(lower_elliott("1/(x*y*(1-x)*(1-y))", walk_order()));
        SlitPlane sp = slit_plane(s, 6, 1);
        const long want[] = {0, 1, 10, 110, 1302, 16212, 209352};
        for (std::size_t k = 0; k <= 6; ++k)
            if (series_coeff(sp.s_p0, k, {}) != Rational(want[k])) o.fail("S_10 coefficient " + std::to_string(k));
        StepSet lat = StepSet::ordinary_lattice();
        SlitPlane lp = slit_plane(lat, 8, 1);
        TruncatedSeries walks = slit_walks(lat, lp);
        auto ref = oracle::count_walks({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {oracle::Constraint::Slit}, {0, 0}, 8);
        std::ostringstream d;
        for (long i = 1; i <= 2; ++i)
            for (long n = 1; n <= 4; ++n) {
                Rational got = series_coeff(walks, static_cast<std::size_t>(2 * n), {-static_cast<int>(i), -static_cast<int>(i)});
                Rational orc = walk_count(ref, static_cast<std::size_t>(2 * n), -i, -i);
                if (got != orc) o.fail("a(-" + std::to_string(i) + ")(" + std::to_string(2 * n) + ") vs oracle");
                if (i <= n && got != conj1_value(i, n))
                    o.fail("a(-" + std::to_string(i) + ")(" + std::to_string(2 * n) + ") vs closed form");
                if (i == 1) d << (n > 1 ? "," : "a(-1,-1): ") << str(got);
            }
        if (o.pass) o.detail = "S_10 to t^6; " + d.str();
    });

    criterion(12, "Catalan paths and bounded Dyck", 0, [](Outcome& o) {
        CatalanPaths c = catalan_paths(10);
        for (long len = 0; len <= 10; ++len) {
            long n = (len + 1) / 2;
            Rational want = len % 2 == 0 ? Rational(binomial(2 * n, n)) : Rational(binomial(2 * n, n)) / 2;
            if (series_coeff(c.ptt, static_cast<std::size_t>(len), {}) != want) o.fail("length " + std::to_string(len));
        }
        for (long m = 1; m <= 3; ++m) {
            BoundedDyck b = dyck_bounded(m, 16);
            auto ref = oracle::count_walks({{0, 1}, {0, -1}}, {oracle::Constraint::HeightBand, 0, m - 1}, {0, 0}, 16);
            for (std::size_t k = 0; k <= 16; ++k)
                for (long h = 0; h < m; ++h)
                    if (series_coeff(b.h, k, {static_cast<int>(h)}) != walk_count(ref, k, 0, h))
                        o.fail("H_" + std::to_string(m) + " length " + std::to_string(k) + " height " + std::to_string(h));
            for (std::size_t k = 0; k <= 16; ++k) {
                ElliottRational ck = b.h.coeff(k).cancel_common();
                for (const auto& [e, q] : ck.numerator().terms())
                    if (e[0] < 0 || e[0] >= m) o.fail("H_" + std::to_string(m) + " has height " + std::to_string(e[0]));
            }
        }
        if (o.pass) o.detail = "lengths <= 10; m = 1..3 to length 16";
    });

    criterion(13, "quarter plane Q vs oracle", 0, [](Outcome& o) {
        QuarterPlane q = quarter_plane_symmetric(StepSet::ordinary_lattice(), 8);
        auto ref = oracle::count_walks({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {oracle::Constraint::Quarter}, {1, 1}, 8);
        std::size_t compared = 0;
        for (std::size_t k = 0; k <= 8; ++k) {
            ElliottRational c = q.q.coeff(k).cancel_common();
            if (!c.is_polynomial()) {
                o.fail("Q coefficient " + std::to_string(k) + " is not a polynomial");
                continue;
            }
            oracle::CoefficientTable got, want;
            for (const auto& [e, v] : c.numerator().terms()) got[e] = v;
            for (const auto& [pt, v] : ref[k])
                want[{static_cast<int>(pt.first), static_cast<int>(pt.second)}] = v;
            if (oracle::cleaned(got) != oracle::cleaned(want)) o.fail("length " + std::to_string(k));
            compared += want.size();
        }
        for (std::size_t k = 0; k <= 8; ++k)
            if (!q.o.coeff(k).cancel_common().is_polynomial()) o.fail("O is not a series in t alone");
        if (o.pass) o.detail = std::to_string(compared) + " endpoint counts";
    });

    criterion(14, "binomial suite", 0, [](Outcome& o) {
        const std::pair<const char*, long> runs[] = {
            {"two_pow", 12}, {"half_pow", 12}, {"fibonacci", 12}, {"saalschutz", 4}, {"super_catalan", 8}};
        std::ostringstream d;
        for (const auto& [id, bound] : runs) {
            auto checks = oracle::binomial_suite(id, bound);
            std::size_t bad = 0;
            for (const auto& c : checks)
                if (!c.pass) ++bad;
            if (bad) o.fail(std::string(id) + ": " + std::to_string(bad) + " failures");
            d << id << " " << checks.size() << " ";
        }
        if (o.pass) o.detail = d.str();
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
    return failures ? 1 : 0;
}
