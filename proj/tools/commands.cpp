#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "omegact/dedekind.hpp"
#include "omegact/expr.hpp"
#include "omegact/oracle.hpp"
#include "omegact/ppfraction.hpp"
#include "omegact/walks.hpp"

namespace omegact::cli {

namespace {

using json = nlohmann::ordered_json;
using Table = oracle::CoefficientTable;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

long parse_long(const std::string& s) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("expected an integer, got '" + s + "'");
}

std::vector<long> parse_longs(const std::vector<std::string>& v) {
    std::vector<long> out;
    for (const auto& s : v) out.push_back(parse_long(s));
    return out;
}

json monomial_json(const Rational& c, const ExponentVector& e) {
    json m = json::array();
    m.push_back(to_string(c));
    for (int x : e) m.push_back(x);
    return m;
}

json er_json(const ElliottRational& f) {
    json j;
    j["variables"] = f.order().names();
    json num = json::array();
    for (const auto& [e, c] : f.numerator().canonical_terms()) num.push_back(monomial_json(c, e));
    j["numerator"] = num;
    json den = json::array();
    for (const auto& b : f.denominator()) {
        Monomial l = b.lhs(), r = b.rhs();
        den.push_back({{"lhs", monomial_json(l.coeff, l.exps)}, {"rhs", monomial_json(r.coeff, r.exps)}, {"mult", b.mult}});
    }
    j["denominator"] = den;
    j["text"] = f.to_string();
    return j;
}

json table_json(const Table& t) {
    json a = json::array();
    for (const auto& [e, c] : t)
        if (!is_zero(c)) a.push_back(monomial_json(c, e));
    return a;
}

void emit(const Global& g, std::ostream& os, const json& j, const std::string& text) {
    if (g.json)
        os << j.dump(2) << "\n";
    else
        os << text;
}

// Exact comparison of two coefficient tables over the union of their keys.
struct Diff {
    std::size_t compared = 0;
    std::vector<std::string> lines;
    bool ok() const { return lines.empty(); }
};

void compare_tables(const Table& got, const Table& want, const VarNames& names, Diff& d, const std::string& tag = "") {
    std::set<ExponentVector> keys;
    for (const auto& [e, c] : got) keys.insert(e);
    for (const auto& [e, c] : want) keys.insert(e);
    for (const auto& e : keys) {
        Rational a = oracle::lookup(got, e), b = oracle::lookup(want, e);
        ++d.compared;
        if (a != b)
            d.lines.push_back(tag + monomial_to_string(Monomial(Rational(1), e), names) + ": pipeline " + to_string(a) +
                              ", oracle " + to_string(b));
    }
}

int report(const Diff& d, json& j, std::ostream& text) {
    j["cross_check"] = {{"match", d.ok()}, {"compared", d.compared}, {"diff", d.lines}};
    if (d.ok()) {
        text << "cross-check: ok (" << d.compared << " coefficients)\n";
        return 0;
    }
    text << "cross-check: MISMATCH\n";
    for (const auto& l : d.lines) text << "  " << l << "\n";
    return 1;
}

int unavailable(const std::string& why, json& j, std::ostream& text) {
    j["cross_check"] = {{"match", false}, {"unavailable", why}};
    text << "cross-check: unavailable (" << why << ")\n";
    return 1;
}

std::optional<IntMatrix> parse_rho(const std::string& s, std::size_t n) {
    if (s.empty()) return std::nullopt;
    IntMatrix m;
    for (const auto& row : split(s, ';')) m.push_back(parse_longs(split(row, ',')));
    if (m.size() != n) throw UsageError("--rho needs " + std::to_string(n) + " rows");
    for (const auto& r : m)
        if (r.size() != n) throw UsageError("--rho rows need " + std::to_string(n) + " entries");
    return m;
}

// Weight of x_j is Σ_i K^i ρ_ij; the last variable dominates as in the order.
std::vector<long> order_weights(const VariableOrder& o, long k) {
    std::size_t n = o.size();
    std::vector<long> w(n, 0);
    long p = 1;
    for (std::size_t i = 0; i < n; ++i, p *= k)
        for (std::size_t j = 0; j < n; ++j) w[j] += p * (o.rho() ? (*o.rho())[i][j] : (i == j ? 1 : 0));
    return w;
}

long dot(const std::vector<long>& w, const ExponentVector& e) {
    long s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += w[i] * e[i];
    return s;
}

bool factors_positive(const ElliottRational& f, const std::vector<long>& w) {
    return std::all_of(f.denominator().begin(), f.denominator().end(),
                       [&](const BinomialFactor& b) { return dot(w, b.exps) > 0; });
}

std::vector<oracle::SeriesFactor> series_factors(const ElliottRational& f) {
    std::vector<oracle::SeriesFactor> out;
    for (const auto& b : f.denominator()) out.push_back({b.base(), b.mult});
    return out;
}

std::vector<long> restrict_weights(const std::vector<long>& w, const VarNames& from, const VarNames& to) {
    std::vector<long> out;
    for (const auto& name : to) {
        auto it = std::find(from.begin(), from.end(), name);
        if (it == from.end()) throw DomainError("variable " + name + " missing from the input order");
        out.push_back(w[static_cast<std::size_t>(it - from.begin())]);
    }
    return out;
}

// Projects input exponents onto the variables of `to`.
Table project(const Table& t, const VarNames& from, const VarNames& to) {
    std::vector<std::size_t> idx;
    for (const auto& name : to)
        idx.push_back(static_cast<std::size_t>(std::find(from.begin(), from.end(), name) - from.begin()));
    Table out;
    for (const auto& [e, c] : t) {
        ExponentVector p;
        for (std::size_t i : idx) p.push_back(e[i]);
        out[p] += c;
    }
    return oracle::cleaned(out);
}

long max_weight(const std::vector<long>& w) { return w.empty() ? 0 : *std::max_element(w.begin(), w.end()); }

int cross_check_omega(const std::string& mode, const ElliottRational& f, const ElliottRational& result,
                      const std::vector<std::string>& elim, const Global& g, json& j, std::ostream& text) {
    const VarNames& in = f.order().names();
    const VarNames& out = result.order().names();
    std::vector<std::size_t> lam;
    for (const auto& v : elim) lam.push_back(f.order().index_of(v));
    for (long k = 2; k <= 64; ++k) {
        std::vector<long> w = order_weights(f.order(), k);
        if (mode == "geq")
            for (std::size_t i : lam) w[i] = 0;
        std::vector<long> wr = restrict_weights(w, in, out);
        if (!factors_positive(f, w) || !factors_positive(result, wr)) continue;
        long cap = static_cast<long>(g.truncate) * std::max(1L, max_weight(wr));
        Table want;
        if (mode == "ct") {
            want = project(oracle::truncated_ct(f.numerator(), series_factors(f), w, cap, lam), in, out);
        } else {
            Table all = oracle::truncated_ct(f.numerator(), series_factors(f), w, cap, {});
            Table kept;
            for (const auto& [e, c] : all)
                if (std::all_of(lam.begin(), lam.end(), [&](std::size_t i) { return e[i] >= 0; })) {
                    ExponentVector at_one = e;
                    for (std::size_t i : lam) at_one[i] = 0;
                    kept[at_one] += c;
                }
            want = project(kept, in, out);
        }
        Table got = oracle::truncated_ct(result.numerator(), series_factors(result), wr, cap, {});
        Diff d;
        compare_tables(got, want, out, d);
        j["cross_check_weights"] = w;
        text << "cross-check weights:";
        for (long x : w) text << " " << x;
        text << ", cap " << cap << "\n";
        return report(d, j, text);
    }
    return unavailable("no weight vector agrees with the order on every factor", j, text);
}

}  // namespace

int run_omega(const OmegaArgs& a, const Global& g, std::ostream& os) {
    if (a.mode != "ct" && a.mode != "geq") throw UsageError("omega mode must be ct or geq");
    ElliottRational f;
    std::vector<std::string> elim;
    json j;
    std::ostringstream text;
    if (!a.system_file.empty()) {
        if (!a.expr.empty()) throw UsageError("give an expression or --system, not both");
        CrudeGF c = crude_gf(parse_system(read_file(a.system_file), a.strict));
        f = c.gf;
        elim = c.lambdas;
    } else {
        if (a.expr.empty()) throw UsageError("omega needs an expression or --system FILE");
        if (a.vars.empty()) throw UsageError("--vars is required with an expression");
        if (a.eliminate.empty()) throw UsageError("--eliminate is required with an expression");
        VariableOrder order(a.vars, parse_rho(a.rho, a.vars.size()));
        for (const auto& v : a.eliminate)
            if (!order.has(v)) throw UsageError("eliminated variable " + v + " is not declared");
        elim = a.eliminate;
        FactoredRational fr = lower(parse_expression(a.expr), a.vars);
        bool binomial = std::all_of(fr.factors.begin(), fr.factors.end(),
                                    [](const auto& p) { return p.second > 0 || p.first.size() == 2; });
        if (!binomial && a.mode == "ct" && a.vars.size() == 2 && elim.size() == 1 && !order.rho()) {
            std::size_t ct = order.index_of(elim[0]);
            RatFunc r = ct_general(fr, a.vars, ct, 1 - ct);
            j["route"] = "general";
            j["result"] = r.to_string();
            text << r.to_string() << "\n";
            int code = 0;
            if (g.cross_check) code = unavailable("the general route has no oracle mirror", j, text);
            emit(g, os, j, text.str());
            return code;
        }
        f = to_elliott(fr, order);
    }
    if (!a.elim_order.empty()) {
        std::vector<std::string> x = a.elim_order, y = elim;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) throw UsageError("--elim-order must permute the eliminated variables");
        elim = a.elim_order;
    }
    ElliottRational r = a.mode == "ct" ? ct_lambdas(f, elim) : omega_geq(f, elim);
    j["input"] = er_json(f);
    j["eliminate"] = elim;
    j["result"] = er_json(r);
    text << r.to_string() << "\n";
    int code = 0;
    if (g.cross_check) code = cross_check_omega(a.mode, f, r, elim, g, j, text);
    emit(g, os, j, text.str());
    return code;
}

int run_count(const CountArgs& a, const Global& g, std::ostream& os) {
    DiophantineSystem sys = parse_system(read_file(a.system_file));
    DiophantineSystem strict = sys;
    strict.strict = true;
    ElliottRational e = solve_system(sys, a.elim_order), ebar = solve_system(strict, a.elim_order);
    long bound = std::max<long>(static_cast<long>(g.truncate), 10);
    std::vector<long> zero(sys.rows(), 0);
    bool nonempty = !oracle::cleaned(oracle::enumerate_solutions(sys.matrix, zero, true, bound)).empty();
    ReciprocityReport rep = check_reciprocity(sys, nonempty);
    json j;
    std::ostringstream text;
    j["E"] = er_json(e);
    j["Ebar"] = er_json(ebar);
    text << "E(x) = " << e.to_string() << "\n";
    text << "Ebar(x) = " << ebar.to_string() << "\n";
    json rj = {{"hypothesis_ok", rep.hypothesis_ok}, {"reason", rep.reason}};
    if (rep.hypothesis_ok) {
        rj["sign"] = rep.sign;
        rj["identity_holds"] = rep.identity_holds;
        text << "reciprocity" << (sys.shift == std::vector<long>(sys.rows(), 0) ? "" : " (homogeneous part)") << ": E(x) = " << (rep.sign < 0 ? "-" : "") << "Ebar(1/x) "
             << (rep.identity_holds ? "holds" : "FAILS") << "\n";
    } else {
        if (!nonempty) rep.reason += " of degree <= " + std::to_string(bound);
        rj["reason"] = rep.reason;
        text << "reciprocity: not applicable (" << rep.reason << ")\n";
    }
    j["reciprocity"] = rj;
    int code = rep.hypothesis_ok && !rep.identity_holds ? 1 : 0;
    if (g.cross_check) {
        Diff d;
        VarNames xs;
        for (std::size_t i = 0; i < sys.cols(); ++i) xs.push_back("x" + std::to_string(i + 1));
        long deg = static_cast<long>(g.truncate);
        compare_tables(project(graded_expansion(e, g.truncate), e.order().names(), xs),
                       oracle::enumerate_solutions(sys.matrix, sys.shift, false, deg), xs, d, "E ");
        compare_tables(project(graded_expansion(ebar, g.truncate), ebar.order().names(), xs),
                       oracle::enumerate_solutions(sys.matrix, sys.shift, true, deg), xs, d, "Ebar ");
        code = std::max(code, report(d, j, text));
    }
    emit(g, os, j, text.str());
    return code;
}

namespace {

QPoly to_qpoly(const LaurentPolynomial& p, const std::string& var) {
    if (!p.is_zero() && p.min_degree(0) < 0) throw DomainError("negative power in a polynomial");
    std::vector<Rational> c(p.is_zero() ? 0 : static_cast<std::size_t>(p.max_degree(0) + 1), Rational(0));
    for (const auto& [e, q] : p.terms()) c[static_cast<std::size_t>(e[0])] = q;
    return QPoly(std::move(c), Rational(0), var);
}

std::string power_text(const QPoly& p, unsigned m) {
    std::string s = "(" + p.to_string() + ")";
    return m == 1 ? s : s + "^" + std::to_string(m);
}

}  // namespace

int run_pfd(const PfdArgs& a, const Global& g, std::ostream& os) {
    FactoredRational fr = lower(parse_expression(a.expr), VarNames{a.var});
    if (fr.is_zero()) throw DomainError("the zero function has no decomposition");
    QPoly t = QPoly::monomial(Rational(1), 1, a.var);
    QPoly n = QPoly::constant(fr.coeff, a.var);
    QPoly d = QPoly::constant(Rational(1), a.var);
    std::vector<std::pair<QPoly, unsigned>> factors;
    if (fr.mono[0] > 0) n = n * t.pow(static_cast<unsigned>(fr.mono[0]));
    if (fr.mono[0] < 0) factors.emplace_back(t, static_cast<unsigned>(-fr.mono[0]));
    for (const auto& [base, m] : fr.factors) {
        QPoly p = to_qpoly(base, a.var);
        if (m > 0) {
            n = n * p.pow(static_cast<unsigned>(m));
            continue;
        }
        Rational lead = p.leading();
        n = n * QPoly::constant(pow(lead, m), a.var);
        factors.emplace_back(p.monic(), static_cast<unsigned>(-m));
    }
    for (const auto& [p, m] : factors) d = d * p.pow(m);
    json j;
    std::ostringstream text;
    j["numerator"] = n.to_string();
    j["denominator"] = d.to_string();
    text << "N = " << n.to_string() << "\nD = " << d.to_string() << "\n";
    int code = 0;
    if (a.at_origin) {
        std::size_t m = d.low_degree();
        if (m == 0) throw DomainError("t does not divide the denominator");
        auto fp = frac_at_origin(n, d, m);
        j["at_origin"] = {{"numerator", fp.numerator.to_string()}, {"factor", fp.factor.to_string()}};
        text << "Frac at " << a.var << "^" << m << ": (" << fp.numerator.to_string() << ")/" << a.var << "^" << m
             << "\n";
    } else if (!a.prime.empty()) {
        QPoly p = lower_ratfunc(parse_expression(a.prime), a.var).num();
        PrimeBlock blk = frac_at_prime(n, d, p);
        QPoly r = symmetrize_prime_block(blk);
        json h = json::array();
        for (const auto& x : blk.h) h.push_back(x.to_string());
        j["prime"] = {{"modulus", blk.modulus->to_string()}, {"h", h}, {"block", blk.to_string(a.var)},
                      {"symmetrized", r.to_string()}};
        text << "alpha: root of " << blk.modulus->to_string() << "\n";
        text << "block: " << blk.to_string(a.var) << "\n";
        QPoly pt(blk.modulus->coeffs(), Rational(0), a.var);
        text << "sum over conjugates: (" << r.to_string() << ")/" << power_text(pt, static_cast<unsigned>(blk.h.size()))
             << "\n";
    } else {
        std::vector<QPoly> powered;
        for (const auto& [p, m] : factors) powered.push_back(p.pow(m));
        PPFraction<Rational> pp = ppfraction_split(n, d, powered);
        j["polynomial_part"] = pp.polynomial_part.to_string();
        text << "polynomial part: " << pp.polynomial_part.to_string() << "\n";
        json parts = json::array();
        RatFunc sum(pp.polynomial_part);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const auto& [p, m] = factors[i];
            json part = {{"factor", p.to_string()}, {"mult", m}, {"numerator", pp.parts[i].numerator.to_string()}};
            text << "Frac at " << power_text(p, m) << ": (" << pp.parts[i].numerator.to_string() << ")/"
                 << power_text(p, m) << "\n";
            sum = sum + RatFunc(pp.parts[i].numerator, powered[i]);
            if (p.degree() == 1) {
                Rational root = -p.coeff(0);
                auto blocks = full_pfd_linear(pp.parts[i].numerator, {{root, m}});
                json cs = json::array();
                for (std::size_t k = 0; k < m; ++k) {
                    cs.push_back(to_string(blocks[0].coeffs[k]));
                    text << "  (" << to_string(blocks[0].coeffs[k]) << ")/" << power_text(p, static_cast<unsigned>(k + 1))
                         << "\n";
                }
                part["linear"] = {{"root", to_string(root)}, {"coeffs", cs}};
            }
            parts.push_back(part);
        }
        j["parts"] = parts;
        if (g.cross_check) {
            bool ok = sum == RatFunc(n, d);
            j["cross_check"] = {{"match", ok}};
            text << "cross-check: " << (ok ? "ok (parts reassemble to N/D)" : "MISMATCH (parts do not reassemble)")
                 << "\n";
            code = ok ? 0 : 1;
        }
    }
    emit(g, os, j, text.str());
    return code;
}

int run_dedekind(const DedekindArgs& a, const Global& g, std::ostream& os) {
    json j;
    std::ostringstream text;
    int code = 0;
    if (a.reciprocity) {
        if (a.values.size() < 2) throw UsageError("reciprocity needs at least two integers");
        DedekindReciprocity r = dedekind_reciprocity(a.values);
        j = {{"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}, {"equal", r.equal}};
        text << "lhs: " << to_string(r.lhs) << "\nrhs: " << to_string(r.rhs) << "\nequal: "
             << (r.equal ? "true" : "false") << "\n";
        if (g.cross_check) {
            Diff d;
            d.compared = 1;
            if (!r.equal) d.lines.push_back("lhs " + to_string(r.lhs) + " differs from rhs " + to_string(r.rhs));
            code = report(d, j, text);
        }
    } else {
        if (a.values.size() < 2) throw UsageError("dedekind needs n and at least one a_i");
        long n = a.values[0];
        std::vector<long> av(a.values.begin() + 1, a.values.end());
        Rational v = dedekind_sum(n, av);
        j = {{"n", n}, {"a", av}, {"value", to_string(v)}};
        text << "d(" << n << ";";
        for (std::size_t i = 0; i < av.size(); ++i) text << (i ? ", " : " ") << av[i];
        text << ") = " << to_string(v) << "\n";
        if (g.cross_check) {
            double f = oracle::dedekind_float(n, av);
            bool ok = std::abs(f - v.get_d()) <= 1e-9;
            j["cross_check"] = {{"match", ok}, {"float", f}};
            text << "cross-check: " << (ok ? "ok" : "MISMATCH") << " (float " << f << ")\n";
            code = ok ? 0 : 1;
        }
    }
    emit(g, os, j, text.str());
    return code;
}

namespace {

StepSet parse_steps(const std::string& gamma) {
    if (gamma.empty()) return StepSet::ordinary_lattice();
    ElliottRational gm = lower_elliott(gamma, walk_order()).cancel_common();
    if (!gm.is_polynomial()) return StepSet::from_gamma(gm);
    std::vector<LatticeStep> steps;
    for (const auto& [e, c] : gm.numerator().terms()) steps.push_back({e[0], e[1], c});
    return StepSet::from_steps(steps);
}

std::vector<oracle::Step> oracle_steps(const std::vector<LatticeStep>& s) {
    std::vector<oracle::Step> out;
    for (const auto& x : s) out.push_back({x.dx, x.dy, x.weight});
    return out;
}

// (length, exponents) -> coefficient; every coefficient must be a Laurent polynomial.
std::map<std::pair<std::size_t, ExponentVector>, Rational> series_table(const TruncatedSeries& s) {
    std::map<std::pair<std::size_t, ExponentVector>, Rational> out;
    for (std::size_t k = 0; k <= s.order(); ++k) {
        ElliottRational c = s.coeff(k).cancel_common();
        if (!c.is_polynomial()) throw DomainError("coefficient of t^" + std::to_string(k) + " is not a polynomial");
        for (const auto& [e, q] : c.numerator().terms()) out[{k, e}] = q;
    }
    return out;
}

void series_text(const TruncatedSeries& s, const std::string& label, const std::vector<std::string>& cols, bool csv,
                 json& j, std::ostream& text) {
    auto tab = series_table(s);
    json rows = json::array();
    if (csv) {
        text << "length";
        for (const auto& c : cols) text << "," << c;
        text << ",count\n";
    } else {
        text << label << " = " << s.to_string() << "\n";
    }
    for (const auto& [key, q] : tab) {
        json row = json::array();
        row.push_back(key.first);
        for (int x : key.second) row.push_back(x);
        row.push_back(to_string(q));
        rows.push_back(row);
        if (csv) {
            text << key.first;
            for (int x : key.second) text << "," << x;
            text << "," << to_string(q) << "\n";
        }
    }
    j[label] = {{"columns", cols}, {"rows", rows}, {"text", s.to_string()}};
}

// Oracle steps of a rational Γ: all steps of weight dx+dy up to the bound.
std::optional<std::vector<oracle::Step>> expand_steps(const StepSet& s, long cap) {
    if (s.finite_steps) return oracle_steps(*s.finite_steps);
    std::vector<long> w{1, 1};
    if (!factors_positive(s.gamma, w)) return std::nullopt;
    std::vector<oracle::Step> out;
    for (const auto& [e, c] : oracle::truncated_ct(s.gamma.numerator(), series_factors(s.gamma), w, cap, {}))
        out.push_back({e[0], e[1], c});
    return out;
}

oracle::Window reach_window(const std::vector<oracle::Step>& steps, std::size_t n, long px, long py) {
    long dxmin = 0, dymin = 0, dxmax = 0, dymax = 0;
    for (const auto& s : steps) {
        dxmin = std::min(dxmin, s.dx);
        dymin = std::min(dymin, s.dy);
        dxmax = std::max(dxmax, s.dx);
        dymax = std::max(dymax, s.dy);
    }
    long L = static_cast<long>(n);
    return {L * dxmin, std::max(px - L * dxmin, px), L * dymin, std::max(py + L * dymax, py - L * dymin)};
}

int compare_walk_series(const std::map<std::pair<std::size_t, ExponentVector>, Rational>& got,
                        const std::vector<oracle::PointCounts>& want, bool two_d, json& j, std::ostream& text) {
    Table a, b;
    for (const auto& [key, q] : got) {
        ExponentVector e{static_cast<int>(key.first)};
        e.insert(e.end(), key.second.begin(), key.second.end());
        a[e] = q;
    }
    for (std::size_t k = 0; k < want.size(); ++k)
        for (const auto& [pt, q] : want[k]) {
            if (is_zero(q)) continue;
            ExponentVector e{static_cast<int>(k)};
            if (two_d) {
                e.push_back(static_cast<int>(pt.first));
                e.push_back(static_cast<int>(pt.second));
            } else {
                e.push_back(static_cast<int>(pt.second));
            }
            b[e] = q;
        }
    Diff d;
    compare_tables(a, b, two_d ? VarNames{"t", "x", "y"} : VarNames{"t", "y"}, d);
    return report(d, j, text);
}

}  // namespace

int run_walks(const WalksArgs& a, const Global& g, std::ostream& os) {
    std::size_t n = g.truncate;
    json j;
    std::ostringstream text;
    int code = 0;
    if (a.kind == "slit") {
        if (a.p < 1) throw UsageError("--p must be positive");
        StepSet s = parse_steps(a.gamma);
        SlitPlane sp = slit_plane(s, n, a.p);
        std::string label = "S_" + std::to_string(a.p) + "0";
        series_text(sp.s_p0, label, {}, a.csv, j, text);
        if (g.cross_check) {
            auto steps = expand_steps(s, static_cast<long>(a.p) + 2 * static_cast<long>(n));
            if (!steps) {
                code = unavailable("step set cannot be expanded with unit weights", j, text);
            } else {
                oracle::Window win = reach_window(*steps, n, a.p, 0);
                auto counts = oracle::count_walks(*steps, {oracle::Constraint::Slit}, {0, 0}, n, &win);
                Diff d;
                for (std::size_t k = 1; k <= n; ++k) {
                    Table x{{ExponentVector{static_cast<int>(k)}, sp.s_p0.coeff(k).numerator().constant_term()}};
                    auto it = counts[k].find({a.p, 0});
                    Table y{{ExponentVector{static_cast<int>(k)}, it == counts[k].end() ? Rational(0) : it->second}};
                    compare_tables(oracle::cleaned(x), oracle::cleaned(y), {"t"}, d);
                }
                code = report(d, j, text);
            }
        }
    } else if (a.kind == "dyck") {
        BoundedDyck b = dyck_bounded(a.m, n);
        series_text(b.h, "H", {"height"}, a.csv, j, text);
        if (g.cross_check) {
            long hi = a.m == 0 ? static_cast<long>(n) : a.m - 1;
            auto counts = oracle::count_walks({{0, 1}, {0, -1}}, {oracle::Constraint::HeightBand, 0, hi}, {0, 0}, n);
            code = compare_walk_series(series_table(b.h), counts, false, j, text);
        }
    } else if (a.kind == "quarter") {
        StepSet s = parse_steps(a.gamma);
        QuarterPlane q = quarter_plane_symmetric(s, n);
        j["O"] = q.o.to_string();
        if (!a.csv) text << "O = " << q.o.to_string() << "\n";
        series_text(q.q, "Q", {"x", "y"}, a.csv, j, text);
        if (g.cross_check) {
            auto counts = oracle::count_walks(oracle_steps(*s.finite_steps), {oracle::Constraint::Quarter}, {1, 1}, n);
            code = compare_walk_series(series_table(q.q), counts, true, j, text);
        }
    } else if (a.kind == "catalan") {
        CatalanPaths c = catalan_paths(n);
        series_text(c.ptt, "p", {}, a.csv, j, text);
        if (g.cross_check) {
            auto counts = oracle::count_walks({{1, 0}, {0, 1}}, {oracle::Constraint::NotAboveDiagonal}, {0, 0}, n);
            Diff d;
            for (std::size_t k = 0; k <= n; ++k) {
                Rational total = 0;
                for (const auto& [pt, q] : counts[k]) total += q;
                Table got{{ExponentVector{static_cast<int>(k)}, c.ptt.coeff(k).numerator().constant_term()}};
                Table want{{ExponentVector{static_cast<int>(k)}, total}};
                compare_tables(oracle::cleaned(got), oracle::cleaned(want), {"t"}, d);
            }
            code = report(d, j, text);
        }
    } else {
        throw UsageError("walks kind must be slit, dyck, quarter or catalan");
    }
    emit(g, os, j, text.str());
    return code;
}

int run_hadamard(const HadamardArgs& a, const Global& g, std::ostream& os) {
    RatFunc f = lower_ratfunc(parse_expression(a.f), a.var);
    RatFunc h = lower_ratfunc(parse_expression(a.g), a.var);
    RatFunc r = hadamard(f, h);
    json j = {{"result", r.to_string()}};
    std::ostringstream text;
    text << r.to_string() << "\n";
    int code = 0;
    if (g.cross_check) {
        std::size_t len = g.truncate + 1;
        auto sf = f.series(len), sg = h.series(len), sr = r.series(len);
        Diff d;
        for (std::size_t k = 0; k < len; ++k) {
            ++d.compared;
            if (sr[k] != sf[k] * sg[k])
                d.lines.push_back(a.var + "^" + std::to_string(k) + ": pipeline " + to_string(sr[k]) + ", oracle " +
                                  to_string(sf[k] * sg[k]));
        }
        code = report(d, j, text);
    }
    emit(g, os, j, text.str());
    return code;
}

namespace {

oracle::Constraint parse_constraint(const std::string& s) {
    if (s == "none") return {oracle::Constraint::None};
    if (s == "slit") return {oracle::Constraint::Slit};
    if (s == "diagonal") return {oracle::Constraint::NotAboveDiagonal};
    if (s == "quarter") return {oracle::Constraint::Quarter};
    if (s.rfind("band:", 0) == 0) {
        auto parts = split(s.substr(5), ':');
        if (parts.size() != 2) throw UsageError("band constraint is band:LO:HI");
        return {oracle::Constraint::HeightBand, parse_long(parts[0]), parse_long(parts[1])};
    }
    throw UsageError("unknown constraint '" + s + "'");
}

}  // namespace

int run_oracle(const OracleArgs& a, const Global& g, std::ostream& os) {
    json j;
    std::ostringstream text;
    int code = 0;
    if (a.kind == "solve") {
        if (a.args.size() != 1) throw UsageError("oracle solve takes one matrix file");
        DiophantineSystem sys = parse_system(read_file(a.args[0]), a.strict);
        Table t = oracle::enumerate_solutions(sys.matrix, sys.shift, a.strict, static_cast<long>(g.truncate));
        VarNames names;
        for (std::size_t i = 0; i < sys.cols(); ++i) names.push_back("x" + std::to_string(i + 1));
        j = {{"variables", names}, {"terms", table_json(t)}};
        text << oracle::to_string(t, names) << "\n";
    } else if (a.kind == "walks") {
        std::vector<oracle::Step> steps;
        for (const auto& s : split(a.steps, ';')) {
            auto v = parse_longs(split(s, ','));
            if (v.size() != 2 && v.size() != 3) throw UsageError("steps are dx,dy or dx,dy,weight separated by ';'");
            steps.push_back({v[0], v[1], Rational(v.size() == 3 ? v[2] : 1)});
        }
        auto st = parse_longs(split(a.start, ','));
        if (st.size() != 2) throw UsageError("--start is x,y");
        auto counts = oracle::count_walks(steps, parse_constraint(a.constraint), {st[0], st[1]}, g.truncate);
        json rows = json::array();
        text << "length,x,y,count\n";
        for (std::size_t k = 0; k < counts.size(); ++k)
            for (const auto& [pt, q] : counts[k]) {
                if (is_zero(q)) continue;
                rows.push_back({k, pt.first, pt.second, to_string(q)});
                text << k << "," << pt.first << "," << pt.second << "," << to_string(q) << "\n";
            }
        j = {{"columns", {"length", "x", "y", "count"}}, {"rows", rows}};
    } else if (a.kind == "dedekind") {
        auto v = parse_longs(a.args);
        if (v.size() < 2) throw UsageError("oracle dedekind needs n and at least one a_i");
        double f = oracle::dedekind_float(v[0], std::vector<long>(v.begin() + 1, v.end()));
        j = {{"value", f}};
        std::ostringstream s;
        s.precision(15);
        s << f;
        text << s.str() << "\n";
    } else if (a.kind == "dyson") {
        auto v = parse_longs(a.args);
        Rational r = oracle::dyson_ct(v);
        j = {{"value", to_string(r)}};
        text << to_string(r) << "\n";
    } else if (a.kind == "binomial") {
        std::vector<std::string> ids = a.args.empty() ? oracle::binomial_identities() : a.args;
        json rows = json::array();
        for (const auto& id : ids) {
            std::size_t pass = 0, total = 0;
            for (const auto& c : oracle::binomial_suite(id, a.bound)) {
                ++total;
                if (c.pass) ++pass;
                else code = 1;
                rows.push_back({{"identity", c.identity}, {"params", c.params}, {"lhs", to_string(c.lhs)},
                                {"rhs", to_string(c.rhs)}, {"pass", c.pass}});
                if (!c.pass) {
                    text << "FAIL " << id;
                    for (long p : c.params) text << " " << p;
                    text << ": " << to_string(c.lhs) << " vs " << to_string(c.rhs) << "\n";
                }
            }
            text << id << ": " << pass << "/" << total << " pass\n";
        }
        j = {{"checks", rows}};
    } else {
        throw UsageError("oracle kind must be solve, walks, dedekind, dyson or binomial");
    }
    emit(g, os, j, text.str());
    return code;
}

}  // namespace omegact::cli
