#include "omegact/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace omegact {

namespace {

struct Token {
    enum Kind { Int, Ident, Op, End } kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Int, s.substr(i, j - i), i});
            i = j;
        } else if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Ident, s.substr(i, j - i), i});
            i = j;
        } else if (std::string("+-*/^()").find(static_cast<char>(c)) != std::string::npos) {
            out.push_back({Token::Op, std::string(1, static_cast<char>(c)), i});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", i);
        }
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

ExprPtr node(Expr::Kind k, std::size_t off, ExprPtr l = nullptr, ExprPtr r = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->offset = off;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& s) : toks_(lex(s)) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        if (peek().kind != Token::End) throw ParseError("unexpected '" + peek().text + "'", peek().offset);
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool is_op(const char* op) const { return peek().kind == Token::Op && peek().text == op; }
    Token take() { return toks_[pos_++]; }

    ExprPtr sum() {
        ExprPtr l = product();
        while (is_op("+") || is_op("-")) {
            Token t = take();
            l = node(t.text == "+" ? Expr::Add : Expr::Sub, t.offset, l, product());
        }
        return l;
    }

    ExprPtr product() {
        ExprPtr l = unary();
        while (is_op("*") || is_op("/")) {
            Token t = take();
            l = node(t.text == "*" ? Expr::Mul : Expr::Div, t.offset, l, unary());
        }
        return l;
    }

    ExprPtr unary() {
        if (is_op("-")) {
            Token t = take();
            return node(Expr::Neg, t.offset, unary());
        }
        return power();
    }

    long exponent() {
        bool neg = false;
        bool paren = false;
        if (is_op("(")) {
            take();
            paren = true;
        }
        if (is_op("-")) {
            take();
            neg = true;
        }
        if (peek().kind != Token::Int) throw ParseError("expected an integer exponent", peek().offset);
        Token t = take();
        if (t.text.size() > 9) throw ParseError("exponent too large", t.offset);
        long k = std::stol(t.text);
        if (paren) {
            if (!is_op(")")) throw ParseError("expected ')'", peek().offset);
            take();
        }
        return neg ? -k : k;
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (is_op("^")) {
            Token t = take();
            ExprPtr p = node(Expr::Pow, t.offset, base);
            std::const_pointer_cast<Expr>(p)->exponent = exponent();
            return p;
        }
        return base;
    }

    ExprPtr primary() {
        const Token& t = peek();
        if (t.kind == Token::Int) {
            take();
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Int;
            e->value = BigInt(t.text);
            e->offset = t.offset;
            return e;
        }
        if (t.kind == Token::Ident) {
            take();
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Var;
            e->name = t.text;
            e->offset = t.offset;
            return e;
        }
        if (t.kind == Token::Op && t.text == "(") {
            take();
            ExprPtr e = sum();
            if (!is_op(")")) throw ParseError("expected ')'", peek().offset);
            take();
            return e;
        }
        if (t.kind == Token::End) throw ParseError("unexpected end of input", t.offset);
        throw ParseError("unexpected '" + t.text + "'", t.offset);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

int precedence(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Add:
        case Expr::Sub: return 1;
        case Expr::Mul:
        case Expr::Div: return 2;
        case Expr::Neg: return 3;
        case Expr::Pow: return 4;
        default: return 5;
    }
}

std::string wrap(const ExprPtr& e, int min_prec) {
    std::string s = print_expression(e);
    return precedence(e) < min_prec ? "(" + s + ")" : s;
}

void collect_vars(const ExprPtr& e, std::set<std::string>& out) {
    if (!e) return;
    if (e->kind == Expr::Var) out.insert(e->name);
    collect_vars(e->lhs, out);
    collect_vars(e->rhs, out);
}

// p = m · base with base's graded-first term equal to 1.
std::pair<Monomial, LaurentPolynomial> normalize_base(const LaurentPolynomial& p) {
    auto terms = p.canonical_terms();
    Monomial m(terms.front().second, terms.front().first);
    return {m, p * m.inverse()};
}

FactoredRational from_polynomial(const LaurentPolynomial& p) {
    FactoredRational f;
    f.nvars = p.nvars();
    f.mono = zero_exponents(p.nvars());
    if (p.is_zero()) return f;
    if (p.is_monomial()) {
        Monomial m = p.as_monomial();
        f.coeff = m.coeff;
        f.mono = m.exps;
        return f;
    }
    auto [m, base] = normalize_base(p);
    f.coeff = m.coeff;
    f.mono = m.exps;
    f.factors.emplace_back(base, 1);
    return f;
}

FactoredRational multiply(const FactoredRational& a, const FactoredRational& b) {
    FactoredRational r;
    r.nvars = a.nvars;
    r.mono = zero_exponents(a.nvars);
    if (a.is_zero() || b.is_zero()) return r;
    r.coeff = a.coeff * b.coeff;
    r.mono = add(a.mono, b.mono);
    r.factors = a.factors;
    for (const auto& [base, m] : b.factors) {
        auto it = std::find_if(r.factors.begin(), r.factors.end(), [&](const auto& f) { return f.first == base; });
        if (it == r.factors.end())
            r.factors.emplace_back(base, m);
        else
            it->second += m;
    }
    r.factors.erase(std::remove_if(r.factors.begin(), r.factors.end(), [](const auto& f) { return f.second == 0; }),
                    r.factors.end());
    return r;
}

FactoredRational power(const FactoredRational& a, long k) {
    if (a.is_zero()) {
        if (k < 0) throw DomainError("division by zero");
        if (k == 0) return from_polynomial(LaurentPolynomial::constant(a.nvars, 1));
        return a;
    }
    FactoredRational r = a;
    r.coeff = pow(a.coeff, k);
    r.mono = scale(a.mono, static_cast<int>(k));
    for (auto& f : r.factors) f.second = static_cast<int>(f.second * k);
    r.factors.erase(std::remove_if(r.factors.begin(), r.factors.end(), [](const auto& f) { return f.second == 0; }),
                    r.factors.end());
    return r;
}

FactoredRational sum(const FactoredRational& a, const FactoredRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<std::pair<LaurentPolynomial, int>> den;
    auto need = [&](const FactoredRational& f) {
        for (const auto& [base, m] : f.factors) {
            if (m >= 0) continue;
            auto it = std::find_if(den.begin(), den.end(), [&](const auto& d) { return d.first == base; });
            if (it == den.end())
                den.emplace_back(base, -m);
            else
                it->second = std::max(it->second, -m);
        }
    };
    need(a);
    need(b);
    auto cleared = [&](const FactoredRational& f) {
        LaurentPolynomial p = LaurentPolynomial(Monomial(f.coeff, f.mono));
        for (const auto& [base, m] : f.factors)
            if (m > 0) p = p * base.pow(static_cast<unsigned>(m));
        for (const auto& [base, m] : den) {
            int have = 0;
            for (const auto& [b2, m2] : f.factors)
                if (m2 < 0 && b2 == base) have = -m2;
            if (m > have) p = p * base.pow(static_cast<unsigned>(m - have));
        }
        return p;
    };
    FactoredRational r = from_polynomial(cleared(a) + cleared(b));
    if (r.is_zero()) return r;
    FactoredRational d;
    d.nvars = a.nvars;
    d.coeff = 1;
    d.mono = zero_exponents(a.nvars);
    for (const auto& [base, m] : den) d.factors.emplace_back(base, -m);
    return multiply(r, d);
}

FactoredRational lower_rec(const ExprPtr& e, const VarNames& names) {
    std::size_t n = names.size();
    switch (e->kind) {
        case Expr::Int: return from_polynomial(LaurentPolynomial::constant(n, Rational(e->value)));
        case Expr::Var: {
            auto it = std::find(names.begin(), names.end(), e->name);
            if (it == names.end())
                throw ParseError("unknown variable '" + e->name + "'", e->offset);
            return from_polynomial(LaurentPolynomial::variable(n, static_cast<std::size_t>(it - names.begin())));
        }
        case Expr::Neg: {
            FactoredRational r = lower_rec(e->lhs, names);
            r.coeff = -r.coeff;
            return r;
        }
        case Expr::Add: return sum(lower_rec(e->lhs, names), lower_rec(e->rhs, names));
        case Expr::Sub: {
            FactoredRational r = lower_rec(e->rhs, names);
            r.coeff = -r.coeff;
            return sum(lower_rec(e->lhs, names), r);
        }
        case Expr::Mul: return multiply(lower_rec(e->lhs, names), lower_rec(e->rhs, names));
        case Expr::Div: {
            FactoredRational d = lower_rec(e->rhs, names);
            if (d.is_zero()) throw DomainError("division by zero");
            return multiply(lower_rec(e->lhs, names), power(d, -1));
        }
        case Expr::Pow: return power(lower_rec(e->lhs, names), e->exponent);
    }
    throw DomainError("malformed expression");
}

RatFunc ratfunc_rec(const ExprPtr& e, const std::string& var) {
    switch (e->kind) {
        case Expr::Int: return RatFunc(Rational(e->value), var);
        case Expr::Var:
            if (e->name != var) throw ParseError("unknown variable '" + e->name + "'", e->offset);
            return RatFunc::variable(var);
        case Expr::Neg: return -ratfunc_rec(e->lhs, var);
        case Expr::Add: return ratfunc_rec(e->lhs, var) + ratfunc_rec(e->rhs, var);
        case Expr::Sub: return ratfunc_rec(e->lhs, var) - ratfunc_rec(e->rhs, var);
        case Expr::Mul: return ratfunc_rec(e->lhs, var) * ratfunc_rec(e->rhs, var);
        case Expr::Div: {
            RatFunc d = ratfunc_rec(e->rhs, var);
            if (d.is_zero()) throw DomainError("division by zero");
            return ratfunc_rec(e->lhs, var) / d;
        }
        case Expr::Pow: {
            RatFunc b = ratfunc_rec(e->lhs, var);
            long k = e->exponent;
            if (k < 0) {
                if (b.is_zero()) throw DomainError("division by zero");
                b = b.inverse();
                k = -k;
            }
            RatFunc r(Rational(1), var);
            for (long i = 0; i < k; ++i) r = r * b;
            return r;
        }
    }
    throw DomainError("malformed expression");
}

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string print_expression(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Int: return e->value.get_str();
        case Expr::Var: return e->name;
        case Expr::Neg: return "-" + wrap(e->lhs, 3);
        case Expr::Add: return wrap(e->lhs, 1) + "+" + wrap(e->rhs, 2);
        case Expr::Sub: return wrap(e->lhs, 1) + "-" + wrap(e->rhs, 2);
        case Expr::Mul: return wrap(e->lhs, 2) + "*" + wrap(e->rhs, 3);
        case Expr::Div: return wrap(e->lhs, 2) + "/" + wrap(e->rhs, 3);
        case Expr::Pow: return wrap(e->lhs, 5) + "^" + std::to_string(e->exponent);
    }
    return "";
}

bool same_expression(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    if (a->kind == Expr::Int) return a->value == b->value;
    if (a->kind == Expr::Var) return a->name == b->name;
    if (a->kind == Expr::Pow && a->exponent != b->exponent) return false;
    return same_expression(a->lhs, b->lhs) && same_expression(a->rhs, b->rhs);
}

std::vector<std::string> expression_variables(const ExprPtr& e) {
    std::set<std::string> s;
    collect_vars(e, s);
    return {s.begin(), s.end()};
}

LaurentPolynomial FactoredRational::expanded_numerator() const {
    LaurentPolynomial p(Monomial(coeff, mono));
    if (is_zero()) return LaurentPolynomial(nvars);
    for (const auto& [base, m] : factors)
        if (m > 0) p = p * base.pow(static_cast<unsigned>(m));
    return p;
}

FactoredRational lower(const ExprPtr& e, const VarNames& names) {
    FactoredRational f = lower_rec(e, names);
    f.nvars = names.size();
    if (f.mono.size() != names.size()) f.mono = zero_exponents(names.size());
    return f;
}

ElliottRational to_elliott(const FactoredRational& f, const VariableOrder& order) {
    const auto& names = order.names();
    ElliottRational r(f.expanded_numerator(), {}, order);
    for (const auto& [base, m] : f.factors) {
        if (m > 0) continue;
        if (base.size() != 2)
            throw DomainError("denominator factor " + base.to_string(names) + " is not a difference of two monomials");
        auto terms = base.canonical_terms();
        Monomial a(terms[0].second, terms[0].first);
        Monomial b(-terms[1].second, terms[1].first);
        r = r * ElliottRational::inverse_binomial(order, a, b, static_cast<unsigned>(-m));
    }
    return r;
}

ElliottRational lower_elliott(const std::string& text, const VariableOrder& order) {
    return to_elliott(lower(parse_expression(text), order.names()), order);
}

RatFunc lower_ratfunc(const ExprPtr& e, const std::string& var) { return ratfunc_rec(e, var); }

RatFunc ct_general(const FactoredRational& f, const VarNames& names, std::size_t ct, std::size_t other) {
    using RP = UnivariatePolynomial<RatFunc>;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (i != ct && i != other) {
            if (f.mono[i] != 0) throw DomainError("general CT supports two variables only");
            for (const auto& [base, m] : f.factors)
                if (base.depends_on(i)) throw DomainError("general CT supports two variables only");
        }
    const std::string& lv = names[ct];
    const std::string& ov = names[other];
    RatFunc proto(Rational(0), ov);
    RatFunc w = RatFunc::variable(ov);
    auto w_pow = [&](int k) {
        RatFunc r(Rational(1), ov);
        RatFunc b = k < 0 ? w.inverse() : w;
        for (int i = 0; i < std::abs(k); ++i) r = r * b;
        return r;
    };
    long shift = f.mono[ct];
    // Laurent polynomial -> polynomial in the CT variable, with the low power split off
    auto convert = [&](const LaurentPolynomial& p, long& low) {
        low = p.min_degree(ct);
        std::vector<RatFunc> c(static_cast<std::size_t>(p.max_degree(ct) - low + 1), proto);
        for (const auto& [e, q] : p.terms())
            c[static_cast<std::size_t>(e[ct] - low)] = c[static_cast<std::size_t>(e[ct] - low)] + RatFunc(q, ov) * w_pow(e[other]);
        return RP(std::move(c), proto, lv);
    };
    RP num = RP::constant(RatFunc(f.coeff, ov) * w_pow(f.mono[other]), lv);
    std::vector<std::pair<RP, unsigned>> dens;
    for (const auto& [base, m] : f.factors) {
        long low = 0;
        RP p = convert(base, low);
        if (m > 0) {
            num = num * p.pow(static_cast<unsigned>(m));
            shift += low * m;
        } else {
            dens.emplace_back(p, static_cast<unsigned>(-m));
            shift += low * m;
        }
    }
    return ct_rational<RatFunc>(num, dens, shift);
}

DiophantineSystem parse_system(const std::string& text, bool strict) {
    DiophantineSystem sys;
    sys.strict = strict;
    std::istringstream in(text);
    std::string line;
    bool have_b = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::string body = line;
        bool is_b = false;
        auto first = body.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (body.compare(first, 2, "b:") == 0) {
            is_b = true;
            body = body.substr(first + 2);
        }
        std::istringstream ls(body);
        std::vector<long> row;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                long v = std::stol(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                row.push_back(v);
            } catch (const std::exception&) {
                throw DomainError("matrix entry '" + tok + "' is not an integer");
            }
        }
        if (is_b) {
            if (have_b) throw DomainError("more than one b: line");
            sys.shift = row;
            have_b = true;
        } else {
            sys.matrix.push_back(row);
        }
    }
    if (!have_b) sys.shift.assign(sys.matrix.size(), 0);
    sys.validate();
    return sys;
}

}  // namespace omegact
