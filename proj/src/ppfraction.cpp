#include "omegact/ppfraction.hpp"

#include <memory>

namespace omegact {

static QFEPoly lift(const QPoly& p, const std::shared_ptr<const QPoly>& mod) {
    std::vector<QFE> c;
    for (const auto& x : p.coeffs()) c.push_back(QFE::from_rational(mod, x));
    return QFEPoly(std::move(c), QFE::from_rational(mod, 0), p.var());
}

PrimeBlock frac_at_prime(const QPoly& n, const QPoly& d, const QPoly& p_in) {
    if (p_in.degree() < 1) throw DomainError("prime factor must have positive degree");
    QPoly p = p_in.monic();
    if (poly_gcd(p, p.derivative()).degree() > 0)
        throw DomainError("modulus " + p.to_string() + " is not irreducible: it has a repeated factor");
    std::size_t k = 0;
    QPoly rest = d;
    while (true) {
        auto [q, r] = poly_divmod(rest, p);
        if (!r.is_zero()) break;
        rest = q;
        ++k;
    }
    if (k == 0) throw DomainError(p.to_string() + " does not divide the denominator");
    auto mod = std::make_shared<const QPoly>(QPoly(p.coeffs(), Rational(0), "alpha"));
    QFE alpha = QFE::generator(mod);
    auto fp = frac_at_origin(lift(n, mod).translate(alpha), lift(d, mod).translate(alpha), k);
    PrimeBlock blk{mod, std::vector<QFE>(k, QFE::from_rational(mod, 0))};
    for (std::size_t i = 0; i < k; ++i) blk.h[k - 1 - i] = fp.numerator.coeff(i);
    return blk;
}

Rational trace(const QFE& h) {
    const QPoly& p = *h.modulus();
    std::size_t d = static_cast<std::size_t>(p.degree());
    std::size_t top = std::max<std::size_t>(1, h.value().coeffs().size());
    // Newton's identities for the power sums of the roots of the monic p
    std::vector<Rational> s(top, Rational(0));
    s[0] = Rational(static_cast<long>(d));
    for (std::size_t k = 1; k < top; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= std::min(k, d); ++i) {
            if (i < k) acc += p.coeff(d - i) * s[k - i];
            else acc += p.coeff(d - i) * Rational(static_cast<long>(k));
        }
        s[k] = -acc;
    }
    Rational tr = 0;
    for (std::size_t i = 0; i < h.value().coeffs().size(); ++i) tr += h.value().coeffs()[i] * s[i];
    return tr;
}

QPoly symmetrize_prime_block(const PrimeBlock& blk) {
    const auto& mod = blk.modulus;
    std::size_t k = blk.h.size();
    QFE alpha = QFE::generator(mod);
    QFEPoly p = lift(QPoly(mod->coeffs(), Rational(0), "t"), mod);
    QFEPoly lin = QFEPoly::linear_root(alpha, "t");
    QFEPoly q = poly_divmod(p, lin).first;
    QFEPoly qk = q.pow(static_cast<unsigned>(k));
    QFEPoly acc(QFE::from_rational(mod, 0), "t");
    for (std::size_t j = 1; j <= k; ++j) acc = acc + qk * lin.pow(static_cast<unsigned>(k - j)) * blk.h[j - 1];
    std::vector<Rational> out;
    for (const auto& c : acc.coeffs()) out.push_back(trace(c));
    return QPoly(std::move(out), Rational(0), "t");
}

std::string PrimeBlock::to_string(const std::string& tvar) const {
    std::string out;
    for (std::size_t j = h.size(); j-- > 0;) {
        if (h[j].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + h[j].to_string() + ")/(" + tvar + "-alpha)";
        if (j > 0) out += "^" + std::to_string(j + 1);
    }
    return out.empty() ? "0" : out;
}

}  // namespace omegact
