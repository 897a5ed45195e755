#include "dynzeta/polynomial.hpp"

#include <map>
#include <stdexcept>

#include "dynzeta/sequence_transforms.hpp"

namespace dynzeta {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::power(int k) {
    if (k < 0) throw std::invalid_argument("monomial power must be >= 0");
    std::vector<Rational> c(static_cast<size_t>(k) + 1);
    c.back() = Rational(1);
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return Rational();
    return coeffs_[static_cast<size_t>(k)];
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int Polynomial::sign_at_pos_infinity() const {
    return is_zero() ? 0 : leading().sign();
}

int Polynomial::sign_at_neg_infinity() const {
    if (is_zero()) return 0;
    int s = leading().sign();
    return degree() % 2 == 0 ? s : -s;
}

Polynomial Polynomial::derivative() const {
    if (degree() < 1) return Polynomial();
    std::vector<Rational> d(static_cast<size_t>(degree()));
    for (int k = 1; k <= degree(); ++k)
        d[static_cast<size_t>(k) - 1] = Rational(k) * coeffs_[static_cast<size_t>(k)];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return Polynomial();
    return scale(Rational(1) / leading(), *this);
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational c = coeff(k);
        if (c.is_zero()) continue;
        if (out.empty()) {
            out += c.sign() < 0 ? "-" : "";
            if (!(abs(c) == Rational(1)) || k == 0) out += abs(c).str();
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            if (!(abs(c) == Rational(1)) || k == 0) out += abs(c).str();
        }
        if (k == 1)
            out += "x";
        else if (k > 1)
            out += "x^" + std::to_string(k);
    }
    return out;
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(static_cast<size_t>(std::max(a.degree(), b.degree()) + 1));
    for (int k = 0; k < static_cast<int>(c.size()); ++k)
        c[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
    return Polynomial(std::move(c));
}

Polynomial sub(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(static_cast<size_t>(std::max(a.degree(), b.degree()) + 1));
    for (int k = 0; k < static_cast<int>(c.size()); ++k)
        c[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
    return Polynomial(std::move(c));
}

Polynomial mul(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(static_cast<size_t>(a.degree() + b.degree() + 1));
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j)
            c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return Polynomial(std::move(c));
}

Polynomial scale(const Rational& c, const Polynomial& a) {
    std::vector<Rational> r(a.coeffs());
    for (Rational& x : r) x *= c;
    return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial r = a;
    if (a.degree() < b.degree()) return {Polynomial(), r};
    std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree() + 1));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational factor = r.leading() / b.leading();
        q[static_cast<size_t>(shift)] = factor;
        r = sub(r, mul(scale(factor, b), Polynomial::power(shift)));
    }
    return {Polynomial(std::move(q)), r};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divrem(x, y).second;
        x = std::move(y);
        y = r.monic();  // normalize to tame coefficient growth
    }
    return x.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() < 1) return out;
    Polynomial q = p.monic();
    // Yun's algorithm.
    Polynomial dp = q.derivative();
    Polynomial a = gcd(q, dp);
    Polynomial b = divrem(q, a).first;
    Polynomial c = divrem(dp, a).first;
    Polynomial d = sub(c, b.derivative());
    for (int i = 1; b.degree() > 0; ++i) {
        Polynomial g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = divrem(b, g).first;
        c = divrem(d, g).first;
        d = sub(c, b.derivative());
    }
    return out;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    chain.push_back(p);
    if (p.degree() < 1) return chain;
    chain.push_back(p.derivative());
    while (chain.back().degree() >= 0) {
        Polynomial r = divrem(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(scale(Rational(-1), r));
    }
    return chain;
}

namespace {

int sign_variations(const std::vector<Polynomial>& chain, const Endpoint& e) {
    int variations = 0;
    int prev = 0;
    for (const Polynomial& p : chain) {
        int s = 0;
        switch (e.kind) {
            case Endpoint::NegInfinity: s = p.sign_at_neg_infinity(); break;
            case Endpoint::PosInfinity: s = p.sign_at_pos_infinity(); break;
            case Endpoint::Finite: s = p.sign_at(e.value); break;
        }
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

}  // namespace

int sturm_distinct_roots(const Polynomial& squarefree, const Endpoint& a, const Endpoint& b) {
    if (squarefree.degree() < 1) return 0;
    if (a.kind == Endpoint::Finite && squarefree.eval(a.value).is_zero())
        throw std::domain_error("sturm_distinct_roots: polynomial vanishes at an endpoint");
    if (b.kind == Endpoint::Finite && squarefree.eval(b.value).is_zero())
        throw std::domain_error("sturm_distinct_roots: polynomial vanishes at an endpoint");
    std::vector<Polynomial> chain = sturm_chain(squarefree);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

Polynomial cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
    static const Polynomial x_minus_1({Rational(-1), Rational(1)});
    if (d == 1) return x_minus_1;
    // x^d - 1 divided by the product of Phi_e over proper divisors e of d.
    Polynomial numerator = sub(Polynomial::power(d), Polynomial::constant(Rational(1)));
    Polynomial denom = Polynomial::constant(Rational(1));
    for (long e : divisors(d)) {
        if (e == d) continue;
        denom = mul(denom, cyclotomic(static_cast<int>(e)));
    }
    auto [q, r] = divrem(numerator, denom);
    if (!r.is_zero()) throw std::logic_error("cyclotomic: non-exact division");
    return q;
}

}  // namespace dynzeta
