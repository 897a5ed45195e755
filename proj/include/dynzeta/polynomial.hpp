#pragma once

#include <utility>
#include <vector>

#include "dynzeta/rational.hpp"

namespace dynzeta {

/// Dense univariate polynomial over Q. Coefficients are stored from the
/// constant term up and kept trimmed: the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& c);
    /// The monomial x^k.
    static Polynomial power(int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^k, zero beyond the degree.
    Rational coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_monic() const { return !is_zero() && leading() == Rational(1); }

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return eval(x).sign(); }
    /// Sign of the polynomial at +infinity / -infinity.
    int sign_at_pos_infinity() const;
    int sign_at_neg_infinity() const;

    Polynomial derivative() const;
    /// Scalar multiple making the polynomial monic (zero stays zero).
    Polynomial monic() const;

    std::string str() const;

    bool operator==(const Polynomial&) const = default;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial sub(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Rational& c, const Polynomial& a);

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add(a, b); }
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) { return sub(a, b); }
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul(a, b); }

/// Exact Euclidean division; divisor must be non-zero.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);

/// Monic gcd by the Euclidean algorithm (constant 1 for coprime inputs).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Yun's squarefree decomposition: p = lc * prod f_i^(m_i) with the f_i
/// monic, squarefree and pairwise coprime; returned as (f_i, m_i) pairs
/// with multiplicities strictly increasing.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

/// Sturm chain of p: p, p', then negated remainders until zero.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Number of distinct real roots of a squarefree p in the open interval
/// (a, b); either bound may be infinite.
struct Endpoint {
    enum Kind { NegInfinity, Finite, PosInfinity } kind = Finite;
    Rational value;

    static Endpoint neg_infinity() { return {NegInfinity, Rational()}; }
    static Endpoint pos_infinity() { return {PosInfinity, Rational()}; }
    static Endpoint at(const Rational& x) { return {Finite, x}; }
};

int sturm_distinct_roots(const Polynomial& squarefree, const Endpoint& a, const Endpoint& b);

/// The d-th cyclotomic polynomial, via x^d - 1 = prod_{e|d} Phi_e.
Polynomial cyclotomic(int d);

}  // namespace dynzeta
