#pragma once

#include <vector>

#include "dynzeta/rational.hpp"

namespace dynzeta {

/// Truncated formal power series over Q: the image of a power series in
/// Q[[t]] modulo t^(order+1). Stores exactly order+1 coefficients c0..cN.
/// Values are immutable in practice; every operation returns a fresh series.
class TruncatedSeries {
  public:
    /// Zero series of the given order.
    explicit TruncatedSeries(int order);
    /// Series with the given coefficients; coeffs.size() must be order+1.
    TruncatedSeries(int order, std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& c, int order);
    static TruncatedSeries one(int order) { return constant(Rational(1), order); }
    /// c * t^k at the given order (k <= order).
    static TruncatedSeries monomial(const Rational& c, int k, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    void set_coeff(int k, const Rational& c) { coeffs_.at(static_cast<size_t>(k)) = c; }

    bool is_zero() const;

    /// Copy truncated to a lower order (new_order <= order).
    TruncatedSeries truncated(int new_order) const;

    /// Readable form like "1 - t + 2/3*t^2", for diagnostics.
    std::string str() const;

  private:
    std::vector<Rational> coeffs_;
};

/// Equality is coefficientwise up to min(order_a, order_b): two series are
/// the same element of the quotient they both live in.
bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

/// Strict comparison: same order and identical coefficient list.
bool identical(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scale(const Rational& c, const TruncatedSeries& a);
/// Cauchy product, truncated to min(order_a, order_b).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

/// Member of the multiplicative group 1 + t*Q[[t]], i.e. a TruncatedSeries
/// with constant coefficient exactly 1.
class MonicSeries {
  public:
    explicit MonicSeries(TruncatedSeries s);

    static MonicSeries one(int order) { return MonicSeries(TruncatedSeries::one(order)); }

    const TruncatedSeries& series() const { return series_; }
    int order() const { return series_.order(); }
    const Rational& coeff(int k) const { return series_.coeff(k); }

    MonicSeries truncated(int new_order) const { return MonicSeries(series_.truncated(new_order)); }
    std::string str() const { return series_.str(); }

  private:
    TruncatedSeries series_;
};

inline bool operator==(const MonicSeries& a, const MonicSeries& b) { return a.series() == b.series(); }
inline bool operator==(const MonicSeries& a, const TruncatedSeries& b) { return a.series() == b; }

MonicSeries mul(const MonicSeries& a, const MonicSeries& b);
inline MonicSeries operator*(const MonicSeries& a, const MonicSeries& b) { return mul(a, b); }

/// Group inverse in 1 + t*Q[[t]]: b0 = 1, b_n = -sum_{i=1..n} a_i b_{n-i}.
MonicSeries inverse(const MonicSeries& a);

/// The substitution homomorphism z(t) -> z(t^k), defined whenever
/// target_order <= k * z.order(). Coefficient j*k of the result is
/// coefficient j of z; indices not divisible by k vanish.
MonicSeries substitute_tk(const MonicSeries& z, int k, int target_order);

/// Exact expansion of (1 - t^n)^e for integer e; negative powers are the
/// group inverse of the positive power.
MonicSeries binomial_factor(int n, long e, int order);

/// Generalized binomial expansion of (1 - t^n)^e for rational e:
/// sum_j C(e, j) (-t^n)^j with C(e, j) = e(e-1)...(e-j+1)/j!.
MonicSeries binomial_factor(int n, const Rational& e, int order);

}  // namespace dynzeta
