#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace dynzeta {

/// Arbitrary-precision integer, used for coefficients, determinants and
/// combinatorial counts that must never overflow.
using Int = mpz_class;

/// Exact rational number. Always kept canonical: gcd(|num|, den) = 1,
/// den >= 1, zero is 0/1. Every operation is exact; there is no rounding
/// anywhere in this library.
class Rational {
  public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(static_cast<signed long>(n)) {}
    Rational(long long n) : value_(Int(std::to_string(n))) {}
    Rational(const Int& n) : value_(n) {}
    Rational(const Int& num, const Int& den) : value_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_.canonicalize();
    }

    /// Parses "num", "num/den" or "-num/den" (decimal digits only).
    static Rational parse(std::string_view text);

    const Int& numerator() const { return value_.get_num(); }
    const Int& denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "num" when integral, "num/den" otherwise.
    std::string str() const;

    Rational operator-() const { return Rational(raw{}, mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

  private:
    struct raw {};
    Rational(raw, mpq_class v) : value_(std::move(v)) {}
    mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// binomial(n, k) for integer n (possibly negative) and k >= 0.
Int binomial(const Int& n, unsigned long k);

Int factorial(unsigned long n);

}  // namespace dynzeta
