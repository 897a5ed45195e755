#pragma once

#include <map>
#include <vector>

#include "dynzeta/series.hpp"

namespace dynzeta {

/// Sequence of fixed point indices i_1..i_N of the iterates of a map.
/// Entries are exact rationals so that the inverse transforms of arbitrary
/// monic series stay representable; integrality is a reported property.
struct IndexSequence {
    std::vector<Rational> values;  // values[n-1] holds i_n

    IndexSequence() = default;
    explicit IndexSequence(std::vector<Rational> v) : values(std::move(v)) {}
    static IndexSequence constant(const Rational& c, int length);
    static IndexSequence of_ints(const std::vector<long>& v);

    int length() const { return static_cast<int>(values.size()); }
    const Rational& at(int n) const { return values.at(static_cast<size_t>(n) - 1); }

    bool operator==(const IndexSequence&) const = default;
};

/// Witness for "are all these numbers integers": index of the first
/// fractional entry (1-based; coefficient index for series) and its value.
struct IntegralityReport {
    bool integral = true;
    int first_fractional = 0;
    Rational value;
};

/// Sparse exponent map n -> e_n describing the product prod_n (1-t^n)^(e_n).
/// Absent keys mean exponent zero; stored exponents are non-zero.
struct FactorExponents {
    std::map<int, Rational> exponents;
    int max_index = 0;

    void set(int n, const Rational& e);
    Rational get(int n) const;
    bool operator==(const FactorExponents&) const = default;
};

/// exp(x) = 1 + x + x^2/2! + ... for x with zero constant term.
MonicSeries exp_series(const TruncatedSeries& x);

/// log z for monic z, via log(1-x) = -x - x^2/2 - x^3/3 - ...
TruncatedSeries log_series(const MonicSeries& z);

/// z^y := exp(y log z) for rational y.
MonicSeries pow_rational(const MonicSeries& z, const Rational& y);

/// Unique factorization of a monic series as prod (1-t^n)^(e_n), computed
/// by cancelling the lowest non-constant coefficient degree by degree.
/// Exponents are rational in general; they are all integers exactly when
/// the series has integer coefficients.
FactorExponents factorize(const MonicSeries& z);

/// Expands a factor-exponent map back into a monic series of the given
/// order. Inverse of factorize.
MonicSeries expand_factors(const FactorExponents& f, int order);

/// True iff every coefficient of z is an integer; otherwise reports the
/// first fractional coefficient.
IntegralityReport is_integral(const MonicSeries& z);

IntegralityReport integrality(const std::vector<Rational>& values);

/// The generating series exp(sum_n i_n/n t^n) of an index sequence — the
/// Lefschetz zeta function when i comes from an admissible pair.
MonicSeries zeta_from_indices(const IndexSequence& i);

/// Inverse of zeta_from_indices: i_n = n * [t^n] log z. For series that do
/// not come from a dynamical system the entries may be fractional; callers
/// can check with integrality().
IndexSequence indices_from_zeta(const MonicSeries& z);

}  // namespace dynzeta
