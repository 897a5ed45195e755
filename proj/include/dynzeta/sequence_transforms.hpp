#pragma once

#include <vector>

#include "dynzeta/zeta_algebra.hpp"

namespace dynzeta {

/// Symmetric-product index sequence s_1..s_N, with s_0 = 1 implicit.
/// Rational entries for the same reason as IndexSequence.
struct SPIndexSequence {
    std::vector<Rational> values;  // values[n-1] holds s_n

    SPIndexSequence() = default;
    explicit SPIndexSequence(std::vector<Rational> v) : values(std::move(v)) {}
    static SPIndexSequence of_ints(const std::vector<long>& v);

    int length() const { return static_cast<int>(values.size()); }
    const Rational& at(int n) const { return values.at(static_cast<size_t>(n) - 1); }

    bool operator==(const SPIndexSequence&) const = default;
};

/// Ordered tuple of positive integers with a fixed sum.
struct Composition {
    std::vector<int> parts;

    int size() const { return static_cast<int>(parts.size()); }
    long product() const;
};

/// Largest n for which compositions are enumerated (2^(n-1) of them).
inline constexpr int kCompositionCap = 20;

/// All 2^(n-1) compositions of n in lexicographic order.
std::vector<Composition> compositions_of(int n);

/// s from i through the convolution recurrence
/// (n+1) s_{n+1} = sum_{j=0..n} s_{n-j} i_{j+1}, with s_0 = 1.
SPIndexSequence sp_from_indices_recurrence(const IndexSequence& i);

/// Brute-force value of s_n as a sum over all compositions of n:
/// sum_C pi(i, C) / (pi(C) |C|!). Oracle for the recurrence.
Rational sp_from_indices_compositions(const IndexSequence& i, int n);

/// i from s through the inverted recurrence
/// i_{n+1} = (n+1) s_{n+1} - sum_{j=0..n-1} s_{n-j} i_{j+1}.
IndexSequence indices_from_sp_recurrence(const SPIndexSequence& s);

/// Brute-force value of i_n: n times the t^n coefficient of log(1 + sum s_k t^k),
/// i.e. n * sum_C (-1)^(|C|+1) pi(s, C) / |C|. Oracle for the recurrence.
Rational indices_from_sp_compositions(const SPIndexSequence& s, int n);

/// Moebius function, by trial division.
int mobius(long n);

/// Divisors of n in increasing order.
std::vector<long> divisors(long n);

/// The a_k with i_n = sum_{k|n} k a_k; exact rationals with a per-entry
/// integrality flag. The congruence "all a_k integral" holds exactly for
/// index sequences of admissible pairs.
struct DoldCoefficients {
    std::vector<Rational> values;  // values[k-1] holds a_k
    std::vector<bool> integral;

    int length() const { return static_cast<int>(values.size()); }
    const Rational& at(int k) const { return values.at(static_cast<size_t>(k) - 1); }
};

DoldCoefficients dold_coefficients(const IndexSequence& i);

/// Reconstruction i_n = sum_{k|n} k a_k (exact divisor-sum inverse of
/// dold_coefficients for any rational sequence).
IndexSequence indices_from_dold(const DoldCoefficients& a);

struct DoldVerdict {
    bool pass = true;
    int first_k = 0;     // smallest k with fractional a_k, when failing
    Rational value;      // the offending a_k
};

/// PASS iff every Dold coefficient of i is an integer.
DoldVerdict dold_check(const IndexSequence& i);

/// Signed counts of hyperbolic m-periodic orbits:
/// a_m = a_(0,0) - a_(0,1) + a_(1,0) - a_(1,1), b_m = -a_(1,0) + a_(1,1).
struct OrbitCount {
    int period = 1;
    long a = 0;
    long b = 0;
};

using OrbitCounts = std::vector<OrbitCount>;

/// Exponent map of zeta = prod_m (1-t^m)^(-a_m) (1-t^(2m))^(-b_m):
/// e_l = -a_l - b_(l/2) (the b term only for even l).
FactorExponents exponents_from_orbit_counts(const OrbitCounts& orbits);

/// Linear coefficient of the zeta function of the k-th iterate, computed
/// two ways and asserted equal: the per-orbit case split on gcd(k, m), and
/// the divisor sum i_k = -sum_{l|k} l e_l over the factor exponents.
long long linear_coefficient_of_iterate(const OrbitCounts& orbits, int k);

}  // namespace dynzeta
