#include "dynzeta/sequence_transforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dynzeta {

SPIndexSequence SPIndexSequence::of_ints(const std::vector<long>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return SPIndexSequence(std::move(out));
}

long Composition::product() const {
    long p = 1;
    for (int c : parts) p *= c;
    return p;
}

namespace {

void emit_compositions(int n, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (n == 0) {
        out.push_back(Composition{prefix});
        return;
    }
    for (int first = 1; first <= n; ++first) {
        prefix.push_back(first);
        emit_compositions(n - first, prefix, out);
        prefix.pop_back();
    }
}

void check_composition_cap(int n) {
    if (n < 1) throw std::invalid_argument("compositions are defined for n >= 1");
    if (n > kCompositionCap)
        throw std::length_error("composition enumeration capped at n = " +
                                std::to_string(kCompositionCap));
}

}  // namespace

std::vector<Composition> compositions_of(int n) {
    check_composition_cap(n);
    std::vector<Composition> out;
    out.reserve(1u << (n - 1));
    std::vector<int> prefix;
    emit_compositions(n, prefix, out);
    return out;
}

SPIndexSequence sp_from_indices_recurrence(const IndexSequence& i) {
    int n = i.length();
    std::vector<Rational> s(static_cast<size_t>(n) + 1);
    s[0] = Rational(1);
    for (int m = 0; m < n; ++m) {
        // (m+1) s_{m+1} = sum_{j=0..m} s_{m-j} i_{j+1}
        Rational acc;
        for (int j = 0; j <= m; ++j) acc += s[static_cast<size_t>(m - j)] * i.at(j + 1);
        s[static_cast<size_t>(m) + 1] = acc / Rational(m + 1);
    }
    return SPIndexSequence(std::vector<Rational>(s.begin() + 1, s.end()));
}

Rational sp_from_indices_compositions(const IndexSequence& i, int n) {
    check_composition_cap(n);
    if (n > i.length()) throw std::invalid_argument("sequence shorter than requested index");
    Rational total;
    for (const Composition& c : compositions_of(n)) {
        Rational num(1);
        for (int part : c.parts) num *= i.at(part);
        total += num / Rational(Int(c.product()) * factorial(static_cast<unsigned long>(c.size())));
    }
    return total;
}

IndexSequence indices_from_sp_recurrence(const SPIndexSequence& s) {
    int n = s.length();
    std::vector<Rational> i(static_cast<size_t>(n));
    for (int m = 0; m < n; ++m) {
        // i_{m+1} = (m+1) s_{m+1} - sum_{j=0..m-1} s_{m-j} i_{j+1}
        Rational acc = Rational(m + 1) * s.at(m + 1);
        for (int j = 0; j < m; ++j) acc -= s.at(m - j) * i[static_cast<size_t>(j)];
        i[static_cast<size_t>(m)] = acc;
    }
    return IndexSequence(std::move(i));
}

Rational indices_from_sp_compositions(const SPIndexSequence& s, int n) {
    check_composition_cap(n);
    if (n > s.length()) throw std::invalid_argument("sequence shorter than requested index");
    // The composition sum gives [t^n] log(1 + sum s_k t^k) = i_n / n.
    Rational total;
    for (const Composition& c : compositions_of(n)) {
        Rational num(1);
        for (int part : c.parts) num *= s.at(part);
        Rational term = num / Rational(c.size());
        total += (c.size() % 2 == 0) ? -term : term;
    }
    return Rational(n) * total;
}

int mobius(long n) {
    if (n < 1) throw std::invalid_argument("mobius is defined for n >= 1");
    int prime_count = 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;  // squared factor
        ++prime_count;
    }
    if (n > 1) ++prime_count;
    return prime_count % 2 == 0 ? 1 : -1;
}

std::vector<long> divisors(long n) {
    if (n < 1) throw std::invalid_argument("divisors are defined for n >= 1");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

DoldCoefficients dold_coefficients(const IndexSequence& i) {
    int n = i.length();
    DoldCoefficients out;
    out.values.reserve(static_cast<size_t>(n));
    out.integral.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        // a_k = (1/k) sum_{d|k} mu(k/d) i_d
        Rational acc;
        for (long d : divisors(k)) {
            int mu = mobius(k / d);
            if (mu == 1)
                acc += i.at(static_cast<int>(d));
            else if (mu == -1)
                acc -= i.at(static_cast<int>(d));
        }
        Rational a = acc / Rational(k);
        out.integral.push_back(a.is_integer());
        out.values.push_back(std::move(a));
    }
    return out;
}

IndexSequence indices_from_dold(const DoldCoefficients& a) {
    int n = a.length();
    std::vector<Rational> i(static_cast<size_t>(n));
    for (int m = 1; m <= n; ++m) {
        Rational acc;
        for (long k : divisors(m)) acc += Rational(k) * a.at(static_cast<int>(k));
        i[static_cast<size_t>(m) - 1] = acc;
    }
    return IndexSequence(std::move(i));
}

DoldVerdict dold_check(const IndexSequence& i) {
    DoldCoefficients a = dold_coefficients(i);
    for (int k = 1; k <= a.length(); ++k) {
        if (!a.integral[static_cast<size_t>(k) - 1])
            return {false, k, a.at(k)};
    }
    return {};
}

namespace {

void check_orbit_counts(const OrbitCounts& orbits) {
    std::set<int> seen;
    for (const OrbitCount& o : orbits) {
        if (o.period < 1) throw std::invalid_argument("orbit period must be >= 1");
        if (!seen.insert(o.period).second)
            throw std::invalid_argument("orbit periods must be distinct in counts form");
    }
}

}  // namespace

FactorExponents exponents_from_orbit_counts(const OrbitCounts& orbits) {
    check_orbit_counts(orbits);
    FactorExponents f;
    f.max_index = 1;
    for (const OrbitCount& o : orbits) {
        f.set(o.period, f.get(o.period) - Rational(o.a));
        f.set(2 * o.period, f.get(2 * o.period) - Rational(o.b));
        f.max_index = std::max(f.max_index, 2 * o.period);
    }
    return f;
}

long long linear_coefficient_of_iterate(const OrbitCounts& orbits, int k) {
    if (k < 1) throw std::invalid_argument("iterate index k must be >= 1");
    check_orbit_counts(orbits);

    // Case split per orbit: only periods dividing k contribute, with weight
    // m*a_m when k/m is odd and m*(a_m + 2 b_m) when k/m is even.
    long long by_cases = 0;
    for (const OrbitCount& o : orbits) {
        if (k % o.period != 0) continue;
        long long weight = (k / o.period) % 2 != 0 ? o.a : o.a + 2 * o.b;
        by_cases += static_cast<long long>(o.period) * weight;
    }

    // Divisor sum over the factor exponents: i_k = -sum_{l|k} l e_l.
    FactorExponents e = exponents_from_orbit_counts(orbits);
    Rational by_divisors;
    for (long l : divisors(k)) by_divisors -= Rational(l) * e.get(static_cast<int>(l));

    if (!(by_divisors == Rational(static_cast<long>(by_cases))))
        throw std::logic_error("linear_coefficient_of_iterate: case split and divisor sum disagree");
    return by_cases;
}

}  // namespace dynzeta
