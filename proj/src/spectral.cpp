#include "dynzeta/spectral.hpp"

#include <numeric>
#include <stdexcept>

namespace dynzeta {

int real_root_count(const Polynomial& p, RootInterval interval) {
    if (p.is_zero()) throw std::invalid_argument("real_root_count: zero polynomial");
    if (p.eval(Rational(1)).is_zero())
        throw NonAdmissibleError("spectrum contains the eigenvalue 1", 1);
    if (p.eval(Rational(-1)).is_zero())
        throw NonAdmissibleError("spectrum contains the eigenvalue -1", 2);

    int count = 0;
    for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
        int distinct = interval == RootInterval::BelowMinusOne
            ? sturm_distinct_roots(factor, Endpoint::neg_infinity(), Endpoint::at(Rational(-1)))
            : sturm_distinct_roots(factor, Endpoint::at(Rational(1)), Endpoint::pos_infinity());
        count += multiplicity * distinct;
    }
    return count;
}

SpectralClass spectral_class(const Polynomial& char_polynomial) {
    return SpectralClass{
        real_root_count(char_polynomial, RootInterval::BelowMinusOne) % 2,
        real_root_count(char_polynomial, RootInterval::AboveOne) % 2,
    };
}

SpectralClass spectral_class(const RationalMatrix& a) {
    return spectral_class(char_poly(a));
}

int admissibility_order(const Polynomial& char_polynomial, int n_max) {
    if (n_max < 1) throw std::invalid_argument("admissibility_order: n_max must be >= 1");
    for (int d = 1; d <= n_max; ++d) {
        if (gcd(char_polynomial, cyclotomic(d)).degree() > 0) return d - 1;
    }
    return n_max;
}

int admissibility_order(const RationalMatrix& a, int n_max) {
    return admissibility_order(char_poly(a), n_max);
}

MonicSeries linear_zeta(const SpectralClass& c, int order) {
    if ((c.sigma_minus & ~1) != 0 || (c.sigma_plus & ~1) != 0)
        throw std::invalid_argument("spectral class entries must be 0 or 1");
    const MonicSeries one_minus_t = binomial_factor(1, 1L, order);
    if (c.sigma_minus == 0)
        return c.sigma_plus == 0 ? inverse(one_minus_t) : one_minus_t;
    // 1 + t = (1-t)^(-1) (1-t^2)
    MonicSeries one_plus_t = mul(inverse(one_minus_t), binomial_factor(2, 1L, order));
    return c.sigma_plus == 0 ? one_plus_t : inverse(one_plus_t);
}

int local_index(const RationalMatrix& a, int k) {
    if (k < 1) throw std::invalid_argument("iterate index k must be >= 1");
    int d = a.dimension();
    Rational det = determinant(RationalMatrix::identity(d) - matrix_power(a, k));
    if (det.is_zero())
        throw NonAdmissibleError("I - A^k is singular: a k-th root of unity is an eigenvalue", k);
    return det.sign();
}

IndexSequence index_sequence_of_matrix(const RationalMatrix& a, int n) {
    int admissible_to = admissibility_order(a, n);
    if (admissible_to < n)
        throw NonAdmissibleError("matrix admits a root-of-unity eigenvalue of order " +
                                     std::to_string(admissible_to + 1),
                                 admissible_to + 1);
    int d = a.dimension();
    const RationalMatrix identity = RationalMatrix::identity(d);
    RationalMatrix power = identity;
    std::vector<Rational> values;
    values.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        power = mul(power, a);
        Rational det = determinant(identity - power);
        if (det.is_zero())
            throw NonAdmissibleError("I - A^k is singular at k = " + std::to_string(k), k);
        values.emplace_back(det.sign());
    }
    return IndexSequence(std::move(values));
}

OrbitCounts OrbitTable::to_counts() const {
    OrbitCounts merged = counts;
    auto slot = [&merged](int period) -> OrbitCount& {
        for (OrbitCount& o : merged)
            if (o.period == period) return o;
        merged.push_back(OrbitCount{period, 0, 0});
        return merged.back();
    };
    for (const OrbitLinearization& lin : linearizations) {
        if (lin.period < 1) throw std::invalid_argument("orbit period must be >= 1");
        SpectralClass c = spectral_class(lin.matrix);
        OrbitCount& o = slot(lin.period);
        // a_m counts classes (0,0) and (1,0) positively, (0,1) and (1,1)
        // negatively; b_m is -1 per (1,0) orbit and +1 per (1,1) orbit.
        o.a += c.sigma_plus == 0 ? 1 : -1;
        if (c.sigma_minus == 1) o.b += c.sigma_plus == 0 ? -1 : 1;
    }
    return merged;
}

MonicSeries orbit_zeta(const OrbitTable& orbits, int order) {
    MonicSeries z = MonicSeries::one(order);
    for (const OrbitCount& o : orbits.to_counts()) {
        z = mul(z, binomial_factor(o.period, -o.a, order));
        z = mul(z, binomial_factor(2 * o.period, -o.b, order));
    }
    return z;
}

MonicSeries orbit_zeta_iterate(int m, long a, long b, int k, int order) {
    if (m < 1 || k < 1) throw std::invalid_argument("orbit period and iterate index must be >= 1");
    int d = std::gcd(k, m);
    if ((k / d) % 2 != 0) {
        return mul(binomial_factor(m / d, -d * a, order),
                   binomial_factor(2 * (m / d), -d * b, order));
    }
    return binomial_factor(m / d, -d * (a + 2 * b), order);
}

MonicSeries iterate_zeta_axiom(const MonicSeries& zeta_on_component, int k, int target_order) {
    return substitute_tk(zeta_on_component, k, target_order);
}

MonicSeries multiplicative_assemble(const std::vector<MonicSeries>& parts, int order) {
    MonicSeries z = MonicSeries::one(order);
    for (const MonicSeries& part : parts) z = mul(z, part);
    return z;
}

MonicSeries macdonald_series(long chi, int order) {
    return binomial_factor(1, -chi, order);
}

MonicSeries lecalvez_zeta(int q, int r, int order) {
    if (q < 1) throw std::invalid_argument("lecalvez_zeta: q must be >= 1");
    return mul(binomial_factor(1, -1L, order), binomial_factor(q, static_cast<long>(r), order));
}

CommutativityReport commutativity_witness(const RationalMatrix& a, const RationalMatrix& b,
                                          int order) {
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw std::invalid_argument("commutativity_witness: shapes must be d x d' and d' x d");
    RationalMatrix ab = mul(a, b);
    RationalMatrix ba = mul(b, a);
    IndexSequence indices_ab = index_sequence_of_matrix(ab, order);
    IndexSequence indices_ba = index_sequence_of_matrix(ba, order);
    MonicSeries zeta_ab = zeta_from_indices(indices_ab);
    MonicSeries zeta_ba = zeta_from_indices(indices_ba);
    bool pass = indices_ab == indices_ba && zeta_ab == zeta_ba;
    return CommutativityReport{pass, std::move(indices_ab), std::move(indices_ba),
                               std::move(zeta_ab), std::move(zeta_ba)};
}

}  // namespace dynzeta
