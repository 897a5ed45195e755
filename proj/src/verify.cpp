#include "dynzeta/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "dynzeta/matrix.hpp"
#include "dynzeta/polynomial.hpp"
#include "dynzeta/spectral.hpp"

namespace dynzeta {

bool VerifyReport::all_pass() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult& p) { return p.pass; });
}

Mutation mutation_from_name(const std::string& name) {
    if (name.empty() || name == "none") return Mutation::None;
    if (name == "mul-top-coeff") return Mutation::MulTopCoeff;
    throw std::invalid_argument("unknown mutation '" + name + "'");
}

namespace {

/// Deterministic draws straight off the engine; std distributions are not
/// pinned down by the standard, so they stay out of the report path.
struct Gen {
    std::mt19937_64 engine;

    long next_long(long lo, long hi) {
        return lo + static_cast<long>(engine() % static_cast<unsigned long long>(hi - lo + 1));
    }

    Rational next_rational(long max_abs_num, long max_den) {
        return Rational(Int(next_long(-max_abs_num, max_abs_num)), Int(next_long(1, max_den)));
    }

    TruncatedSeries next_series(int order, long max_abs_num, long max_den, bool zero_constant) {
        TruncatedSeries s(order);
        for (int k = 0; k <= order; ++k) s.set_coeff(k, next_rational(max_abs_num, max_den));
        if (zero_constant) s.set_coeff(0, Rational(0));
        return s;
    }

    MonicSeries next_monic(int order, long max_abs_num, long max_den) {
        TruncatedSeries s = next_series(order, max_abs_num, max_den, false);
        s.set_coeff(0, Rational(1));
        return MonicSeries(std::move(s));
    }

    MonicSeries next_integer_monic(int order, long max_abs) {
        TruncatedSeries s(order);
        s.set_coeff(0, Rational(1));
        for (int k = 1; k <= order; ++k) s.set_coeff(k, Rational(next_long(-max_abs, max_abs)));
        return MonicSeries(std::move(s));
    }

    std::vector<Rational> next_int_values(int length, long max_abs) {
        std::vector<Rational> v;
        v.reserve(static_cast<size_t>(length));
        for (int k = 0; k < length; ++k) v.emplace_back(next_long(-max_abs, max_abs));
        return v;
    }

    RationalMatrix next_matrix(int rows, int cols, long max_abs) {
        RationalMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = Rational(next_long(-max_abs, max_abs));
        return m;
    }
};

struct Context {
    int order;
    int count;
    Mutation mutation;

    /// Series product as seen by the property runners; the mutation hook
    /// corrupts it for negative-control runs.
    TruncatedSeries product(const TruncatedSeries& a, const TruncatedSeries& b) const {
        TruncatedSeries r = mul(a, b);
        if (mutation == Mutation::MulTopCoeff)
            r.set_coeff(r.order(), r.coeff(r.order()) + Rational(1));
        return r;
    }
};

using PropertyFn = std::function<void(Context&, Gen&, PropertyResult&)>;

void fail(PropertyResult& result, const std::string& counterexample) {
    result.pass = false;
    result.counterexample = counterexample;
}

// ---- series_core ----------------------------------------------------------

void prop_mul_inverse(Context& ctx, Gen& gen, PropertyResult& r) {
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        int order = static_cast<int>(gen.next_long(1, ctx.order));
        MonicSeries a = gen.next_monic(order, 9, 6);
        if (!(ctx.product(a.series(), inverse(a).series()) == TruncatedSeries::one(order)))
            fail(r, "a = " + a.str());
    }
}

void prop_ring_laws(Context& ctx, Gen& gen, PropertyResult& r) {
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        int order = static_cast<int>(gen.next_long(0, std::min(ctx.order, 12)));
        TruncatedSeries a = gen.next_series(order, 7, 5, false);
        TruncatedSeries b = gen.next_series(order, 7, 5, false);
        TruncatedSeries c = gen.next_series(order, 7, 5, false);
        bool ok = identical(add(a, b), add(b, a)) &&
                  identical(ctx.product(a, b), ctx.product(b, a)) &&
                  identical(add(add(a, b), c), add(a, add(b, c))) &&
                  identical(ctx.product(ctx.product(a, b), c), ctx.product(a, ctx.product(b, c)));
        if (!ok) fail(r, "a = " + a.str() + "; b = " + b.str() + "; c = " + c.str());
    }
}

void prop_substitution_homomorphism(Context& ctx, Gen& gen, PropertyResult& r) {
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        int order = static_cast<int>(gen.next_long(1, std::min(ctx.order, 10)));
        int k = static_cast<int>(gen.next_long(1, 4));
        MonicSeries a = gen.next_monic(order, 5, 4);
        MonicSeries b = gen.next_monic(order, 5, 4);
        int target = k * order;
        MonicSeries lhs = substitute_tk(MonicSeries(ctx.product(a.series(), b.series())), k, target);
        MonicSeries rhs = MonicSeries(ctx.product(substitute_tk(a, k, target).series(),
                                                  substitute_tk(b, k, target).series()));
        if (!(lhs == rhs)) fail(r, "a = " + a.str() + "; b = " + b.str() + "; k = " + std::to_string(k));
    }
}

// ---- zeta_algebra ----------------------------------------------------------

void prop_exp_log_roundtrip(Context& ctx, Gen& gen, PropertyResult& r) {
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        int order = static_cast<int>(gen.next_long(1, ctx.order));
        MonicSeries z = gen.next_monic(order, 6, 5);
        TruncatedSeries x = gen.next_series(order, 6, 5, true);
        if (!(exp_series(log_series(z)) == z))
            fail(r, "z = " + z.str());
        else if (!identical(log_series(exp_series(x)), x))
            fail(r, "x = " + x.str());
    }
}

void prop_pow_additivity(Context& ctx, Gen& gen, PropertyResult& r) {
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        int order = static_cast<int>(gen.next_long(1, std::min(ctx.order, 12)));
        MonicSeries z = gen.next_monic(order, 4, 3);
        Rational a = gen.next_rational(5, 3);
        Rational b = gen.next_rational(5, 3);
        if (!(pow_rational(z, a + b) == mul(pow_rational(z, a), pow_rational(z, b))))
            fail(r, "z = " + z.str() + "; a = " + a.str() + "; b = " + b.str());
    }
}

void prop_factorize_roundtrip(Context& ctx, Gen& gen, PropertyResult& r) {
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        int order = static_cast<int>(gen.next_long(1, ctx.order));
        MonicSeries z = t % 2 == 0 ? gen.next_integer_monic(order, 6) : gen.next_monic(order, 6, 5);
        if (!(expand_factors(factorize(z), order) == z)) {
            fail(r, "z = " + z.str());
            return;
        }
        FactorExponents f;
        f.max_index = order;
        for (int n = 1; n <= order; ++n) f.set(n, Rational(gen.next_long(-4, 4)));
        if (!(factorize(expand_factors(f, order)).exponents == f.exponents))
            fail(r, "exponent map roundtrip at order " + std::to_string(order));
    }
}

void prop_integrality_iff_integer_exponents(Context& ctx, Gen& gen, PropertyResult& r) {
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        int order = static_cast<int>(gen.next_long(1, ctx.order));
        MonicSeries z = t % 2 == 0 ? gen.next_integer_monic(order, 6) : gen.next_monic(order, 6, 5);
        bool exponents_integral = true;
        for (const auto& [n, e] : factorize(z).exponents)
            if (!e.is_integer()) exponents_integral = false;
        if (exponents_integral != is_integral(z).integral)
            fail(r, "z = " + z.str());
    }
}

void prop_indices_zeta_roundtrip(Context& ctx, Gen& gen, PropertyResult& r) {
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        int n = static_cast<int>(gen.next_long(1, ctx.order));
        IndexSequence i = IndexSequence(gen.next_int_values(n, 9));
        MonicSeries z = gen.next_monic(n, 5, 4);
        if (!(indices_from_zeta(zeta_from_indices(i)) == i))
            fail(r, "i has length " + std::to_string(n));
        else if (!(zeta_from_indices(indices_from_zeta(z)) == z))
            fail(r, "z = " + z.str());
    }
}

// ---- sequence_transforms ---------------------------------------------------

void prop_sp_oracle(Context& ctx, Gen& gen, PropertyResult& r) {
    int depth = std::min({ctx.order, 12, kCompositionCap});
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        IndexSequence i = IndexSequence(gen.next_int_values(depth, 9));
        SPIndexSequence s = sp_from_indices_recurrence(i);
        for (int n = 1; n <= depth && r.pass; ++n) {
            if (!(sp_from_indices_compositions(i, n) == s.at(n)))
                fail(r, "n = " + std::to_string(n));
        }
    }
}

void prop_indices_oracle(Context& ctx, Gen& gen, PropertyResult& r) {
    int depth = std::min({ctx.order, 12, kCompositionCap});
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        SPIndexSequence s = SPIndexSequence(gen.next_int_values(depth, 9));
        IndexSequence i = indices_from_sp_recurrence(s);
        for (int n = 1; n <= depth && r.pass; ++n) {
            if (!(indices_from_sp_compositions(s, n) == i.at(n)))
                fail(r, "n = " + std::to_string(n));
        }
    }
}

void prop_sp_roundtrip(Context& ctx, Gen& gen, PropertyResult& r) {
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        int n = static_cast<int>(gen.next_long(1, ctx.order));
        IndexSequence i = IndexSequence(gen.next_int_values(n, 20));
        if (!(indices_from_sp_recurrence(sp_from_indices_recurrence(i)) == i))
            fail(r, "length " + std::to_string(n));
    }
}

void prop_dold_reconstruction(Context& ctx, Gen& gen, PropertyResult& r) {
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        int n = static_cast<int>(gen.next_long(1, ctx.order));
        IndexSequence i = IndexSequence(gen.next_int_values(n, 50));
        if (!(indices_from_dold(dold_coefficients(i)) == i))
            fail(r, "length " + std::to_string(n));
    }
}

void prop_orbit_divisor_sum(Context& ctx, Gen& gen, PropertyResult& r) {
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        OrbitCounts orbits;
        int periods = static_cast<int>(gen.next_long(1, 4));
        for (int p = 1; p <= periods; ++p)
            orbits.push_back({p, gen.next_long(-3, 3), gen.next_long(-3, 3)});
        FactorExponents e = exponents_from_orbit_counts(orbits);
        int order = std::min(ctx.order, 2 * periods + 4);
        IndexSequence i = indices_from_zeta(expand_factors(e, order));
        for (int n = 1; n <= order && r.pass; ++n) {
            Rational divisor_sum;
            for (long l : divisors(n)) divisor_sum -= Rational(l) * e.get(static_cast<int>(l));
            if (!(i.at(n) == divisor_sum) ||
                !(i.at(n) == Rational(static_cast<long>(linear_coefficient_of_iterate(orbits, n)))))
                fail(r, "n = " + std::to_string(n));
        }
    }
}

// ---- spectral_models -------------------------------------------------------

/// Draws integer matrices until one is admissible to the given order.
bool next_admissible_matrix(Gen& gen, int max_dim, long max_abs, int order,
                            RationalMatrix& out) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        int d = static_cast<int>(gen.next_long(1, max_dim));
        RationalMatrix a = gen.next_matrix(d, d, max_abs);
        if (admissibility_order(a, order) == order) {
            out = a;
            return true;
        }
    }
    return false;
}

void prop_two_path_zeta(Context& ctx, Gen& gen, PropertyResult& r) {
    int order = std::min(ctx.order, 16);
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        RationalMatrix a(1, 1);
        if (!next_admissible_matrix(gen, 4, 5, order, a)) {
            fail(r, "could not draw an admissible matrix");
            return;
        }
        IndexSequence idx = index_sequence_of_matrix(a, order);
        if (!(zeta_from_indices(idx) == linear_zeta(spectral_class(a), order)))
            fail(r, "char poly " + char_poly(a).str());
    }
}

void prop_dold_on_spectra(Context& ctx, Gen& gen, PropertyResult& r) {
    int order = std::min(ctx.order, 16);
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        RationalMatrix a(1, 1);
        if (!next_admissible_matrix(gen, 4, 5, order, a)) {
            fail(r, "could not draw an admissible matrix");
            return;
        }
        IndexSequence idx = index_sequence_of_matrix(a, order);
        DoldVerdict v = dold_check(idx);
        if (!v.pass)
            fail(r, "char poly " + char_poly(a).str() + ", first k = " + std::to_string(v.first_k));
    }
}

void prop_orbit_iterate_coherence(Context& ctx, Gen& gen, PropertyResult& r) {
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        int m = static_cast<int>(gen.next_long(1, 8));
        int k = static_cast<int>(gen.next_long(1, 8));
        long a = gen.next_long(-3, 3);
        long b = gen.next_long(-3, 3);
        MonicSeries z = orbit_zeta_iterate(m, a, b, k, 4);
        Rational linear = indices_from_zeta(z).at(1);
        if (!(linear == Rational(static_cast<long>(
                  linear_coefficient_of_iterate({{m, a, b}}, k)))))
            fail(r, "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                    " a=" + std::to_string(a) + " b=" + std::to_string(b));
    }
}

void prop_single_orbit_axiom(Context& ctx, Gen& gen, PropertyResult& r) {
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        int m = static_cast<int>(gen.next_long(1, 6));
        int sm = static_cast<int>(gen.next_long(0, 1));
        int sp = static_cast<int>(gen.next_long(0, 1));
        long a = sp == 0 ? 1 : -1;
        long b = sm == 0 ? 0 : (sp == 0 ? -1 : 1);
        int component_order = std::max(1, std::min(ctx.order, 24) / m);
        MonicSeries via_axiom = iterate_zeta_axiom(linear_zeta(SpectralClass{sm, sp}, component_order),
                                                   m, component_order * m);
        if (!(orbit_zeta_iterate(m, a, b, 1, component_order * m) == via_axiom))
            fail(r, "m=" + std::to_string(m) + " class=(" + std::to_string(sm) + "," +
                    std::to_string(sp) + ")");
    }
}

void prop_macdonald(Context& ctx, Gen& gen, PropertyResult& r) {
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        long chi = gen.next_long(-6, 6);
        int order = std::min(ctx.order, 24);
        MonicSeries m = macdonald_series(chi, order);
        if (!(m == zeta_from_indices(IndexSequence::constant(Rational(chi), order)))) {
            fail(r, "chi = " + std::to_string(chi));
            return;
        }
        if (chi > 0) {
            for (int n = 0; n <= order && r.pass; ++n) {
                if (!(m.coeff(n) == Rational(binomial(Int(chi + n - 1), static_cast<unsigned long>(n)))))
                    fail(r, "chi = " + std::to_string(chi) + ", n = " + std::to_string(n));
            }
        }
    }
}

void prop_lecalvez(Context& ctx, Gen& gen, PropertyResult& r) {
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        int q = static_cast<int>(gen.next_long(1, 6));
        int rr = static_cast<int>(gen.next_long(-2, 4));
        int order = std::max(ctx.order, q * std::max(rr, 1) + 2);
        MonicSeries z = lecalvez_zeta(q, rr, order);
        if (rr > 0) {
            for (int n = rr * q; n <= order && r.pass; ++n)
                if (!z.coeff(n).is_zero())
                    fail(r, "q=" + std::to_string(q) + " r=" + std::to_string(rr) +
                            " n=" + std::to_string(n));
            if (r.pass && rr * q >= 2 && z.coeff(rr * q - 1).is_zero())
                fail(r, "degree drop at q=" + std::to_string(q) + " r=" + std::to_string(rr));
        } else if (z.coeff(order).is_zero()) {
            fail(r, "polynomial tail for non-positive r=" + std::to_string(rr));
        }
    }
}

void prop_charpoly_ab_ba(Context& ctx, Gen& gen, PropertyResult& r) {
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        int d = static_cast<int>(gen.next_long(1, 3));
        int dp = static_cast<int>(gen.next_long(1, 3));
        RationalMatrix a = gen.next_matrix(d, dp, 4);
        RationalMatrix b = gen.next_matrix(dp, d, 4);
        Polynomial pab = char_poly(mul(a, b));
        Polynomial pba = char_poly(mul(b, a));
        bool ok = d <= dp ? mul(pab, Polynomial::power(dp - d)) == pba
                          : pab == mul(pba, Polynomial::power(d - dp));
        if (!ok) fail(r, "shapes " + std::to_string(d) + "x" + std::to_string(dp));
    }
}

void prop_commutativity(Context& ctx, Gen& gen, PropertyResult& r) {
    int order = std::min(ctx.order, 12);
    for (int t = 0; t < ctx.count && r.pass; ++t, ++r.instances) {
        bool found = false;
        for (int attempt = 0; attempt < 200 && !found; ++attempt) {
            int d = static_cast<int>(gen.next_long(1, 3));
            int dp = static_cast<int>(gen.next_long(1, 3));
            RationalMatrix a = gen.next_matrix(d, dp, 3);
            RationalMatrix b = gen.next_matrix(dp, d, 3);
            if (admissibility_order(mul(a, b), order) < order) continue;
            found = true;
            if (!commutativity_witness(a, b, order).pass)
                fail(r, "shapes " + std::to_string(d) + "x" + std::to_string(dp));
        }
        if (!found) {
            fail(r, "could not draw an admissible rectangular pair");
            return;
        }
    }
}

}  // namespace

VerifyReport run_verify(int order, unsigned long seed, int count, Mutation mutation) {
    if (order < 1) throw std::invalid_argument("verify: order must be >= 1");
    if (count < 1) throw std::invalid_argument("verify: count must be >= 1");

    const std::vector<std::pair<std::string, PropertyFn>> properties = {
        {"series-mul-inverse", prop_mul_inverse},
        {"series-ring-laws", prop_ring_laws},
        {"substitution-homomorphism", prop_substitution_homomorphism},
        {"exp-log-roundtrip", prop_exp_log_roundtrip},
        {"pow-additivity", prop_pow_additivity},
        {"factorize-expand-roundtrip", prop_factorize_roundtrip},
        {"integrality-iff-integer-exponents", prop_integrality_iff_integer_exponents},
        {"indices-zeta-roundtrip", prop_indices_zeta_roundtrip},
        {"sp-recurrence-vs-compositions", prop_sp_oracle},
        {"indices-recurrence-vs-compositions", prop_indices_oracle},
        {"sp-roundtrip-identity", prop_sp_roundtrip},
        {"dold-reconstruction", prop_dold_reconstruction},
        {"orbit-exponent-divisor-sum", prop_orbit_divisor_sum},
        {"two-path-zeta-agreement", prop_two_path_zeta},
        {"dold-on-matrix-spectra", prop_dold_on_spectra},
        {"orbit-iterate-linear-coefficient", prop_orbit_iterate_coherence},
        {"single-orbit-iteration-axiom", prop_single_orbit_axiom},
        {"macdonald-constant-indices", prop_macdonald},
        {"lecalvez-polynomiality", prop_lecalvez},
        {"charpoly-ab-ba-power-factor", prop_charpoly_ab_ba},
        {"commutativity-linear-pairs", prop_commutativity},
    };

    VerifyReport report;
    report.order = order;
    report.seed = seed;
    report.count = count;
    report.mutation = mutation == Mutation::None ? "none" : "mul-top-coeff";

    unsigned long long index = 0;
    for (const auto& [name, fn] : properties) {
        PropertyResult result;
        result.name = name;
        Context ctx{order, count, mutation};
        Gen gen{std::mt19937_64(static_cast<unsigned long long>(seed) * 1000003ULL + index)};
        fn(ctx, gen, result);
        report.properties.push_back(std::move(result));
        ++index;
    }
    return report;
}

json verify_report_to_json(const VerifyReport& report) {
    json properties = json::array();
    for (const PropertyResult& p : report.properties) {
        properties.push_back(json{
            {"name", p.name},
            {"instances", p.instances},
            {"pass", p.pass},
            {"counterexample", p.pass ? json(nullptr) : json(p.counterexample)},
        });
    }
    return json{
        {"order", report.order},
        {"seed", report.seed},
        {"count", report.count},
        {"mutation", report.mutation},
        {"pass", report.all_pass()},
        {"properties", std::move(properties)},
    };
}

}  // namespace dynzeta
