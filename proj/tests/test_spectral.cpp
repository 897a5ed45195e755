#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynzeta/spectral.hpp"
#include "test_support.hpp"

using namespace dynzeta;
using namespace testsupport;

namespace {

RationalMatrix from_longs(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows[0].size());
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Rational(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return m;
}

RationalMatrix diag(const std::vector<long>& entries) {
    int d = static_cast<int>(entries.size());
    RationalMatrix m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = Rational(entries[static_cast<size_t>(i)]);
    return m;
}

Polynomial poly(const std::vector<std::string>& coeffs) {
    std::vector<Rational> c;
    for (const std::string& s : coeffs) c.push_back(Rational::parse(s));
    return Polynomial(std::move(c));
}

RationalMatrix random_matrix(Rng& rng, int rows, int cols, long max_abs) {
    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Rational(rng.next_long(-max_abs, max_abs));
    return m;
}

}  // namespace

TEST_CASE("characteristic polynomials") {
    CHECK(char_poly(diag({2, -2})) == poly({"-4", "0", "1"}));
    CHECK(char_poly(from_longs({{0, -1}, {1, 0}})) == poly({"1", "0", "1"}));
    CHECK(char_poly(from_longs({{1, 2}, {3, 4}})) == poly({"-2", "-5", "1"}));
    // det(A) = (-1)^d * constant coefficient
    RationalMatrix a = from_longs({{2, 1, 0}, {-1, 3, 2}, {0, 5, -2}});
    CHECK(determinant(a) == -char_poly(a).coeff(0));
}

TEST_CASE("determinant by fraction-free elimination") {
    CHECK(determinant(diag({3, 5})) == Rational(15));
    CHECK(determinant(from_longs({{1, 2}, {2, 4}})) == Rational(0));
    RationalMatrix half(2, 2);
    half.at(0, 0) = Rational(Int(1), Int(2));
    half.at(1, 1) = Rational(Int(1), Int(3));
    half.at(0, 1) = Rational(Int(1), Int(6));
    half.at(1, 0) = Rational(1);
    CHECK(determinant(half) == Rational(Int(1), Int(6)) - Rational(Int(1), Int(6)));
    // singular leading pivot forces a row swap
    CHECK(determinant(from_longs({{0, 1}, {1, 0}})) == Rational(-1));
}

TEST_CASE("property: determinant matches the characteristic polynomial") {
    Rng rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        int d = static_cast<int>(rng.next_long(1, 4));
        RationalMatrix a = random_matrix(rng, d, d, 5);
        Rational det = determinant(a);
        Rational from_char = char_poly(a).coeff(0);
        CHECK(det == (d % 2 == 0 ? from_char : -from_char));
    }
}

TEST_CASE("real root counting with multiplicity") {
    CHECK(real_root_count(poly({"-4", "0", "1"}), RootInterval::AboveOne) == 1);
    CHECK(real_root_count(poly({"-4", "0", "1"}), RootInterval::BelowMinusOne) == 1);
    CHECK(real_root_count(poly({"1", "0", "1"}), RootInterval::AboveOne) == 0);
    CHECK(real_root_count(poly({"1", "0", "1"}), RootInterval::BelowMinusOne) == 0);
    // (x-2)^2 counts twice
    CHECK(real_root_count(poly({"4", "-4", "1"}), RootInterval::AboveOne) == 2);
    // (x-2)^2 (x-3): mixed multiplicities add up
    Polynomial mixed = mul(mul(poly({"-2", "1"}), poly({"-2", "1"})), poly({"-3", "1"}));
    CHECK(real_root_count(mixed, RootInterval::AboveOne) == 3);
    CHECK(real_root_count(mixed, RootInterval::BelowMinusOne) == 0);
    // (x+2)^3
    Polynomial cube = mul(mul(poly({"2", "1"}), poly({"2", "1"})), poly({"2", "1"}));
    CHECK(real_root_count(cube, RootInterval::BelowMinusOne) == 3);
    CHECK(spectral_class(cube) == SpectralClass{1, 0});
    CHECK_THROWS_AS(real_root_count(poly({"-1", "1"}), RootInterval::AboveOne), NonAdmissibleError);
    CHECK_THROWS_AS(real_root_count(poly({"1", "1"}), RootInterval::BelowMinusOne), NonAdmissibleError);
}

TEST_CASE("spectral classes") {
    CHECK(spectral_class(diag({2})) == SpectralClass{0, 1});
    CHECK(spectral_class(diag({-2, 2})) == SpectralClass{1, 1});
    CHECK(spectral_class(from_longs({{0, 0}, {0, 0}})) == SpectralClass{0, 0});
    CHECK(spectral_class(diag({-2})) == SpectralClass{1, 0});
    // parities: two eigenvalues above 1 cancel mod 2
    CHECK(spectral_class(diag({2, 3})) == SpectralClass{0, 0});
}

TEST_CASE("admissibility orders") {
    CHECK(admissibility_order(from_longs({{0, -1}, {1, 0}}), 10) == 3);
    CHECK(admissibility_order(diag({2}), 10) == 10);
    CHECK(admissibility_order(diag({-1}), 10) == 1);
    CHECK(admissibility_order(diag({1}), 10) == 0);
    // sixth root of unity: x^2 - x + 1
    RationalMatrix sixth = from_longs({{1, -1}, {1, 0}});
    CHECK(char_poly(sixth) == poly({"1", "-1", "1"}));
    CHECK(admissibility_order(sixth, 10) == 5);
}

TEST_CASE("closed-form zeta of a linear map") {
    CHECK(linear_zeta(SpectralClass{0, 0}, 5) == geometric(5));
    CHECK(identical(linear_zeta(SpectralClass{0, 1}, 3).series(), series({"1", "-1", "0", "0"})));
    CHECK(identical(linear_zeta(SpectralClass{1, 0}, 3).series(), series({"1", "1", "0", "0"})));
    CHECK(identical(linear_zeta(SpectralClass{1, 1}, 4).series(),
                    series({"1", "-1", "1", "-1", "1"})));
}

TEST_CASE("local fixed point indices") {
    CHECK(local_index(diag({2}), 1) == -1);
    CHECK(local_index(diag({-2}), 1) == 1);
    CHECK(local_index(diag({-2}), 2) == -1);
    CHECK(local_index(from_longs({{0, 0}, {0, 0}}), 7) == 1);
    CHECK_THROWS_AS(local_index(diag({1}), 1), NonAdmissibleError);
    CHECK_THROWS_AS(local_index(diag({-1}), 2), NonAdmissibleError);
}

TEST_CASE("index sequences of matrices") {
    CHECK(index_sequence_of_matrix(diag({2}), 6) == IndexSequence::constant(Rational(-1), 6));
    CHECK(index_sequence_of_matrix(from_longs({{0, 0}, {0, 0}}), 5) ==
          IndexSequence::constant(Rational(1), 5));
    IndexSequence alternating = index_sequence_of_matrix(diag({-2, 2}), 8);
    CHECK(alternating == indices_from_zeta(inverse(monic({"1", "1", "0", "0", "0", "0", "0", "0", "0"}))));

    try {
        index_sequence_of_matrix(from_longs({{0, -1}, {1, 0}}), 8);
        FAIL("expected NonAdmissibleError");
    } catch (const NonAdmissibleError& e) {
        CHECK(e.failing_order() == 4);
    }
}

TEST_CASE("property: both computation paths give the same zeta function") {
    Rng rng(1618);
    int accepted = 0;
    int attempts = 0;
    while (accepted < 40 && attempts < 4000) {
        ++attempts;
        int d = static_cast<int>(rng.next_long(1, 4));
        RationalMatrix a = random_matrix(rng, d, d, 5);
        if (admissibility_order(a, 12) < 12) continue;
        ++accepted;
        IndexSequence idx = index_sequence_of_matrix(a, 12);
        CHECK(zeta_from_indices(idx) == linear_zeta(spectral_class(a), 12));
        CHECK(dold_check(idx).pass);
    }
    CHECK(accepted == 40);
}

TEST_CASE("orbit tables to zeta functions") {
    CHECK(orbit_zeta(OrbitTable{{{1, 1, 0}}, {}}, 6) == geometric(6));
    CHECK(identical(orbit_zeta(OrbitTable{{{2, 1, 0}}, {}}, 5).series(),
                    series({"1", "0", "1", "0", "1", "0"})));
    CHECK(orbit_zeta(OrbitTable{}, 4) == MonicSeries::one(4));
    // orbit_zeta agrees with the factor-exponent expansion
    OrbitCounts counts = {{1, 2, -1}, {2, 0, 1}, {3, -1, 0}};
    CHECK(orbit_zeta(OrbitTable{counts, {}}, 12) ==
          expand_factors(exponents_from_orbit_counts(counts), 12));
}

TEST_CASE("orbit linearizations are classified into counts") {
    OrbitTable table;
    table.linearizations.push_back({1, diag({-2})});  // class (1,0): a += 1, b -= 1
    OrbitCounts counts = table.to_counts();
    REQUIRE(counts.size() == 1);
    CHECK(counts[0].period == 1);
    CHECK(counts[0].a == 1);
    CHECK(counts[0].b == -1);
    CHECK(identical(orbit_zeta(table, 3).series(), series({"1", "1", "0", "0"})));

    // a 2-periodic orbit whose return map contracts: class (0,0)
    OrbitTable contracting;
    contracting.linearizations.push_back({2, from_longs({{0, 0}, {0, 0}})});
    CHECK(identical(orbit_zeta(contracting, 5).series(), series({"1", "0", "1", "0", "1", "0"})));

    // counts and linearizations merge on the same period
    OrbitTable mixed;
    mixed.counts = {{1, 1, 0}};
    mixed.linearizations.push_back({1, diag({2})});  // class (0,1): a -= 1
    OrbitCounts merged = mixed.to_counts();
    REQUIRE(merged.size() == 1);
    CHECK(merged[0].a == 0);
    CHECK(merged[0].b == 0);
}

TEST_CASE("zeta of one orbit under iteration") {
    CHECK(orbit_zeta_iterate(2, 1, 0, 2, 4) == binomial_factor(1, -2L, 4));
    CHECK(orbit_zeta_iterate(1, 1, 0, 1, 5) == geometric(5));
    CHECK(identical(orbit_zeta_iterate(3, 1, 0, 1, 6).series(),
                    series({"1", "0", "0", "1", "0", "0", "1"})));
}

TEST_CASE("iteration axiom wrapper") {
    CHECK(identical(iterate_zeta_axiom(geometric(3), 2, 6).series(),
                    series({"1", "0", "1", "0", "1", "0", "1"})));
    MonicSeries z = monic({"1", "2", "3"});
    CHECK(iterate_zeta_axiom(z, 1, 2) == z);
    CHECK(identical(iterate_zeta_axiom(monic({"1", "1"}), 3, 3).series(),
                    series({"1", "0", "0", "1"})));
}

TEST_CASE("multiplicative assembly") {
    CHECK(multiplicative_assemble({geometric(5), linear_zeta(SpectralClass{0, 1}, 5)}, 5) ==
          MonicSeries::one(5));
    CHECK(multiplicative_assemble({linear_zeta(SpectralClass{1, 0}, 5),
                                   linear_zeta(SpectralClass{1, 1}, 5)}, 5) == MonicSeries::one(5));
    CHECK(multiplicative_assemble({}, 4) == MonicSeries::one(4));
}

TEST_CASE("property: a single orbit factors through the iteration axiom") {
    // zeta of one period-m orbit of a given class equals the class zeta in t^m
    Rng rng(9000);
    for (int trial = 0; trial < 20; ++trial) {
        int m = static_cast<int>(rng.next_long(1, 5));
        int sm = static_cast<int>(rng.next_long(0, 1));
        int sp = static_cast<int>(rng.next_long(0, 1));
        long a = sp == 0 ? 1 : -1;
        long b = sm == 0 ? 0 : (sp == 0 ? -1 : 1);
        int order = 4 * m;
        MonicSeries direct = orbit_zeta_iterate(m, a, b, 1, order);
        MonicSeries via_axiom = iterate_zeta_axiom(linear_zeta(SpectralClass{sm, sp}, 4), m, order);
        CHECK(direct == via_axiom);
    }
}

TEST_CASE("Macdonald series") {
    CHECK(identical(macdonald_series(2, 4).series(), series({"1", "2", "3", "4", "5"})));
    CHECK(macdonald_series(0, 5) == MonicSeries::one(5));
    CHECK(identical(macdonald_series(-2, 4).series(), series({"1", "-2", "1", "0", "0"})));
    for (long chi = -3; chi <= 5; ++chi)
        CHECK(macdonald_series(chi, 16) ==
              zeta_from_indices(IndexSequence::constant(Rational(chi), 16)));
    for (int n = 0; n <= 12; ++n)
        CHECK(macdonald_series(3, 12).coeff(n) == Rational(binomial(Int(3 + n - 1), static_cast<unsigned long>(n))));
}

TEST_CASE("Le Calvez local zeta functions") {
    CHECK(identical(lecalvez_zeta(3, 1, 6).series(),
                    series({"1", "1", "1", "0", "0", "0", "0"})));
    CHECK(lecalvez_zeta(1, 1, 5) == MonicSeries::one(5));
    CHECK(identical(lecalvez_zeta(2, 2, 5).series(), series({"1", "1", "-1", "-1", "0", "0"})));
    // positive r: polynomial of degree rq - 1
    for (int q = 1; q <= 6; ++q) {
        for (int r = 1; r <= 4; ++r) {
            MonicSeries z = lecalvez_zeta(q, r, 32);
            for (int n = r * q; n <= 32; ++n) CHECK(z.coeff(n).is_zero());
            if (r * q - 1 <= 32 && r * q >= 2) CHECK_FALSE(z.coeff(r * q - 1).is_zero());
        }
    }
    // r <= 0: never a polynomial, the tail stays nonzero
    for (int r = 0; r >= -3; --r) CHECK_FALSE(lecalvez_zeta(4, r, 24).coeff(24).is_zero());
}

TEST_CASE("commutativity of products") {
    CommutativityReport r1 = commutativity_witness(from_longs({{2, 0}}), from_longs({{1}, {0}}), 8);
    CHECK(r1.pass);
    CHECK(r1.zeta_ab == linear_zeta(SpectralClass{0, 1}, 8));
    CHECK(identical(r1.zeta_ab.series().truncated(1), series({"1", "-1"})));

    CommutativityReport r2 = commutativity_witness(from_longs({{0}}), from_longs({{0}}), 6);
    CHECK(r2.pass);
    CHECK(r2.zeta_ab == geometric(6));

    CHECK_THROWS_AS(commutativity_witness(from_longs({{1, 0}}), from_longs({{1, 0}}), 4),
                    std::invalid_argument);
}

TEST_CASE("property: char polys of AB and BA differ by a power of x") {
    Rng rng(112358);
    for (int trial = 0; trial < 40; ++trial) {
        int d = static_cast<int>(rng.next_long(1, 3));
        int dp = static_cast<int>(rng.next_long(1, 3));
        RationalMatrix a = random_matrix(rng, d, dp, 4);
        RationalMatrix b = random_matrix(rng, dp, d, 4);
        Polynomial pab = char_poly(mul(a, b));
        Polynomial pba = char_poly(mul(b, a));
        if (d <= dp)
            CHECK(mul(pab, Polynomial::power(dp - d)) == pba);
        else
            CHECK(pab == mul(pba, Polynomial::power(d - dp)));
    }
}

TEST_CASE("property: admissible rectangular pairs always pass the witness") {
    Rng rng(510510);
    int accepted = 0;
    int attempts = 0;
    while (accepted < 25 && attempts < 4000) {
        ++attempts;
        int d = static_cast<int>(rng.next_long(1, 3));
        int dp = static_cast<int>(rng.next_long(1, 3));
        RationalMatrix a = random_matrix(rng, d, dp, 3);
        RationalMatrix b = random_matrix(rng, dp, d, 3);
        if (admissibility_order(mul(a, b), 10) < 10) continue;
        ++accepted;
        CHECK(commutativity_witness(a, b, 10).pass);
    }
    CHECK(accepted == 25);
}
