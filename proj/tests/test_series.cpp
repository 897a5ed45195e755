#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynzeta/series.hpp"
#include "test_support.hpp"

using namespace dynzeta;
using namespace testsupport;

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(Int(6), Int(-4)).str() == "-3/2");
    CHECK(Rational(Int(0), Int(7)).str() == "0");
    CHECK(Rational::parse("-12/8").str() == "-3/2");
    CHECK(Rational::parse("42").str() == "42");
    CHECK(Rational::parse("123456789012345678901234567890").is_integer());
    CHECK(Rational(Int(1), Int(2)) + Rational(Int(1), Int(3)) == Rational(Int(5), Int(6)));
    CHECK_THROWS_AS(Rational::parse("1/0x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("addition follows the min-order quotient rule") {
    // (1+t) + (1-t) = 2
    CHECK(identical(series({"1", "1"}) + series({"1", "-1"}), series({"2", "0"})));
    // 0 + z = z
    TruncatedSeries z = series({"1", "2", "3"});
    CHECK(identical(TruncatedSeries(2) + z, z));
    // (t + t^2) at order 3 plus t^3 truncated to order 2 keeps order 2
    TruncatedSeries a = series({"0", "1", "1", "0"});
    TruncatedSeries b = series({"0", "0", "0"});
    CHECK(identical(a + b, series({"0", "1", "1"})));
}

TEST_CASE("multiplication is the truncated Cauchy product") {
    CHECK(identical(series({"1", "-1"}) * series({"1", "1", "1", "1"}), series({"1", "0"})));
    // (1-t)(1-t^2) at full order, frozen from the convolution oracle
    TruncatedSeries lhs = series({"1", "-1", "0", "0"}) * series({"1", "0", "-1", "0"});
    CHECK(identical(lhs, series({"1", "-1", "-1", "1"})));
    CHECK(identical(lhs, convolve_oracle(series({"1", "-1", "0", "0"}), series({"1", "0", "-1", "0"}))));
    // z * 1 = z
    TruncatedSeries z = series({"5", "1/2", "-7"});
    CHECK(identical(z * TruncatedSeries::one(2), z));
}

TEST_CASE("group inverse in 1 + tQ[[t]]") {
    CHECK(identical(inverse(monic({"1", "-1", "0", "0", "0"})).series(),
                    series({"1", "1", "1", "1", "1"})));
    CHECK(identical(inverse(MonicSeries::one(4)).series(), series({"1", "0", "0", "0", "0"})));
    // 1/(1+t) alternates; checked by multiplying back as well
    MonicSeries alt = inverse(monic({"1", "1", "0", "0"}));
    CHECK(identical(alt.series(), series({"1", "-1", "1", "-1"})));
    CHECK(mul(alt, monic({"1", "1", "0", "0"})) == MonicSeries::one(3));
    CHECK_THROWS_AS(MonicSeries(series({"2", "0"})), std::invalid_argument);
    CHECK_THROWS_AS(MonicSeries(series({"0", "1"})), std::invalid_argument);
}

TEST_CASE("substitution t -> t^k") {
    MonicSeries z = geometric(3);
    CHECK(identical(substitute_tk(z, 2, 6).series(), series({"1", "0", "1", "0", "1", "0", "1"})));
    CHECK(identical(substitute_tk(z, 1, 2).series(), series({"1", "1", "1"})));
    CHECK(identical(substitute_tk(monic({"1", "1"}), 3, 3).series(), series({"1", "0", "0", "1"})));
    CHECK_THROWS_AS(substitute_tk(z, 2, 7), std::invalid_argument);
    CHECK_THROWS_AS(substitute_tk(z, 0, 0), std::invalid_argument);
}

TEST_CASE("binomial factors (1 - t^n)^e") {
    CHECK(identical(binomial_factor(1, -1L, 4).series(), series({"1", "1", "1", "1", "1"})));
    CHECK(identical(binomial_factor(2, 1L, 4).series(), series({"1", "0", "-1", "0", "0"})));
    CHECK(identical(binomial_factor(1, -2L, 3).series(), series({"1", "2", "3", "4"})));
    // cross-check the negative power against repeated multiplication
    MonicSeries g = geometric(3);
    CHECK(binomial_factor(1, -2L, 3) == mul(g, g));
    CHECK_THROWS_AS(binomial_factor(0, 1L, 3), std::invalid_argument);
}

TEST_CASE("binomial factor with rational exponent") {
    MonicSeries half = binomial_factor(2, Rational(Int(1), Int(2)), 4);
    CHECK(identical(half.series(), series({"1", "0", "-1/2", "0", "-1/8"})));
    CHECK(mul(half, half) == binomial_factor(2, 1L, 4));
    // integer exponents agree with the integer-path expansion
    for (long e : {-3L, -1L, 0L, 2L, 5L})
        CHECK(identical(binomial_factor(3, Rational(e), 12).series(),
                        binomial_factor(3, e, 12).series()));
}

TEST_CASE("property: a * inverse(a) = 1 for random monic a") {
    Rng rng(20260808);
    for (int trial = 0; trial < 60; ++trial) {
        int order = static_cast<int>(rng.next_long(0, 32));
        MonicSeries a = rng.next_monic(order, 9, 6);
        CHECK(mul(a, inverse(a)) == MonicSeries::one(order));
    }
}

TEST_CASE("property: substitution is a group homomorphism") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int order = static_cast<int>(rng.next_long(1, 10));
        int k = static_cast<int>(rng.next_long(1, 4));
        MonicSeries a = rng.next_monic(order, 5, 4);
        MonicSeries b = rng.next_monic(order, 5, 4);
        int target = k * order;
        CHECK(substitute_tk(mul(a, b), k, target) ==
              mul(substitute_tk(a, k, target), substitute_tk(b, k, target)));
    }
}

TEST_CASE("property: ring laws at fixed order") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int order = static_cast<int>(rng.next_long(0, 12));
        TruncatedSeries a = rng.next_series(order, 7, 5);
        TruncatedSeries b = rng.next_series(order, 7, 5);
        TruncatedSeries c = rng.next_series(order, 7, 5);
        CHECK(identical(a + b, b + a));
        CHECK(identical(a * b, b * a));
        CHECK(identical((a + b) + c, a + (b + c)));
        CHECK(identical((a * b) * c, a * (b * c)));
        CHECK(identical(a * (b + c), a * b + a * c));
    }
}
