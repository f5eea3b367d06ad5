#include "doctest.h"

#include <random>

#include "qbaker/dyadic.hpp"

using qbaker::BigInt;
using qbaker::Dyadic;

TEST_CASE("dyadic addition") {
    CHECK(Dyadic(1, 1) + Dyadic(1, 2) == Dyadic(3, 2));  // 1/2 + 1/4
    SUBCASE("canonical form at 1") {
        const Dyadic one = Dyadic(1, 1) + Dyadic(1, 1);
        CHECK(one.numerator() == 1);
        CHECK(one.exponent() == 0);
    }
    SUBCASE("canonicalization of 4/8") {
        const Dyadic half = Dyadic(3, 3) + Dyadic(1, 3);
        CHECK(half == Dyadic(1, 1));
        CHECK(half.exponent() == 1);
    }
}

TEST_CASE("dyadic subtraction") {
    CHECK(Dyadic(3, 2) - Dyadic(1, 2) == Dyadic(1, 1));
    CHECK(Dyadic(1, 0) - Dyadic(1, 3) == Dyadic(7, 3));
    CHECK_THROWS_AS((void)(Dyadic(1, 2) - Dyadic(1, 1)), std::domain_error);
}

TEST_CASE("canonical-form closure under arithmetic") {
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<std::uint32_t> exp_dist(0, 80);
    std::uniform_int_distribution<std::uint64_t> num_dist(0, 1ULL << 40);
    for (int i = 0; i < 500; ++i) {
        const Dyadic a(num_dist(gen), exp_dist(gen));
        const Dyadic b(num_dist(gen), exp_dist(gen));
        const Dyadic s = a + b;
        CHECK((s.exponent() == 0 || (s.numerator() & 1) == 1));
        const Dyadic& hi = a < b ? b : a;
        const Dyadic& lo = a < b ? a : b;
        const Dyadic d = hi - lo;
        CHECK((d.exponent() == 0 || (d.numerator() & 1) == 1));
        CHECK(d + lo == hi);
    }
}

TEST_CASE("ordering agrees with float conversion for small exponents") {
    std::mt19937_64 gen(12);
    std::uniform_int_distribution<std::uint32_t> exp_dist(0, 50);
    std::uniform_int_distribution<std::uint64_t> num_dist(0, 1ULL << 50);
    for (int i = 0; i < 500; ++i) {
        const Dyadic a(num_dist(gen), exp_dist(gen));
        const Dyadic b(num_dist(gen), exp_dist(gen));
        if (a < b) {
            CHECK(a.to_double() <= b.to_double());
        } else if (b < a) {
            CHECK(b.to_double() <= a.to_double());
        } else {
            CHECK(a.to_double() == b.to_double());
        }
    }
}

TEST_CASE("to_double handles numerators beyond double range") {
    // value (2^700 + 1) / 2^701, just above 1/2
    const Dyadic big((BigInt(1) << 700) + 1, 701);
    CHECK(big.to_double() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(Dyadic().to_double() == 0.0);
}

TEST_CASE("floor_scaled") {
    CHECK(Dyadic(1, 1).floor_scaled(100) == 50);   // floor(100 * 1/2)
    CHECK(Dyadic(1, 2).floor_scaled(3) == 0);      // floor(3/4)
    CHECK(Dyadic(3, 2).floor_scaled(4) == 3);      // floor(4 * 3/4)
    CHECK(Dyadic(1, 0).floor_scaled(7) == 7);
}

TEST_CASE("serialization") {
    CHECK(Dyadic(5, 3).to_string() == "5/2^3");
    CHECK(Dyadic(1, 0).to_string() == "1/2^0");
    CHECK(Dyadic().to_string() == "0/2^0");
}

TEST_CASE("twice and half") {
    CHECK(Dyadic(3, 3).twice() == Dyadic(3, 2));
    CHECK(Dyadic(3, 0).twice() == Dyadic(6, 0));
    CHECK(Dyadic(3, 2).half() == Dyadic(3, 3));
}
