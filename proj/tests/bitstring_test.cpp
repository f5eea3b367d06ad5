#include "doctest.h"

#include <set>

#include "qbaker/bitstring.hpp"

using qbaker::BigInt;
using qbaker::BitString;
using qbaker::Dyadic;
using qbaker::RandomBitSource;

TEST_CASE("construction and parsing") {
    const BitString s = BitString::parse("0101");
    CHECK(s.size() == 4);
    CHECK(s[0] == 0);
    CHECK(s[1] == 1);
    CHECK(s.to_string() == "0101");
    CHECK_THROWS_AS(BitString::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(BitString::parse("01x"), std::invalid_argument);
    CHECK_THROWS_AS(BitString({0, 2}), std::invalid_argument);
}

TEST_CASE("dyadic expansion") {
    CHECK(BitString::parse("101").to_dyadic() == Dyadic(5, 3));
    CHECK(BitString::parse("000").to_dyadic() == Dyadic());
    const BitString ones = BitString::parse("11111111");
    CHECK(ones.to_dyadic() == Dyadic(255, 8));  // (2^N - 1)/2^N
}

TEST_CASE("initial value appends a trailing one digit") {
    CHECK(BitString::parse("0").initial_value() == Dyadic(1, 2));
    CHECK(BitString::parse("10").initial_value() == Dyadic(5, 3));
    CHECK(BitString::parse("101").initial_value() ==
          BitString::parse("101").to_dyadic() + Dyadic(1, 4));
}

TEST_CASE("complement") {
    CHECK(BitString::parse("011").complement() == BitString::parse("100"));
    const BitString s = BitString::parse("0110101");
    CHECK(s.complement().complement() == s);
    const auto n = s.size();
    CHECK(s.to_dyadic() + s.complement().to_dyadic() ==
          Dyadic((BigInt(1) << n) - 1, static_cast<std::uint32_t>(n)));
}

TEST_CASE("index value is most-significant-first") {
    CHECK(BitString::parse("101").to_index() == 5);
    CHECK(BitString::parse("101").to_index_u64() == 5);
    CHECK(BitString::parse("0001").to_index() == 1);
}

TEST_CASE("expansion is injective for fixed length") {
    std::set<Dyadic> seen;
    for (std::uint32_t j = 0; j < (1u << 8); ++j) {
        std::vector<std::uint8_t> bits(8);
        for (int k = 0; k < 8; ++k) {
            bits[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((j >> (7 - k)) & 1);
        }
        seen.insert(BitString(bits).to_dyadic());
    }
    CHECK(seen.size() == 256);
}

TEST_CASE("random strings are reproducible per seed") {
    RandomBitSource a(99), b(99), c(100);
    const BitString sa = BitString::random(64, a);
    const BitString sb = BitString::random(64, b);
    const BitString sc = BitString::random(64, c);
    CHECK(sa == sb);
    CHECK(sa != sc);
    CHECK_THROWS_AS(BitString::random(0, a), std::invalid_argument);
}

TEST_CASE("fair-bit frequency at ten thousand draws") {
    RandomBitSource src(20250810);
    const BitString s = BitString::random(10000, src);
    std::size_t ones = 0;
    for (std::size_t i = 0; i < s.size(); ++i) ones += s[i];
    const double frac = static_cast<double>(ones) / 10000.0;
    CHECK(frac > 0.45);
    CHECK(frac < 0.55);
}

TEST_CASE("split streams are independent and deterministic") {
    const RandomBitSource base(7);
    RandomBitSource s1 = base.split(1);
    RandomBitSource s1b = base.split(1);
    RandomBitSource s2 = base.split(2);
    const BitString a = BitString::random(32, s1);
    CHECK(a == BitString::random(32, s1b));
    CHECK(a != BitString::random(32, s2));
}
