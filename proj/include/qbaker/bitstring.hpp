#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qbaker/dyadic.hpp"

namespace qbaker {

/// Deterministic fair-bit stream. std::mt19937_64 is fully specified by the
/// standard, so a seed reproduces the same bits on every platform. Bits are
/// taken MSB-first from successive 64-bit outputs.
///
/// Single-owner: concurrent consumers must use independent sources obtained
/// via split().
class RandomBitSource {
public:
    explicit RandomBitSource(std::uint64_t seed);

    int next_bit();
    std::uint64_t seed() const { return seed_; }

    /// Independent source for a parallel stream; splitmix64 of (seed, stream).
    RandomBitSource split(std::uint64_t stream) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
    std::uint64_t word_ = 0;
    int remaining_ = 0;
};

/// Finite 0/1 string, first element most significant. Doubles as the basis
/// state label and as the dyadic expansion 0.b1 b2 ... bN of a point in [0,1).
class BitString {
public:
    explicit BitString(std::vector<std::uint8_t> bits);
    static BitString parse(const std::string& zeros_and_ones);
    static BitString random(std::size_t n, RandomBitSource& src);

    std::size_t size() const { return bits_.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    /// Flip every bit; involution.
    BitString complement() const;

    /// Integer value sum b_k 2^{N-k}.
    BigInt to_index() const;
    /// Same, restricted to N <= 63 (dense-operator indexing).
    std::uint64_t to_index_u64() const;

    /// sum b_k 2^{-k}, exact.
    Dyadic to_dyadic() const;
    /// to_dyadic() + 2^{-(N+1)}: the binary value 0.b1...bN1.
    Dyadic initial_value() const;

    std::string to_string() const;

    bool operator==(const BitString& rhs) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace qbaker
