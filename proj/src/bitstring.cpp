#include "qbaker/bitstring.hpp"

#include <stdexcept>

namespace qbaker {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

RandomBitSource::RandomBitSource(std::uint64_t seed) : seed_(seed), gen_(seed) {}

int RandomBitSource::next_bit() {
    if (remaining_ == 0) {
        word_ = gen_();
        remaining_ = 64;
    }
    --remaining_;
    return static_cast<int>((word_ >> remaining_) & 1u);
}

RandomBitSource RandomBitSource::split(std::uint64_t stream) const {
    return RandomBitSource(splitmix64(seed_ ^ splitmix64(stream)));
}

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) {
        throw std::invalid_argument("BitString: empty");
    }
    for (auto b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("BitString: element not 0/1");
        }
    }
}

BitString BitString::parse(const std::string& s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitString: expected only 0/1 characters");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitString(std::move(bits));
}

BitString BitString::random(std::size_t n, RandomBitSource& src) {
    if (n == 0) {
        throw std::invalid_argument("BitString::random: n must be >= 1");
    }
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) {
        b = static_cast<std::uint8_t>(src.next_bit());
    }
    return BitString(std::move(bits));
}

BitString BitString::complement() const {
    std::vector<std::uint8_t> flipped(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        flipped[i] = static_cast<std::uint8_t>(1 - bits_[i]);
    }
    return BitString(std::move(flipped));
}

BigInt BitString::to_index() const {
    BigInt j = 0;
    for (auto b : bits_) {
        j <<= 1;
        j += b;
    }
    return j;
}

std::uint64_t BitString::to_index_u64() const {
    if (bits_.size() > 63) {
        throw std::domain_error("BitString::to_index_u64: more than 63 bits");
    }
    std::uint64_t j = 0;
    for (auto b : bits_) {
        j = (j << 1) | b;
    }
    return j;
}

Dyadic BitString::to_dyadic() const {
    return Dyadic(to_index(), static_cast<std::uint32_t>(bits_.size()));
}

Dyadic BitString::initial_value() const {
    const auto np1 = static_cast<std::uint32_t>(bits_.size() + 1);
    return Dyadic((to_index() << 1) + 1, np1);
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) {
        s.push_back(static_cast<char>('0' + b));
    }
    return s;
}

}  // namespace qbaker
