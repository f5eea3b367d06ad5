#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qbaker {

using BigInt = boost::multiprecision::cpp_int;

/// Non-negative exact dyadic rational numerator/2^exponent.
///
/// Canonical form: exponent == 0 or the numerator is odd. All arithmetic is
/// exact; conversion to double happens only at output boundaries. Orbit
/// values handled by the library live in [0,1], but the type itself allows
/// any non-negative value.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(BigInt numerator, std::uint32_t exponent);

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(1, 0); }
    /// 1/2^e
    static Dyadic unit(std::uint32_t e) { return Dyadic(1, e); }

    const BigInt& numerator() const { return num_; }
    std::uint32_t exponent() const { return exp_; }

    bool is_zero() const { return num_ == 0; }

    Dyadic operator+(const Dyadic& rhs) const;
    /// Exact difference; throws std::domain_error if the result would be negative.
    Dyadic operator-(const Dyadic& rhs) const;
    /// Halve (exponent bump), used by the classical map.
    Dyadic half() const { return Dyadic(num_, exp_ + 1); }
    /// Double; the caller guarantees the value stays representable (always true).
    Dyadic twice() const;

    std::strong_ordering operator<=>(const Dyadic& rhs) const;
    bool operator==(const Dyadic& rhs) const = default;

    /// floor(k * value) as an exact integer, k >= 0.
    BigInt floor_scaled(std::uint64_t k) const;

    /// Nearest-below double (top 53 bits of the numerator); exact when the
    /// numerator fits a double mantissa.
    double to_double() const;

    /// Serialized as "numerator/2^exponent", e.g. "5/2^3".
    std::string to_string() const;

private:
    void canonicalize();

    BigInt num_;
    std::uint32_t exp_;
};

}  // namespace qbaker
