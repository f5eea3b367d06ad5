#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qbaker/bitstring.hpp"
#include "qbaker/dyadic.hpp"
#include "qbaker/orbit.hpp"

namespace qbaker::classical {

/// Point of the unit square, both coordinates exact dyadics in [0,1].
struct ClassicalPoint {
    Dyadic q;
    Dyadic p;

    bool operator==(const ClassicalPoint&) const = default;
};

/// One step of the baker's transformation:
///   (2q, p/2)           if q <= 1/2
///   (2q-1, (p+1)/2)     otherwise
/// Exact, area preserving; dyadic points stay dyadic.
ClassicalPoint baker_step(const ClassicalPoint& pt);

/// Inverse step. Exact inverse of baker_step away from the measure-zero
/// seams p == 1 and q == 0 where the two binary expansions of the same point
/// collide.
ClassicalPoint baker_step_inverse(const ClassicalPoint& pt);

/// Two-sided finite symbol string ... b_{-1} b_0 . b_1 b_2 ... with the dot
/// between past and future. past() is stored nearest-first (b_0 first).
class SymbolicString {
public:
    SymbolicString(std::vector<std::uint8_t> past, std::vector<std::uint8_t> future);

    const std::vector<std::uint8_t>& past() const { return past_; }
    const std::vector<std::uint8_t>& future() const { return future_; }

    /// Move the dot one place right; throws std::domain_error once the
    /// future expansion is exhausted.
    SymbolicString shift() const;

    /// q = sum_{k>=1} b_k 2^{-k}, p = sum_{k>=0} b_{-k} 2^{-k-1}.
    ClassicalPoint decode() const;

private:
    std::vector<std::uint8_t> past_;
    std::vector<std::uint8_t> future_;
};

enum class OrbitKind { Truncated, Extended };

/// How the q-orbit digit stream continues past the initial block b_1..b_N 1:
/// truncated appends zeros forever, extended appends seeded random bits.
struct ClassicalOrbitMode {
    OrbitKind kind = OrbitKind::Truncated;
    std::uint64_t seed = 0;  // used by Extended only

    static ClassicalOrbitMode truncated() { return {OrbitKind::Truncated, 0}; }
    static ClassicalOrbitMode extended(std::uint64_t seed) {
        return {OrbitKind::Extended, seed};
    }
};

/// Extended-mode values are truncated to this many stream digits, so each
/// value is the exact dyadic 0.s_{n+1}...s_{n+P}. Truncated-mode values are
/// always exact in full.
inline constexpr std::size_t kExtendedPrecisionBits = 256;

/// q-coordinate orbit of the point 0.b_1...b_N 1 (tail per mode),
/// q_n = sum_{k>=1} s_{n+k} 2^{-k} over the digit stream s.
OrbitSeries classical_q_orbit(const BitString& xi, std::size_t n_max,
                              const ClassicalOrbitMode& mode,
                              std::size_t precision_bits = kExtendedPrecisionBits);

}  // namespace qbaker::classical
