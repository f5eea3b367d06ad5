#pragma once

#include <complex>
#include <cstdint>

#include "qbaker/bitstring.hpp"
#include "qbaker/dyadic.hpp"
#include "qbaker/orbit.hpp"

namespace qbaker::closedform {

/// Largest qubit count accepted by the per-element propagator formula; the
/// mean-position path below has no such cap.
inline constexpr std::size_t kMaxElementQubits = 16;

/// Exact |(A^n)_{kj}|^2 for the 2x2 coupling matrix A = [[1,i],[i,1]].
/// Diagonal entries (same_index) are 2^n, 2^{n-1} or 0 depending on n mod 4;
/// off-diagonal entries follow the complementary pattern. Pure residue-class
/// dispatch times a power of two, never trigonometry.
BigInt a_power_abs_sq(std::uint64_t n, bool same_index);

/// Matrix element <xi| T^n |zeta> of the n-step quantized baker propagator,
/// by the regime formula (n < N with Kronecker deltas, n = N, n = mN+p,
/// n = mN). At n = 1 this reduces to the one-step matrix element. Throws on
/// length mismatch or size() > kMaxElementQubits.
std::complex<double> t_power_element(const BitString& xi, const BitString& zeta,
                                     std::uint64_t n);

/// Exact mean position r_n = <xi| T^n q T^{-n} |xi> via closed-form regime
/// dispatch on n = mN + p. O(N) per call, valid for arbitrarily large N.
Dyadic mean_position(const BitString& xi, std::uint64_t n);

/// Same value by the pre-reduction route: the full 2^N-term sum over basis
/// states with exact |A^m|^2 weights. Exponential in N (capped like
/// t_power_element); exists as an independent algebraic check of
/// mean_position.
Dyadic mean_position_by_summation(const BitString& xi, std::uint64_t n);

/// [r_0 ... r_{n_max}].
OrbitSeries quantum_orbit(const BitString& xi, std::size_t n_max);

}  // namespace qbaker::closedform
