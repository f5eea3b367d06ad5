#pragma once

#include <cstdint>
#include <utility>

#include "qbaker/bitstring.hpp"
#include "qbaker/kernels.hpp"

namespace qbaker::oracle {

// Size caps: D^2 storage and D^3 products bound what brute force can do.
inline constexpr int kMaxDenseQubits = 12;   // operator construction
inline constexpr int kMaxOracleQubits = 10;  // expectation-value evolution
inline constexpr int kMaxOracleSteps = 64;

/// Quantum Fourier transform, entries e^{2 pi i a b / D} / sqrt(D).
kern::Matrix qft(int n_qubits);

/// Fourier on the last n_qubits - m qubits, identity on the first m.
/// m = 0 is the full transform, m = n_qubits the identity.
kern::Matrix partial_fourier(int m, int n_qubits);

/// One-step propagator of the quantized baker's map: a cyclic right shift of
/// the qubit register followed by the two-level transform (1-i)/2 [[1,i],[i,1]]
/// on the lead qubit. Entrywise it realizes
///   <xi|T|eta> = (1-i)/2 e^{i pi |xi_1 - eta_N| / 2} prod_{k>=2} delta(xi_k - eta_{k-1}).
kern::Matrix baker_unitary(int n_qubits);

/// Diagonal position operator, entries (j + 1/2)/2^N.
kern::Matrix position_operator(int n_qubits);

/// Momentum operator F q F*.
kern::Matrix momentum_operator(int n_qubits);

/// Weyl displacement pair (U, V) = (e^{2 pi i q}, e^{-2 pi i p}) satisfying
/// U V = e^{2 pi i / D} V U. Exponentials are taken by diagonalization: q is
/// diagonal and p diagonalizes by the Fourier transform.
std::pair<kern::Matrix, kern::Matrix> weyl_pair(int n_qubits);

/// Normalized Gaussian profile exp(-q_j^2 / 2) over the position grid.
kern::Vector vacuum_state(int n_qubits);

/// Displaced vacuum e^{2 pi i q v} e^{-2 pi i p x} |psi0>, normalized.
kern::Vector coherent_state(std::int64_t x, std::int64_t v, int n_qubits);

/// Brute-force r_n = sum_j q_j |<xi|T^n|j>|^2 by repeated dense matrix-vector
/// application of the adjoint propagator.
double oracle_mean_position(const BitString& xi, int steps);

/// <alpha| T^n q T^{-n} |alpha> for the coherent state alpha = x + i v.
double oracle_coherent_mean(std::int64_t x, std::int64_t v, int steps, int n_qubits);

}  // namespace qbaker::oracle
