#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qbaker/bitstring.hpp"
#include "qbaker/dyadic.hpp"

namespace qbaker::verify {

/// Hard cap for the brute-force sweeps (D^2 evolution per step).
inline constexpr int kMaxVerifyQubits = 10;

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // counterexample coordinates on failure, stats on pass
};

struct Counterexample {
    std::size_t n_qubits;
    std::string xi;
    std::uint64_t step;
    double expected;
    double actual;

    std::string describe() const;
};

using MeanPositionFn = std::function<Dyadic(const BitString&, std::uint64_t)>;

/// Sweeps N in [2, max_n_qubits], `per_size` seeded random strings per N and
/// every n in [0, 4N+2], comparing fn against the brute-force expectation
/// value. Returns the first counterexample beyond `tol`, if any. The fn
/// parameter exists so tests can feed deliberately broken formulas and watch
/// the sweep catch them.
std::optional<Counterexample> compare_mean_position_against_oracle(
    const MeanPositionFn& fn, int max_n_qubits, int per_size, std::uint64_t seed,
    double tol);

// Individual checks. Each returns pass/fail plus either a case count or the
// coordinates of the first counterexample.
CheckResult check_closedform_vs_oracle(int max_n_qubits, int per_size,
                                       std::uint64_t seed, double tol);
CheckResult check_summation_route(int max_n_qubits, std::uint64_t seed);
CheckResult check_propagator_entries(int max_n_qubits);
CheckResult check_propagator_powers(int max_n_qubits, std::uint64_t seed);
CheckResult check_a_power_table(int max_steps);
CheckResult check_unitarity(int max_n_qubits);
CheckResult check_weyl(int max_n_qubits);
CheckResult check_row_normalization(int max_n_qubits, std::uint64_t seed);
CheckResult check_classical_correspondence(std::uint64_t seed);

/// The full cross-module suite: closed form vs brute force, closed form vs
/// exact summation, propagator entries vs the one-step and n-step element
/// formulas, the |A^n|^2 table vs numeric matrix powers, unitarity, Weyl
/// commutation, element-row normalization, and the classical correspondence
/// window. Throws std::domain_error if max_n_qubits exceeds kMaxVerifyQubits.
std::vector<CheckResult> run_verification(int max_n_qubits, std::uint64_t seed);

}  // namespace qbaker::verify
