#include "qbaker/verify.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qbaker/classical.hpp"
#include "qbaker/closedform.hpp"
#include "qbaker/kernels.hpp"
#include "qbaker/oracle.hpp"

namespace qbaker::verify {

using kern::cplx;
using kern::Matrix;

namespace {

constexpr double kStructuralTol = 1e-10;   // single-construction checks
constexpr double kCrossModuleTol = 1e-9;   // two independent float routes

std::string describe_pass(std::size_t cases) {
    return std::to_string(cases) + " cases";
}

}  // namespace

// <xi|T|eta> written straight from the one-step matrix-element formula; kept
// local so the check does not share code with oracle::baker_unitary or
// closedform::t_power_element.
static cplx one_step_element(std::uint64_t xi, std::uint64_t eta, int n_qubits) {
    const auto bit = [n_qubits](std::uint64_t w, int k) {  // 1-based, MSB first
        return (w >> (n_qubits - k)) & 1ULL;
    };
    for (int k = 2; k <= n_qubits; ++k) {
        if (bit(xi, k) != bit(eta, k - 1)) return {0.0, 0.0};
    }
    const cplx half_1mi(0.5, -0.5);
    const double arg = std::numbers::pi / 2.0 *
                       std::abs(static_cast<double>(bit(xi, 1)) - static_cast<double>(bit(eta, n_qubits)));
    return half_1mi * std::polar(1.0, arg);
}

CheckResult check_propagator_entries(int max_n_qubits) {
    std::size_t cases = 0;
    for (int n_q = 1; n_q <= max_n_qubits; ++n_q) {
        const Matrix t = oracle::baker_unitary(n_q);
        const std::size_t d = t.rows();
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                const cplx want = one_step_element(r, c, n_q);
                if (std::abs(t.at(r, c) - want) > kStructuralTol) {
                    std::ostringstream os;
                    os << "entry (" << r << "," << c << ") at N=" << n_q;
                    return {"propagator matches one-step element formula", false, os.str()};
                }
                ++cases;
            }
        }
    }
    return {"propagator matches one-step element formula", true, describe_pass(cases)};
}

CheckResult check_propagator_powers(int max_n_qubits, std::uint64_t seed) {
    std::size_t cases = 0;
    const int cap = std::min(max_n_qubits, 6);
    for (int n_q = 2; n_q <= cap; ++n_q) {
        const Matrix t = oracle::baker_unitary(n_q);
        Matrix power = Matrix::identity(t.rows());
        for (int n = 1; n <= 3 * n_q; ++n) {
            power = kern::matmul(t, power);
            RandomBitSource src(seed + static_cast<std::uint64_t>(97 * n_q + n));
            for (int trial = 0; trial < 16; ++trial) {
                const BitString xi = BitString::random(static_cast<std::size_t>(n_q), src);
                const BitString zeta = BitString::random(static_cast<std::size_t>(n_q), src);
                const cplx dense = power.at(static_cast<std::size_t>(xi.to_index_u64()),
                                            static_cast<std::size_t>(zeta.to_index_u64()));
                const cplx formula = closedform::t_power_element(xi, zeta, static_cast<std::uint64_t>(n));
                if (std::abs(dense - formula) > kCrossModuleTol) {
                    std::ostringstream os;
                    os << "N=" << n_q << " n=" << n << " xi=" << xi.to_string()
                       << " zeta=" << zeta.to_string();
                    return {"propagator powers match element formula", false, os.str()};
                }
                ++cases;
            }
        }
    }
    return {"propagator powers match element formula", true, describe_pass(cases)};
}

CheckResult check_a_power_table(int max_steps) {
    // numerically power A = [[1,i],[i,1]] and round the squared moduli
    cplx a[2][2] = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}};
    cplx pw[2][2] = {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}};
    std::size_t cases = 0;
    for (int n = 0; n <= max_steps; ++n) {
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                const BigInt want = closedform::a_power_abs_sq(static_cast<std::uint64_t>(n), r == c);
                const double got = std::norm(pw[r][c]);
                const BigInt rounded = BigInt(static_cast<long long>(std::llround(got)));
                if (rounded != want) {
                    std::ostringstream os;
                    os << "n=" << n << " entry(" << r << "," << c << ")";
                    return {"squared moduli of coupling-matrix powers", false, os.str()};
                }
                ++cases;
            }
        }
        // pw <- A * pw
        cplx nx[2][2];
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                nx[r][c] = a[r][0] * pw[0][c] + a[r][1] * pw[1][c];
            }
        }
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) pw[r][c] = nx[r][c];
    }
    return {"squared moduli of coupling-matrix powers", true, describe_pass(cases)};
}

CheckResult check_unitarity(int max_n_qubits) {
    for (int n_q = 1; n_q <= max_n_qubits; ++n_q) {
        const double rt = kern::unitarity_residual(oracle::baker_unitary(n_q));
        const double rf = kern::unitarity_residual(oracle::qft(n_q));
        if (rt > kStructuralTol || rf > kStructuralTol) {
            std::ostringstream os;
            os << "N=" << n_q << " residuals T=" << rt << " F=" << rf;
            return {"propagator and Fourier unitarity", false, os.str()};
        }
        for (int m = 0; m <= n_q; ++m) {
            if (kern::unitarity_residual(oracle::partial_fourier(m, n_q)) > kStructuralTol) {
                std::ostringstream os;
                os << "partial transform m=" << m << " N=" << n_q;
                return {"propagator and Fourier unitarity", false, os.str()};
            }
        }
    }
    return {"propagator and Fourier unitarity", true, describe_pass(static_cast<std::size_t>(max_n_qubits))};
}

CheckResult check_weyl(int max_n_qubits) {
    const int cap = std::min(max_n_qubits, 6);
    for (int n_q = 1; n_q <= cap; ++n_q) {
        const auto [u, v] = oracle::weyl_pair(n_q);
        const std::size_t d = u.rows();
        const cplx eps = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(d));
        const Matrix uv = kern::matmul(u, v);
        Matrix vu = kern::matmul(v, u);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                vu.at(i, j) *= eps;
            }
        }
        const double resid = kern::max_abs_diff(uv, vu);
        const double ru = kern::unitarity_residual(u);
        const double rv = kern::unitarity_residual(v);
        if (resid > kStructuralTol || ru > kStructuralTol || rv > kStructuralTol) {
            std::ostringstream os;
            os << "N=" << n_q << " commutation=" << resid << " unitarity U=" << ru << " V=" << rv;
            return {"Weyl pair commutation", false, os.str()};
        }
    }
    return {"Weyl pair commutation", true, describe_pass(static_cast<std::size_t>(cap))};
}

CheckResult check_row_normalization(int max_n_qubits, std::uint64_t seed) {
    std::size_t cases = 0;
    for (int n_q = 2; n_q <= std::min(max_n_qubits, 8); ++n_q) {
        RandomBitSource src(seed + static_cast<std::uint64_t>(n_q));
        const BitString xi = BitString::random(static_cast<std::size_t>(n_q), src);
        const std::uint64_t probes[] = {1ULL, static_cast<std::uint64_t>(n_q) - 1,
                                        static_cast<std::uint64_t>(n_q),
                                        static_cast<std::uint64_t>(n_q) + 1,
                                        2ULL * static_cast<std::uint64_t>(n_q),
                                        3ULL * static_cast<std::uint64_t>(n_q) + 2};
        for (std::uint64_t n : probes) {
            double total = 0.0;
            const std::size_t d = std::size_t{1} << n_q;
            for (std::size_t z = 0; z < d; ++z) {
                std::vector<std::uint8_t> zb(static_cast<std::size_t>(n_q));
                for (int k = 0; k < n_q; ++k) {
                    zb[static_cast<std::size_t>(k)] =
                        static_cast<std::uint8_t>((z >> (n_q - 1 - k)) & 1);
                }
                total += std::norm(closedform::t_power_element(xi, BitString(zb), n));
            }
            if (std::abs(total - 1.0) > kCrossModuleTol) {
                std::ostringstream os;
                os << "N=" << n_q << " n=" << n << " row mass " << total;
                return {"element formula row normalization", false, os.str()};
            }
            ++cases;
        }
    }
    return {"element formula row normalization", true, describe_pass(cases)};
}

CheckResult check_summation_route(int max_n_qubits, std::uint64_t seed) {
    std::size_t cases = 0;
    for (int n_q = 2; n_q <= std::min(max_n_qubits, 8); ++n_q) {
        RandomBitSource src(seed ^ 0x5eedULL ^ static_cast<std::uint64_t>(n_q));
        for (int trial = 0; trial < 5; ++trial) {
            const BitString xi = BitString::random(static_cast<std::size_t>(n_q), src);
            for (std::uint64_t n = 0; n <= 4ULL * static_cast<std::uint64_t>(n_q) + 2; ++n) {
                if (closedform::mean_position(xi, n) != closedform::mean_position_by_summation(xi, n)) {
                    std::ostringstream os;
                    os << "N=" << n_q << " xi=" << xi.to_string() << " n=" << n;
                    return {"closed form equals exact basis summation", false, os.str()};
                }
                ++cases;
            }
        }
    }
    return {"closed form equals exact basis summation", true, describe_pass(cases)};
}

CheckResult check_classical_correspondence(std::uint64_t seed) {
    std::size_t cases = 0;
    for (std::size_t n_q : {10u, 100u, 500u}) {
        RandomBitSource src(seed + n_q);
        const BitString xi = BitString::random(n_q, src);
        const auto quantum = closedform::quantum_orbit(xi, 2 * n_q);
        const auto classic =
            classical::classical_q_orbit(xi, 2 * n_q, classical::ClassicalOrbitMode::truncated());
        for (std::size_t n = 0; n <= n_q; ++n) {
            if (quantum.at(n) != classic.at(n)) {
                std::ostringstream os;
                os << "N=" << n_q << " n=" << n << " (inside the correspondence window)";
                return {"classical correspondence window", false, os.str()};
            }
            ++cases;
        }
        bool diverges = false;
        for (std::size_t n = n_q + 1; n < 2 * n_q; ++n) {
            if (quantum.at(n) != classic.at(n)) {
                diverges = true;
                break;
            }
        }
        if (!diverges) {
            std::ostringstream os;
            os << "N=" << n_q << ": no divergence found in (N, 2N)";
            return {"classical correspondence window", false, os.str()};
        }
    }
    return {"classical correspondence window", true, describe_pass(cases)};
}

std::string Counterexample::describe() const {
    std::ostringstream os;
    os << "N=" << n_qubits << " xi=" << xi << " n=" << step << " expected=" << expected
       << " got=" << actual;
    return os.str();
}

std::optional<Counterexample> compare_mean_position_against_oracle(
    const MeanPositionFn& fn, int max_n_qubits, int per_size, std::uint64_t seed,
    double tol) {
    if (max_n_qubits > kMaxVerifyQubits) {
        throw std::domain_error("verification sweep capped at N <= 10");
    }
    for (int n_q = 2; n_q <= max_n_qubits; ++n_q) {
        RandomBitSource src(seed + static_cast<std::uint64_t>(n_q) * 1000003ULL);
        for (int trial = 0; trial < per_size; ++trial) {
            const BitString xi = BitString::random(static_cast<std::size_t>(n_q), src);
            // Evolve once, reading r_n at every step, instead of re-powering.
            const Matrix t_adj = oracle::baker_unitary(n_q).adjoint();
            const std::size_t d = t_adj.rows();
            kern::Vector state(d, cplx(0.0, 0.0));
            state[static_cast<std::size_t>(xi.to_index_u64())] = 1.0;
            const std::uint64_t n_max = 4ULL * static_cast<std::uint64_t>(n_q) + 2;
            for (std::uint64_t n = 0; n <= n_max; ++n) {
                double r_oracle = 0.0;
                for (std::size_t j = 0; j < d; ++j) {
                    r_oracle += (static_cast<double>(j) + 0.5) / static_cast<double>(d) *
                                std::norm(state[j]);
                }
                const double r_closed = fn(xi, n).to_double();
                if (std::abs(r_closed - r_oracle) > tol) {
                    return Counterexample{static_cast<std::size_t>(n_q), xi.to_string(), n,
                                          r_oracle, r_closed};
                }
                if (n < n_max) {
                    state = kern::matvec(t_adj, state);
                }
            }
        }
    }
    return std::nullopt;
}

CheckResult check_closedform_vs_oracle(int max_n_qubits, int per_size,
                                       std::uint64_t seed, double tol) {
    const auto ce = compare_mean_position_against_oracle(
        [](const BitString& xi, std::uint64_t n) { return closedform::mean_position(xi, n); },
        max_n_qubits, per_size, seed, tol);
    if (ce) {
        return {"closed form vs brute force", false, ce->describe()};
    }
    return {"closed form vs brute force", true,
            describe_pass(static_cast<std::size_t>(max_n_qubits - 1) *
                          static_cast<std::size_t>(per_size))};
}

std::vector<CheckResult> run_verification(int max_n_qubits, std::uint64_t seed) {
    if (max_n_qubits < 2 || max_n_qubits > kMaxVerifyQubits) {
        throw std::domain_error("run_verification: max qubit count must be in [2, 10]");
    }
    std::vector<CheckResult> results;

    results.push_back(check_closedform_vs_oracle(max_n_qubits, 20, seed, kCrossModuleTol));
    results.push_back(check_summation_route(max_n_qubits, seed));
    results.push_back(check_propagator_entries(std::min(max_n_qubits, 8)));
    results.push_back(check_propagator_powers(max_n_qubits, seed));
    results.push_back(check_a_power_table(40));
    results.push_back(check_unitarity(std::min(max_n_qubits, 8)));
    results.push_back(check_weyl(max_n_qubits));
    results.push_back(check_row_normalization(max_n_qubits, seed));
    results.push_back(check_classical_correspondence(seed));
    return results;
}

}  // namespace qbaker::verify
