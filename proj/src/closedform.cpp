#include "qbaker/closedform.hpp"

#include <cmath>
#include <stdexcept>

namespace qbaker::closedform {

namespace {

// Entry of A^m as an exact phase-and-magnitude pair: value = i^{quarter} *
// 2^{half_exp/2}, or zero. Diagonal entries of A^m are real (+/-2^{m/2} or
// +/-2^{(m-1)/2}), off-diagonal ones purely imaginary; which of the two
// magnitudes and signs applies cycles with m mod 8.
struct ScaledPhase {
    bool zero = false;
    int quarter = 0;      // phase exponent of i, mod 4
    std::int64_t half_exp = 0;  // magnitude is 2^{half_exp/2}

    ScaledPhase operator*(const ScaledPhase& rhs) const {
        if (zero || rhs.zero) return {true, 0, 0};
        return {false, (quarter + rhs.quarter) & 3, half_exp + rhs.half_exp};
    }
};

ScaledPhase a_power_entry(std::uint64_t m, bool same_index) {
    const int r8 = static_cast<int>(m % 8);
    if (same_index) {
        // ((1+i)^m + (1-i)^m)/2 = 2^{m/2} cos(m pi/4)
        if (m % 4 == 2) return {true, 0, 0};
        const bool neg = r8 == 3 || r8 == 4 || r8 == 5;
        const std::int64_t he = (m % 2 == 0) ? static_cast<std::int64_t>(m)
                                             : static_cast<std::int64_t>(m) - 1;
        return {false, neg ? 2 : 0, he};
    }
    // ((1+i)^m - (1-i)^m)/2 = i 2^{m/2} sin(m pi/4)
    if (m % 4 == 0) return {true, 0, 0};
    const bool neg = r8 == 5 || r8 == 6 || r8 == 7;
    const std::int64_t he = (m % 2 == 0) ? static_cast<std::int64_t>(m)
                                         : static_cast<std::int64_t>(m) - 1;
    return {false, neg ? 3 : 1, he};
}

// value = e^{i pi octant/4} * 2^{half_exp/2}. On odd octants the component
// 1/sqrt(2) cancels half an exponent, so each nonzero component is either a
// pure power of two (exact in a double) or a power of two times sqrt(2).
std::complex<double> to_complex(int octant, std::int64_t half_exp) {
    static const int re_sign[8] = {1, 1, 0, -1, -1, -1, 0, 1};
    static const int im_sign[8] = {0, 1, 1, 1, 0, -1, -1, -1};
    octant = ((octant % 8) + 8) % 8;
    const bool diagonal_phase = (octant % 2) == 1;  // components carry 1/sqrt(2)
    const std::int64_t k = diagonal_phase ? half_exp - 1 : half_exp;
    // k odd leaves one sqrt(2); k-1 is even so the shift below is exact
    const double mag = (k % 2 == 0)
                           ? std::ldexp(1.0, static_cast<int>(k / 2))
                           : std::ldexp(std::sqrt(2.0), static_cast<int>((k - 1) / 2));
    return {mag * re_sign[octant], mag * im_sign[octant]};
}

void check_element_args(const BitString& xi, const BitString& zeta) {
    if (xi.size() != zeta.size()) {
        throw std::invalid_argument("t_power_element: length mismatch");
    }
    if (xi.size() > kMaxElementQubits) {
        throw std::domain_error("t_power_element: qubit count above cap");
    }
}

// Numerator over 2^{N+1} of sum_{k=1}^{count} bits[off+k-1] 2^{-k}.
BigInt digit_sum_numerator(const std::vector<std::uint8_t>& bits, std::size_t off,
                           std::size_t count, std::size_t n_qubits) {
    // term k contributes 2^{N+1-k}
    BigInt num = 0;
    for (std::size_t k = 1; k <= count; ++k) {
        if (bits[off + k - 1]) {
            num += BigInt(1) << (n_qubits + 1 - k);
        }
    }
    return num;
}

}  // namespace

BigInt a_power_abs_sq(std::uint64_t n, bool same_index) {
    const auto pow2 = [](std::uint64_t e) { return BigInt(1) << e; };
    if (same_index) {
        if (n % 4 == 2) return 0;
        if (n % 2 == 1) return pow2(n - 1);
        return pow2(n);  // n == 0 mod 4, including n == 0
    }
    if (n % 4 == 0) return 0;
    if (n % 2 == 1) return pow2(n - 1);
    return pow2(n);  // n == 2 mod 4
}

std::complex<double> t_power_element(const BitString& xi, const BitString& zeta,
                                     std::uint64_t n) {
    check_element_args(xi, zeta);
    const std::size_t N = xi.size();
    if (n == 0) {
        return xi == zeta ? 1.0 : 0.0;
    }

    const std::uint64_t m = n / N;
    const std::uint64_t p = n % N;

    // Accumulated product of A-power entries.
    ScaledPhase acc{false, 0, 0};
    if (m == 0) {
        // n < N: deltas on the shifted block, bare A entries on the rest.
        for (std::size_t k = 1; k + n <= N; ++k) {
            if (xi[n + k - 1] != zeta[k - 1]) return 0.0;
        }
        for (std::size_t l = 1; l <= n; ++l) {
            acc = acc * a_power_entry(1, xi[l - 1] == zeta[N - n + l - 1]);
        }
    } else if (p != 0) {
        for (std::size_t k = 1; k <= p; ++k) {
            acc = acc * a_power_entry(m + 1, xi[k - 1] == zeta[N - p + k - 1]);
        }
        for (std::size_t l = 1; l <= N - p; ++l) {
            acc = acc * a_power_entry(m, xi[p + l - 1] == zeta[l - 1]);
        }
    } else {
        for (std::size_t k = 1; k <= N; ++k) {
            acc = acc * a_power_entry(m, xi[k - 1] == zeta[k - 1]);
        }
    }
    if (acc.zero) return 0.0;

    // Prefactor ((1-i)/2)^n = 2^{-n/2} e^{-i pi n/4}.
    const auto sn = static_cast<std::int64_t>(n);
    const int octant = static_cast<int>(((2 * acc.quarter - sn) % 8 + 8) % 8);
    return to_complex(octant, acc.half_exp - sn);
}

Dyadic mean_position(const BitString& xi, std::uint64_t n) {
    const std::size_t N = xi.size();
    if (n == 0) {
        return xi.initial_value();
    }
    const std::uint64_t m = n / N;
    const std::size_t p = static_cast<std::size_t>(n % N);
    const auto& bits = xi.bits();

    if (p != 0) {
        const auto comp = xi.complement();
        const auto& cbits = comp.bits();
        BigInt num;
        switch (m % 4) {
            case 0:
                // sum_{k=1}^{N-p} xi_{p+k} 2^{-k} + 2^p/2^{N+1}
                num = digit_sum_numerator(bits, p, N - p, N) + (BigInt(1) << p);
                break;
            case 1:
                // sum_{k=N-p+1}^{N} eta_{k-(N-p)} 2^{-k} + (2^N - 2^p + 1)/2^{N+1}
                num = (BigInt(1) << N) - (BigInt(1) << p) + 1;
                for (std::size_t k = N - p + 1; k <= N; ++k) {
                    if (cbits[k - (N - p) - 1]) num += BigInt(1) << (N + 1 - k);
                }
                break;
            case 2:
                num = digit_sum_numerator(cbits, p, N - p, N) + (BigInt(1) << p);
                break;
            default:
                num = (BigInt(1) << N) - (BigInt(1) << p) + 1;
                for (std::size_t k = N - p + 1; k <= N; ++k) {
                    if (bits[k - (N - p) - 1]) num += BigInt(1) << (N + 1 - k);
                }
                break;
        }
        return Dyadic(std::move(num), static_cast<std::uint32_t>(N + 1));
    }

    switch (m % 4) {
        case 1:
        case 3:
            return Dyadic(1, 1);
        case 2:
            return xi.complement().initial_value();
        default:
            return xi.initial_value();
    }
}

Dyadic mean_position_by_summation(const BitString& xi, std::uint64_t n) {
    const std::size_t N = xi.size();
    if (N > kMaxElementQubits) {
        throw std::domain_error("mean_position_by_summation: qubit count above cap");
    }
    if (n == 0) {
        return xi.initial_value();
    }
    const std::uint64_t m = n / N;
    const std::size_t p = static_cast<std::size_t>(n % N);
    const std::uint64_t dim = 1ULL << N;

    // r_n = 2^{-n} sum_j (j + 1/2) 2^{-N} prod |A^{m+1}|^2 prod |A^m|^2,
    // assembled over the common denominator 2^{N + 1 + n}.
    BigInt num = 0;
    for (std::uint64_t j = 0; j < dim; ++j) {
        BigInt w = 1;
        if (m == 0) {
            bool dead = false;
            for (std::size_t k = 1; k + n <= N && !dead; ++k) {
                const int jb = static_cast<int>((j >> (N - k)) & 1);
                dead = xi[n + k - 1] != jb;
            }
            if (dead) continue;
            for (std::size_t l = 1; l <= n; ++l) {
                const std::size_t col = N - n + l;
                const int jb = static_cast<int>((j >> (N - col)) & 1);
                w *= a_power_abs_sq(1, xi[l - 1] == jb);
                if (w == 0) break;
            }
        } else if (p != 0) {
            for (std::size_t k = 1; k <= p && w != 0; ++k) {
                const std::size_t col = N - p + k;
                const int jb = static_cast<int>((j >> (N - col)) & 1);
                w *= a_power_abs_sq(m + 1, xi[k - 1] == jb);
            }
            for (std::size_t l = 1; l <= N - p && w != 0; ++l) {
                const int jb = static_cast<int>((j >> (N - l)) & 1);
                w *= a_power_abs_sq(m, xi[p + l - 1] == jb);
            }
        } else {
            for (std::size_t k = 1; k <= N && w != 0; ++k) {
                const int jb = static_cast<int>((j >> (N - k)) & 1);
                w *= a_power_abs_sq(m, xi[k - 1] == jb);
            }
        }
        if (w == 0) continue;
        num += w * (2 * BigInt(j) + 1);
    }
    return Dyadic(std::move(num), static_cast<std::uint32_t>(N + 1 + n));
}

OrbitSeries quantum_orbit(const BitString& xi, std::size_t n_max) {
    OrbitSeries series;
    series.provenance = Provenance::QuantumClosedForm;
    series.values.resize(n_max + 1);
#pragma omp parallel for schedule(static)
    for (std::size_t n = 0; n <= n_max; ++n) {
        series.values[n] = mean_position(xi, n);
    }
    return series;
}

}  // namespace qbaker::closedform
