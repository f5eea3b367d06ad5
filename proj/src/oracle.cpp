#include "qbaker/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qbaker::oracle {

using kern::cplx;
using kern::Matrix;
using kern::Vector;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_qubits(int n_qubits, int cap, const char* who) {
    if (n_qubits < 1 || n_qubits > cap) {
        throw std::domain_error(std::string(who) + ": qubit count out of range");
    }
}

std::size_t dim_of(int n_qubits) { return std::size_t{1} << n_qubits; }

// Diagonal phase matrix e^{i s 2 pi q} conjugated into the p eigenbasis:
// F diag(e^{i s 2 pi q_j}) F*.
Matrix momentum_phase(int n_qubits, double scale) {
    const std::size_t d = dim_of(n_qubits);
    const Matrix f = qft(n_qubits);
    Matrix phased(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const double qk = (static_cast<double>(k) + 0.5) / static_cast<double>(d);
        const cplx ph = std::polar(1.0, scale * kTwoPi * qk);
        for (std::size_t j = 0; j < d; ++j) {
            phased.at(k, j) = ph * std::conj(f.at(j, k));
        }
    }
    return kern::matmul(f, phased);
}

}  // namespace

Matrix qft(int n_qubits) {
    check_qubits(n_qubits, kMaxDenseQubits, "qft");
    const std::size_t d = dim_of(n_qubits);
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    Matrix f(d, d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            // phases e^{2 pi i a b / D}; reduce a b mod D before the trig call
            const std::size_t ab = (a * b) & (d - 1);
            f.at(a, b) = std::polar(inv_sqrt_d, kTwoPi * static_cast<double>(ab) / static_cast<double>(d));
        }
    }
    return f;
}

Matrix partial_fourier(int m, int n_qubits) {
    check_qubits(n_qubits, kMaxDenseQubits, "partial_fourier");
    if (m < 0 || m > n_qubits) {
        throw std::domain_error("partial_fourier: identity block out of range");
    }
    if (m == 0) {
        return qft(n_qubits);
    }
    const std::size_t d = dim_of(n_qubits);
    Matrix g(d, d);
    if (m == n_qubits) {
        return Matrix::identity(d);
    }
    const Matrix f = qft(n_qubits - m);
    const std::size_t block = dim_of(n_qubits - m);
    for (std::size_t top = 0; top < (d / block); ++top) {
        const std::size_t off = top * block;
        for (std::size_t a = 0; a < block; ++a) {
            for (std::size_t b = 0; b < block; ++b) {
                g.at(off + a, off + b) = f.at(a, b);
            }
        }
    }
    return g;
}

Matrix baker_unitary(int n_qubits) {
    check_qubits(n_qubits, kMaxDenseQubits, "baker_unitary");
    const std::size_t d = dim_of(n_qubits);
    const std::size_t low_mask = (d >> 1) - 1;  // bits 2..N of the new label

    // W on the lead qubit after the register shift |b1..bN> -> |bN b1..b_{N-1}>.
    const cplx w_same(0.5, -0.5);   // (1-i)/2
    const cplx w_diff(0.5, 0.5);    // (1-i)/2 * i

    Matrix t(d, d);
    for (std::size_t eta = 0; eta < d; ++eta) {
        const std::size_t eta_last = eta & 1;
        const std::size_t shifted_rest = (eta >> 1) & low_mask;
        for (std::size_t lead = 0; lead < 2; ++lead) {
            const std::size_t xi = (lead << (n_qubits - 1)) | shifted_rest;
            t.at(xi, eta) = (lead == eta_last) ? w_same : w_diff;
        }
    }
    return t;
}

Matrix position_operator(int n_qubits) {
    check_qubits(n_qubits, kMaxDenseQubits, "position_operator");
    const std::size_t d = dim_of(n_qubits);
    Matrix q(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        q.at(j, j) = (static_cast<double>(j) + 0.5) / static_cast<double>(d);
    }
    return q;
}

Matrix momentum_operator(int n_qubits) {
    check_qubits(n_qubits, kMaxDenseQubits, "momentum_operator");
    const Matrix f = qft(n_qubits);
    return kern::matmul(kern::matmul(f, position_operator(n_qubits)), f.adjoint());
}

std::pair<Matrix, Matrix> weyl_pair(int n_qubits) {
    check_qubits(n_qubits, kMaxDenseQubits, "weyl_pair");
    const std::size_t d = dim_of(n_qubits);
    Matrix u(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const double qj = (static_cast<double>(j) + 0.5) / static_cast<double>(d);
        u.at(j, j) = std::polar(1.0, kTwoPi * qj);
    }
    return {std::move(u), momentum_phase(n_qubits, -1.0)};
}

Vector vacuum_state(int n_qubits) {
    check_qubits(n_qubits, kMaxDenseQubits, "vacuum_state");
    const std::size_t d = dim_of(n_qubits);
    Vector psi(d);
    for (std::size_t j = 0; j < d; ++j) {
        const double qj = (static_cast<double>(j) + 0.5) / static_cast<double>(d);
        psi[j] = std::exp(-qj * qj / 2.0);
    }
    kern::normalize(psi);
    return psi;
}

Vector coherent_state(std::int64_t x, std::int64_t v, int n_qubits) {
    check_qubits(n_qubits, kMaxDenseQubits, "coherent_state");
    const std::size_t d = dim_of(n_qubits);
    Vector psi = vacuum_state(n_qubits);
    if (x != 0) {
        psi = kern::matvec(momentum_phase(n_qubits, -static_cast<double>(x)), psi);
    }
    if (v != 0) {
        for (std::size_t j = 0; j < d; ++j) {
            const double qj = (static_cast<double>(j) + 0.5) / static_cast<double>(d);
            psi[j] *= std::polar(1.0, kTwoPi * static_cast<double>(v) * qj);
        }
    }
    kern::normalize(psi);
    return psi;
}

double oracle_mean_position(const BitString& xi, int steps) {
    const int n_qubits = static_cast<int>(xi.size());
    check_qubits(n_qubits, kMaxOracleQubits, "oracle_mean_position");
    if (steps < 0 || steps > kMaxOracleSteps) {
        throw std::domain_error("oracle_mean_position: step count out of range");
    }
    const std::size_t d = dim_of(n_qubits);
    const Matrix t_adj = baker_unitary(n_qubits).adjoint();

    Vector state(d, cplx(0.0, 0.0));
    state[static_cast<std::size_t>(xi.to_index_u64())] = 1.0;
    for (int s = 0; s < steps; ++s) {
        state = kern::matvec(t_adj, state);
    }
    double r = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        r += (static_cast<double>(j) + 0.5) / static_cast<double>(d) * std::norm(state[j]);
    }
    return r;
}

double oracle_coherent_mean(std::int64_t x, std::int64_t v, int steps, int n_qubits) {
    check_qubits(n_qubits, kMaxOracleQubits, "oracle_coherent_mean");
    if (steps < 0 || steps > kMaxOracleSteps) {
        throw std::domain_error("oracle_coherent_mean: step count out of range");
    }
    const std::size_t d = dim_of(n_qubits);
    const Matrix t_adj = baker_unitary(n_qubits).adjoint();
    Vector state = coherent_state(x, v, n_qubits);
    for (int s = 0; s < steps; ++s) {
        state = kern::matvec(t_adj, state);
    }
    double r = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        r += (static_cast<double>(j) + 0.5) / static_cast<double>(d) * std::norm(state[j]);
    }
    return r;
}

}  // namespace qbaker::oracle
