#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "qbaker/oracle.hpp"

using namespace qbaker;
using namespace qbaker::oracle;
using kern::cplx;
using kern::Matrix;

TEST_CASE("fourier transform basics") {
    const Matrix f1 = qft(1);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(f1.at(0, 0) - cplx(s, 0)) < 1e-15);
    CHECK(std::abs(f1.at(0, 1) - cplx(s, 0)) < 1e-15);
    CHECK(std::abs(f1.at(1, 0) - cplx(s, 0)) < 1e-15);
    CHECK(std::abs(f1.at(1, 1) - cplx(-s, 0)) < 1e-15);

    SUBCASE("zero column is phase free") {
        const Matrix f4 = qft(4);
        const double amp = 1.0 / std::sqrt(16.0);
        for (std::size_t r = 0; r < 16; ++r) {
            CHECK(std::abs(f4.at(r, 0) - cplx(amp, 0)) < 1e-12);
        }
    }
    SUBCASE("unitarity") {
        for (int n = 1; n <= 8; ++n) {
            CHECK(kern::unitarity_residual(qft(n)) < 1e-10);
        }
    }
    CHECK_THROWS_AS(qft(0), std::domain_error);
    CHECK_THROWS_AS(qft(13), std::domain_error);
}

TEST_CASE("partial transform endpoints and unitarity") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(kern::max_abs_diff(partial_fourier(0, n), qft(n)) == 0.0);
        CHECK(kern::max_abs_diff(partial_fourier(n, n),
                                 Matrix::identity(std::size_t{1} << n)) == 0.0);
        for (int m = 0; m <= n; ++m) {
            CHECK(kern::unitarity_residual(partial_fourier(m, n)) < 1e-10);
        }
    }
    CHECK_THROWS_AS(partial_fourier(3, 2), std::domain_error);
}

TEST_CASE("propagator entries at two qubits") {
    const Matrix t = baker_unitary(2);
    CHECK(std::abs(t.at(0b00, 0b00) - cplx(0.5, -0.5)) < 1e-15);
    CHECK(std::abs(t.at(0b01, 0b00)) == 0.0);  // delta: xi_2 != eta_1
    CHECK(std::abs(t.at(0b10, 0b00) - cplx(0.5, 0.5)) < 1e-15);
    for (int n = 1; n <= 8; ++n) {
        CHECK(kern::unitarity_residual(baker_unitary(n)) < 1e-10);
    }
}

TEST_CASE("position operator") {
    const Matrix q1 = position_operator(1);
    CHECK(q1.at(0, 0) == cplx(0.25, 0.0));
    CHECK(q1.at(1, 1) == cplx(0.75, 0.0));
    for (int n : {1, 4, 8}) {
        const Matrix q = position_operator(n);
        cplx trace(0.0, 0.0);
        for (std::size_t j = 0; j < q.rows(); ++j) {
            trace += q.at(j, j);
            CHECK(q.at(j, j).real() > 0.0);
            CHECK(q.at(j, j).real() < 1.0);
        }
        CHECK(trace.real() == doctest::Approx(std::pow(2.0, n - 1)));
    }
}

TEST_CASE("momentum operator") {
    SUBCASE("single qubit closed form") {
        const Matrix p = momentum_operator(1);
        CHECK(std::abs(p.at(0, 0) - cplx(0.5, 0.0)) < 1e-12);
        CHECK(std::abs(p.at(1, 1) - cplx(0.5, 0.0)) < 1e-12);
        CHECK(std::abs(p.at(0, 1) - cplx(-0.25, 0.0)) < 1e-12);
        CHECK(std::abs(p.at(1, 0) - cplx(-0.25, 0.0)) < 1e-12);
    }
    SUBCASE("hermitian with the Fourier columns as eigenvectors") {
        for (int n : {2, 4, 6}) {
            const Matrix p = momentum_operator(n);
            CHECK(kern::max_abs_diff(p, p.adjoint()) < 1e-10);
            const Matrix f = qft(n);
            const std::size_t d = p.rows();
            for (std::size_t j = 0; j < d; ++j) {
                kern::Vector fj(d);
                for (std::size_t r = 0; r < d; ++r) fj[r] = f.at(r, j);
                const kern::Vector pfj = kern::matvec(p, fj);
                const double qj = (static_cast<double>(j) + 0.5) / static_cast<double>(d);
                double worst = 0.0;
                for (std::size_t r = 0; r < d; ++r) {
                    worst = std::max(worst, std::abs(pfj[r] - qj * fj[r]));
                }
                CHECK(worst < 1e-10);
            }
        }
    }
}

TEST_CASE("weyl pair") {
    for (int n : {1, 2, 3, 6}) {
        const auto [u, v] = weyl_pair(n);
        const std::size_t d = u.rows();
        SUBCASE("clock is diagonal with half-integer phases") {
            for (std::size_t j = 0; j < d; ++j) {
                const double qj = (static_cast<double>(j) + 0.5) / static_cast<double>(d);
                CHECK(std::abs(u.at(j, j) - std::polar(1.0, 2.0 * std::numbers::pi * qj)) < 1e-12);
            }
        }
        CHECK(kern::unitarity_residual(u) < 1e-10);
        CHECK(kern::unitarity_residual(v) < 1e-10);
        const Matrix uv = kern::matmul(u, v);
        Matrix vu = kern::matmul(v, u);
        const cplx eps = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) vu.at(i, j) *= eps;
        CHECK(kern::max_abs_diff(uv, vu) < 1e-10);
    }
}

TEST_CASE("vacuum state") {
    const auto psi1 = vacuum_state(1);
    const double a0 = std::exp(-1.0 / 32.0);
    const double a1 = std::exp(-9.0 / 32.0);
    const double nrm = std::sqrt(a0 * a0 + a1 * a1);
    CHECK(std::abs(psi1[0] - cplx(a0 / nrm, 0)) < 1e-14);
    CHECK(std::abs(psi1[1] - cplx(a1 / nrm, 0)) < 1e-14);

    for (int n : {3, 6}) {
        const auto psi = vacuum_state(n);
        CHECK(kern::norm(psi) == doctest::Approx(1.0).epsilon(1e-12));
        for (std::size_t j = 1; j < psi.size(); ++j) {
            CHECK(std::abs(psi[j]) < std::abs(psi[j - 1]));
        }
    }
}

TEST_CASE("coherent states") {
    for (int n : {2, 5}) {
        const auto zero = coherent_state(0, 0, n);
        const auto vac = vacuum_state(n);
        double worst = 0.0;
        for (std::size_t j = 0; j < zero.size(); ++j) {
            worst = std::max(worst, std::abs(zero[j] - vac[j]));
        }
        CHECK(worst < 1e-14);

        const auto disp = coherent_state(1, 0, n);
        CHECK(kern::norm(disp) == doctest::Approx(1.0).epsilon(1e-12));
        // displacement by the Weyl shift: same state as V applied to the vacuum
        const auto v = weyl_pair(n).second;
        const auto shifted = kern::matvec(v, vac);
        worst = 0.0;
        for (std::size_t j = 0; j < disp.size(); ++j) {
            worst = std::max(worst, std::abs(disp[j] - shifted[j]));
        }
        CHECK(worst < 1e-12);

        const auto kicked = coherent_state(0, 3, n);
        CHECK(kern::norm(kicked) == doctest::Approx(1.0).epsilon(1e-12));
        for (std::size_t j = 0; j < kicked.size(); ++j) {
            CHECK(std::abs(kicked[j]) == doctest::Approx(std::abs(vac[j])).epsilon(1e-12));
        }
    }
}

TEST_CASE("brute-force mean position") {
    SUBCASE("time zero reads the diagonal") {
        const BitString xi = BitString::parse("110");
        CHECK(oracle_mean_position(xi, 0) == doctest::Approx((6.0 + 0.5) / 8.0).epsilon(1e-12));
    }
    SUBCASE("center value at n equal to qubit count") {
        const BitString xi = BitString::parse("0101");
        CHECK(oracle_mean_position(xi, 4) == doctest::Approx(0.5).epsilon(1e-10));
    }
    SUBCASE("matches the quoted value") {
        CHECK(oracle_mean_position(BitString::parse("110"), 1) ==
              doctest::Approx(0.625).epsilon(1e-10));
    }
    SUBCASE("caps") {
        RandomBitSource src(1);
        const BitString big = BitString::random(11, src);
        CHECK_THROWS_AS(oracle_mean_position(big, 1), std::domain_error);
        CHECK_THROWS_AS(oracle_mean_position(BitString::parse("01"), 65), std::domain_error);
    }
}

TEST_CASE("coherent-state mean position") {
    const int n = 4;
    const auto vac = vacuum_state(n);
    double expect = 0.0;
    for (std::size_t j = 0; j < vac.size(); ++j) {
        const double qj = (static_cast<double>(j) + 0.5) / 16.0;
        expect += qj * std::norm(vac[j]);
    }
    CHECK(oracle_coherent_mean(0, 0, 0, n) == doctest::Approx(expect).epsilon(1e-12));
    for (int steps : {1, 3, 4, 9}) {
        const double r = oracle_coherent_mean(0, 0, steps, n);
        CHECK(r > 0.0);
        CHECK(r < 1.0);
    }
    CHECK_THROWS_AS(oracle_coherent_mean(0, 0, 1, 11), std::domain_error);
}
