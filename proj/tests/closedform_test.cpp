#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "qbaker/classical.hpp"
#include "qbaker/closedform.hpp"

using namespace qbaker;
using namespace qbaker::closedform;
using cplx = std::complex<double>;

TEST_CASE("squared moduli of coupling-matrix powers") {
    CHECK(a_power_abs_sq(0, true) == 1);
    CHECK(a_power_abs_sq(0, false) == 0);
    CHECK(a_power_abs_sq(2, true) == 0);
    CHECK(a_power_abs_sq(2, false) == 4);
    CHECK(a_power_abs_sq(5, true) == 16);
    CHECK(a_power_abs_sq(5, false) == 16);
    // residue-class structure, diagonal and off-diagonal masses sum to 2^n
    for (std::uint64_t n = 0; n <= 64; ++n) {
        CHECK(a_power_abs_sq(n, true) + a_power_abs_sq(n, false) == BigInt(1) << n);
    }
}

TEST_CASE("one-step matrix elements") {
    const BitString zz = BitString::parse("00");
    CHECK(t_power_element(zz, zz, 1) == cplx(0.5, -0.5));
    CHECK(t_power_element(zz, BitString::parse("10"), 1) == cplx(0.0, 0.0));
    // phase-coupled entry: xi_1 differs from zeta_2
    CHECK(t_power_element(BitString::parse("10"), BitString::parse("00"), 1) ==
          cplx(0.5, 0.5));
}

TEST_CASE("element formula reduces to the one-step formula") {
    for (int n_q = 1; n_q <= 6; ++n_q) {
        const std::size_t d = std::size_t{1} << n_q;
        for (std::size_t r = 0; r < d; ++r) {
            std::vector<std::uint8_t> rb(static_cast<std::size_t>(n_q));
            for (int k = 0; k < n_q; ++k)
                rb[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((r >> (n_q - 1 - k)) & 1);
            const BitString xi(rb);
            for (std::size_t c = 0; c < d; ++c) {
                std::vector<std::uint8_t> cb(static_cast<std::size_t>(n_q));
                for (int k = 0; k < n_q; ++k)
                    cb[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((c >> (n_q - 1 - k)) & 1);
                const BitString zeta(cb);
                // direct transcription of the one-step element
                cplx want(0.0, 0.0);
                bool live = true;
                for (int k = 2; k <= n_q && live; ++k) {
                    live = xi[static_cast<std::size_t>(k - 1)] == zeta[static_cast<std::size_t>(k - 2)];
                }
                if (live) {
                    const double diff = std::abs(static_cast<double>(xi[0]) -
                                                 static_cast<double>(zeta[static_cast<std::size_t>(n_q - 1)]));
                    want = cplx(0.5, -0.5) * std::polar(1.0, std::numbers::pi / 2.0 * diff);
                }
                CHECK(std::abs(t_power_element(xi, zeta, 1) - want) < 1e-12);
            }
        }
    }
}

TEST_CASE("element formula input validation") {
    CHECK_THROWS_AS(t_power_element(BitString::parse("01"), BitString::parse("011"), 1),
                    std::invalid_argument);
    RandomBitSource src(2);
    const BitString big = BitString::random(17, src);
    CHECK_THROWS_AS(t_power_element(big, big, 1), std::domain_error);
    CHECK(t_power_element(BitString::parse("0110"), BitString::parse("0110"), 0) == cplx(1.0, 0.0));
}

TEST_CASE("element rows stay normalized across regimes") {
    RandomBitSource src(31);
    const BitString xi = BitString::random(5, src);
    for (std::uint64_t n : {1ULL, 4ULL, 5ULL, 7ULL, 10ULL, 23ULL, 40ULL}) {
        double mass = 0.0;
        for (std::uint64_t z = 0; z < 32; ++z) {
            std::vector<std::uint8_t> zb(5);
            for (int k = 0; k < 5; ++k) zb[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((z >> (4 - k)) & 1);
            mass += std::norm(t_power_element(xi, BitString(zb), n));
        }
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("mean position regime examples") {
    SUBCASE("n equal to the qubit count gives the center") {
        RandomBitSource src(4);
        for (std::size_t n_q : {2u, 3u, 7u, 30u}) {
            const BitString xi = BitString::random(n_q, src);
            CHECK(mean_position(xi, n_q) == Dyadic(1, 1));
        }
    }
    SUBCASE("short-time digit shift") {
        CHECK(mean_position(BitString::parse("110"), 1) == Dyadic(5, 3));
    }
    SUBCASE("first wrap regime") {
        CHECK(mean_position(BitString::parse("00"), 3) == Dyadic(5, 3));
    }
    SUBCASE("time zero is the initial value") {
        const BitString xi = BitString::parse("0110101");
        CHECK(mean_position(xi, 0) == xi.initial_value());
    }
}

TEST_CASE("mean position periodicity and range") {
    RandomBitSource src(6);
    for (std::size_t n_q : {2u, 3u, 5u, 11u, 40u}) {
        const BitString xi = BitString::random(n_q, src);
        const Dyadic low = Dyadic(1, static_cast<std::uint32_t>(n_q + 1));
        const Dyadic high = Dyadic(1, 0) - low;
        for (std::uint64_t n = 0; n <= 4 * n_q + 6; ++n) {
            const Dyadic r = mean_position(xi, n);
            CHECK(r == mean_position(xi, n + 4 * n_q));
            CHECK(low <= r);
            CHECK(r <= high);
        }
    }
}

TEST_CASE("double-wrap value complements the start") {
    RandomBitSource src(9);
    for (std::size_t n_q : {2u, 5u, 16u, 100u}) {
        const BitString xi = BitString::random(n_q, src);
        const Dyadic r2n = mean_position(xi, 2 * n_q);
        CHECK(r2n == xi.complement().to_dyadic() + Dyadic(1, static_cast<std::uint32_t>(n_q + 1)));
        CHECK(r2n == Dyadic(1, 0) - xi.initial_value());
        CHECK(mean_position(xi, n_q) == Dyadic(1, 1));
        CHECK(mean_position(xi, 3 * n_q) == Dyadic(1, 1));
    }
}

TEST_CASE("closed form equals the exact basis summation") {
    RandomBitSource src(13);
    for (std::size_t n_q : {2u, 3u, 4u, 6u}) {
        const BitString xi = BitString::random(n_q, src);
        for (std::uint64_t n = 0; n <= 4 * n_q + 2; ++n) {
            CHECK(mean_position(xi, n) == mean_position_by_summation(xi, n));
        }
    }
}

TEST_CASE("orbit series") {
    SUBCASE("zero steps") {
        const BitString xi = BitString::parse("011");
        const auto orbit = quantum_orbit(xi, 0);
        CHECK(orbit.length() == 1);
        CHECK(orbit.at(0) == xi.initial_value());
        CHECK(orbit.provenance == Provenance::QuantumClosedForm);
    }
    SUBCASE("parallel generation matches elementwise evaluation") {
        RandomBitSource src(15);
        const BitString xi = BitString::random(37, src);
        const auto orbit = quantum_orbit(xi, 200);
        for (std::size_t n = 0; n <= 200; ++n) {
            CHECK(orbit.at(n) == mean_position(xi, n));
        }
    }
    SUBCASE("period eight at two qubits") {
        const BitString xi = BitString::parse("10");
        const auto orbit = quantum_orbit(xi, 16);
        for (std::size_t n = 0; n + 8 <= 16; ++n) {
            CHECK(orbit.at(n) == orbit.at(n + 8));
        }
    }
}

TEST_CASE("quantum orbit equals the truncated classical orbit through n = N") {
    RandomBitSource src(23);
    const BitString xi = BitString::random(500, src);
    const auto quantum = quantum_orbit(xi, 1000);
    const auto classic =
        classical::classical_q_orbit(xi, 1000, classical::ClassicalOrbitMode::truncated());
    for (std::size_t n = 0; n <= 500; ++n) {
        CHECK(quantum.at(n) == classic.at(n));
    }
    bool diverged = false;
    for (std::size_t n = 501; n < 1000 && !diverged; ++n) {
        diverged = !(quantum.at(n) == classic.at(n));
    }
    CHECK(diverged);
}
