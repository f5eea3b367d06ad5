// Timing comparison of the serial reference kernels against the OpenMP
// variants, plus the closed-form orbit at paper scale.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qbaker/bitstring.hpp"
#include "qbaker/closedform.hpp"
#include "qbaker/kernels.hpp"

using namespace qbaker;
using kern::Matrix;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = {dist(gen), dist(gen)};
        }
    }
    return m;
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, seconds_since(t0));
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled, parallel kernels run serially\n");
#endif

    for (std::size_t n : {256u, 512u, 1024u}) {
        const Matrix a = random_matrix(n, 1);
        const Matrix b = random_matrix(n, 2);
        const double ts = time_best_of(3, [&] { (void)kern::matmul_serial(a, b); });
        const double tp = time_best_of(3, [&] { (void)kern::matmul(a, b); });
        const double gflop = 8.0 * static_cast<double>(n) * n * n / 1e9;
        std::printf("matmul   %4zu  serial %8.4fs (%6.2f GF/s)  omp %8.4fs (%6.2f GF/s)  speedup %.2fx\n",
                    n, ts, gflop / ts, tp, gflop / tp, ts / tp);
    }

    for (std::size_t n : {1024u, 4096u}) {
        const Matrix a = random_matrix(n, 3);
        kern::Vector x(n, {0.5, -0.25});
        const double ts = time_best_of(5, [&] { (void)kern::matvec_serial(a, x); });
        const double tp = time_best_of(5, [&] { (void)kern::matvec(a, x); });
        std::printf("matvec   %4zu  serial %8.5fs  omp %8.5fs  speedup %.2fx\n", n, ts, tp,
                    ts / tp);
    }

    {
        RandomBitSource src(7);
        const BitString xi = BitString::random(700, src);
        const auto t0 = std::chrono::steady_clock::now();
        const auto orbit = closedform::quantum_orbit(xi, 1000);
        const double t = seconds_since(t0);
        std::printf("quantum orbit N=700 n_max=1000: %.4fs (%zu values)\n", t, orbit.length());
    }
    return 0;
}
