#include "qbaker/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace qbaker::kern {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            r.at(j, i) = std::conj(at(i, j));
        }
    }
    return r;
}

namespace {

void check_mm(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: shape mismatch");
    }
}

void check_mv(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size()) {
        throw std::invalid_argument("matvec: shape mismatch");
    }
}

// One output row of a*b, k-major so the b rows stream through cache. The
// accumulation order per element is the same in every variant, which keeps
// serial and parallel results bitwise identical.
inline void accumulate_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i) {
    const std::size_t cols = b.cols();
    cplx* out = c.data() + i * cols;
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const cplx aik = a.at(i, k);
        const cplx* brow = b.data() + k * cols;
        for (std::size_t j = 0; j < cols; ++j) {
            out[j] += aik * brow[j];
        }
    }
}

}  // namespace

Matrix matmul_serial(const Matrix& a, const Matrix& b) {
    check_mm(a, b);
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        accumulate_row(a, b, c, i);
    }
    return c;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    check_mm(a, b);
    Matrix c(a.rows(), b.cols());
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        accumulate_row(a, b, c, static_cast<std::size_t>(i));
    }
    return c;
}

Vector matvec_serial(const Matrix& a, const Vector& x) {
    check_mv(a, x);
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx s(0.0, 0.0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            s += a.at(i, k) * x[k];
        }
        y[i] = s;
    }
    return y;
}

Vector matvec(const Matrix& a, const Vector& x) {
    check_mv(a, x);
    Vector y(a.rows());
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        cplx s(0.0, 0.0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            s += a.at(static_cast<std::size_t>(i), k) * x[k];
        }
        y[static_cast<std::size_t>(i)] = s;
    }
    return y;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
        }
    }
    return worst;
}

double unitarity_residual_serial(const Matrix& u) {
    const Matrix g = matmul_serial(u.adjoint(), u);
    return max_abs_diff(g, Matrix::identity(u.rows()));
}

double unitarity_residual(const Matrix& u) {
    const Matrix g = matmul(u.adjoint(), u);
    return max_abs_diff(g, Matrix::identity(u.rows()));
}

double norm(const Vector& x) {
    double s = 0.0;
    for (const auto& v : x) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

void normalize(Vector& x) {
    const double n = norm(x);
    if (n == 0.0) {
        throw std::domain_error("normalize: zero vector");
    }
    for (auto& v : x) {
        v /= n;
    }
}

}  // namespace qbaker::kern
