#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qbaker::kern {

using cplx = std::complex<double>;

/// Row-major dense complex matrix.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    Matrix adjoint() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<cplx> a_;
};

using Vector = std::vector<cplx>;

// Each kernel has a serial reference (suffix _serial) and an OpenMP-parallel
// default. Parallelism is over independent output elements with a fixed
// inner accumulation order, so both variants produce bitwise-identical
// results; tests assert that.

Matrix matmul_serial(const Matrix& a, const Matrix& b);
Matrix matmul(const Matrix& a, const Matrix& b);

Vector matvec_serial(const Matrix& a, const Vector& x);
Vector matvec(const Matrix& a, const Vector& x);

/// max_{ij} |a_ij - b_ij|
double max_abs_diff(const Matrix& a, const Matrix& b);

/// ||U* U - I||_max
double unitarity_residual_serial(const Matrix& u);
double unitarity_residual(const Matrix& u);

double norm(const Vector& x);
void normalize(Vector& x);

}  // namespace qbaker::kern
