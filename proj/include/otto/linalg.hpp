#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "otto/errors.hpp"

// Dense real linear algebra for the small operators of the engine model
// (dimension 2, 4 or 16). Everything is value-semantic and allocation is
// plain std::vector; no global state.
namespace otto::linalg {

// General dense matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> diag);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const double> data() const noexcept { return data_; }

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(double s);

    Matrix transpose() const;
    double trace() const;
    double frobenius_norm() const;
    // max |a_ij - a_ji|
    double asymmetry() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(double s, Matrix m);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);

// (ia*rows(b)+ib, ja*cols(b)+jb) entry is a(ia,ja)*b(ib,jb).
Matrix kron(const Matrix& a, const Matrix& b);

// Real symmetric matrix. Construction symmetrizes as (A + A^T)/2, so the
// stored entries are exactly symmetric.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(Matrix m);

    static SymMatrix identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }
    static SymMatrix diagonal(std::span<const double> diag) { return SymMatrix(Matrix::diagonal(diag)); }

    std::size_t dim() const noexcept { return m_.rows(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix& matrix() const noexcept { return m_; }

    double trace() const { return m_.trace(); }
    double frobenius_norm() const { return m_.frobenius_norm(); }

    SymMatrix& operator+=(const SymMatrix& rhs);
    SymMatrix& operator*=(double s);

private:
    Matrix m_;
};

SymMatrix operator+(SymMatrix lhs, const SymMatrix& rhs);
SymMatrix operator*(double s, SymMatrix m);
SymMatrix kron(const SymMatrix& a, const SymMatrix& b);

// <x|A|y> for real vectors.
double bilinear(const SymMatrix& a, std::span<const double> x, std::span<const double> y);

struct SpectralDecomp {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // column i pairs with eigenvalues[i]
    std::size_t sweeps = 0;           // Jacobi sweeps used

    std::size_t dim() const noexcept { return eigenvalues.size(); }
    std::vector<double> eigenvector(std::size_t i) const;
};

inline constexpr std::size_t kJacobiMaxSweeps = 100;
inline constexpr double kJacobiRelTol = 1e-12;

// Cyclic Jacobi with a threshold on small rotations during the first sweeps.
// Converged once the off-diagonal Frobenius norm drops below
// kJacobiRelTol * ||A||_F. Eigenvector signs are fixed so the largest
// component of each column is positive. Throws NonConvergence.
SpectralDecomp eig_sym(const SymMatrix& a);

// V diag(values) V^T.
SymMatrix reconstruct(const SpectralDecomp& d, std::span<const double> values);

// V f(D) V^T. Throws DomainError if f is not finite at some eigenvalue.
template <typename F>
SymMatrix matrix_function(const SpectralDecomp& d, F&& f) {
    std::vector<double> values(d.dim());
    for (std::size_t i = 0; i < d.dim(); ++i) {
        values[i] = f(d.eigenvalues[i]);
        if (!std::isfinite(values[i])) {
            throw DomainError("matrix_function: f is not finite at eigenvalue " +
                              std::to_string(d.eigenvalues[i]));
        }
    }
    return reconstruct(d, values);
}

}  // namespace otto::linalg
