#include "otto/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace otto::linalg {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionMismatch("Matrix::from_rows: ragged rows");
        std::size_t j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("Matrix +=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("Matrix -=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::trace() const {
    if (!square()) throw DimensionMismatch("trace of a non-square matrix");
    double t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

double Matrix::asymmetry() const {
    if (!square()) throw DimensionMismatch("Matrix::asymmetry: not square");
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    return worst;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(double s, Matrix m) { return m *= s; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols() != rhs.rows()) throw DimensionMismatch("Matrix *: inner dimensions differ");
    Matrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const double a = lhs(i, k);
            if (a == 0.0) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const double s = a(ia, ja);
            if (s == 0.0) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
        }
    return out;
}

SymMatrix::SymMatrix(Matrix m) : m_(std::move(m)) {
    if (!m_.square()) throw DimensionMismatch("SymMatrix: matrix is not square");
    const std::size_t n = m_.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (m_(i, j) + m_(j, i));
            m_(i, j) = avg;
            m_(j, i) = avg;
        }
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& rhs) {
    m_ += rhs.m_;
    return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
    m_ *= s;
    return *this;
}

SymMatrix operator+(SymMatrix lhs, const SymMatrix& rhs) { return lhs += rhs; }
SymMatrix operator*(double s, SymMatrix m) { return m *= s; }

SymMatrix kron(const SymMatrix& a, const SymMatrix& b) { return SymMatrix(kron(a.matrix(), b.matrix())); }

double bilinear(const SymMatrix& a, std::span<const double> x, std::span<const double> y) {
    const std::size_t n = a.dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("bilinear: vector length != dim");
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0.0) continue;
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += a(i, j) * y[j];
        s += x[i] * row;
    }
    return s;
}

std::vector<double> SpectralDecomp::eigenvector(std::size_t i) const {
    std::vector<double> v(dim());
    for (std::size_t r = 0; r < dim(); ++r) v[r] = eigenvectors(r, i);
    return v;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

// A <- J^T A J and V <- V J for the plane rotation in (p, q).
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q, double c, double s) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
}

}  // namespace

SpectralDecomp eig_sym(const SymMatrix& input) {
    const std::size_t n = input.dim();
    for (double x : input.matrix().data())
        if (!std::isfinite(x)) throw DomainError("eig_sym: matrix has a non-finite entry");
    Matrix a = input.matrix();
    Matrix v = Matrix::identity(n);
    const double tol = kJacobiRelTol * input.frobenius_norm();

    std::size_t sweep = 0;
    bool converged = false;
    for (; sweep <= kJacobiMaxSweeps; ++sweep) {
        const double off = off_diagonal_norm(a);
        if (off <= tol) {
            converged = true;
            break;
        }
        if (sweep == kJacobiMaxSweeps) break;
        // Early sweeps skip rotations that would barely reduce off(A).
        const double threshold = sweep < 3 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= threshold || apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                rotate(a, v, p, q, c, t * c);
            }
        }
    }
    if (!converged) {
        throw NonConvergence("eig_sym: Jacobi did not converge after " + std::to_string(sweep) + " sweeps",
                             sweep);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    SpectralDecomp out;
    out.sweeps = sweep;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        out.eigenvalues[col] = a(src, src);
        std::size_t argmax = 0;
        for (std::size_t r = 1; r < n; ++r)
            if (std::abs(v(r, src)) > std::abs(v(argmax, src)) + 1e-14) argmax = r;
        const double sign = v(argmax, src) < 0.0 ? -1.0 : 1.0;
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, col) = sign * v(r, src);
    }
    return out;
}

SymMatrix reconstruct(const SpectralDecomp& d, std::span<const double> values) {
    const std::size_t n = d.dim();
    if (values.size() != n) throw DimensionMismatch("reconstruct: value count != dimension");
    Matrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double w = values[k];
        if (w == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const double vik = w * d.eigenvectors(i, k);
            if (vik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * d.eigenvectors(j, k);
        }
    }
    return SymMatrix(std::move(out));
}

}  // namespace otto::linalg
