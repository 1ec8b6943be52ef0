// Dense complex matrices sized for small multi-slot receive models, plus the
// base-2 log-determinant primitive the mutual-information code is built on.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <vector>

namespace sdof {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        ComplexMatrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw std::invalid_argument("from_rows: ragged row lengths");
            std::size_t j = 0;
            for (const cplx& v : row) m(i, j++) = v;
            ++i;
        }
        if (!m.is_finite()) throw std::invalid_argument("from_rows: non-finite entry");
        return m;
    }

    // Column vector from entries.
    static ComplexMatrix column(const CVector& v) {
        ComplexMatrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix adjoint() const {
        ComplexMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    // A * A^H, the Hermitian Gram matrix over observation rows.
    ComplexMatrix gram() const {
        ComplexMatrix m(rows_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                cplx s = 0.0;
                for (std::size_t k = 0; k < cols_; ++k)
                    s += (*this)(i, k) * std::conj((*this)(j, k));
                m(i, j) = s;
                m(j, i) = std::conj(s);
            }
        return m;
    }

    double frobenius_norm_sq() const {
        double s = 0.0;
        for (const cplx& v : data_) s += std::norm(v);
        return s;
    }

    double max_abs() const {
        double s = 0.0;
        for (const cplx& v : data_) s = std::max(s, std::abs(v));
        return s;
    }

    bool is_finite() const {
        for (const cplx& v : data_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

    bool is_hermitian(double tol) const {
        if (rows_ != cols_) return false;
        const double scale = std::max(1.0, max_abs());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol * scale) return false;
        return true;
    }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        ComplexMatrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx aik = a(i, k);
                if (aik == 0.0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
            }
        return m;
    }

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum: shape mismatch");
        ComplexMatrix m = a;
        for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
        return m;
    }

    friend ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
        ComplexMatrix m = a;
        for (cplx& v : m.data_) v *= s;
        return m;
    }

    friend ComplexMatrix operator*(const ComplexMatrix& a, cplx s) { return s * a; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// Unconjugated inner product a^T b; channels act on inputs by transpose.
inline cplx transpose_dot(const CVector& a, const CVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("transpose_dot: length mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Row vector v^T applied to a matrix: returns a length-cols() vector.
inline CVector transpose_apply(const CVector& v, const ComplexMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("transpose_apply: shape mismatch");
    CVector out(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    return out;
}

inline double norm_sq(const CVector& v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    return s;
}

/// log2 det of a Hermitian positive semidefinite matrix via Cholesky pivots.
/// Returns -inf for a singular input (det 0), which is distinct from the
/// exceptions thrown for non-square, non-Hermitian (beyond 1e-10 relative)
/// or non-finite inputs.
inline double log_det_hermitian_psd(const ComplexMatrix& m) {
    constexpr double hermitian_tol = 1e-10;
    constexpr double psd_tol = 1e-10;

    if (m.rows() != m.cols()) throw std::invalid_argument("log_det: matrix not square");
    if (!m.is_finite()) throw std::invalid_argument("log_det: non-finite entry");
    if (!m.is_hermitian(hermitian_tol)) throw std::invalid_argument("log_det: not Hermitian");

    const std::size_t n = m.rows();
    if (n == 0) return 0.0;

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(m(i, i).real()));
    scale = std::max(scale, 1.0);

    // In-place lower Cholesky; pivots are the successive Schur complements,
    // so det = prod(pivot_k) and log2 det accumulates per step.
    ComplexMatrix a = m;
    double log2det = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double pivot = a(k, k).real();
        for (std::size_t j = 0; j < k; ++j) pivot -= std::norm(a(k, j));
        if (pivot < -psd_tol * scale)
            throw std::domain_error("log_det: matrix not positive semidefinite");
        if (pivot <= psd_tol * scale) return -std::numeric_limits<double>::infinity();
        log2det += std::log2(pivot);
        const double lkk = std::sqrt(pivot);
        a(k, k) = lkk;
        for (std::size_t i = k + 1; i < n; ++i) {
            cplx s = a(i, k);
            for (std::size_t j = 0; j < k; ++j) s -= a(i, j) * std::conj(a(k, j));
            a(i, k) = s / lkk;
        }
    }
    return log2det;
}

}  // namespace sdof
