// Test-side oracles, kept independent of the library's numerics path:
// determinants by Laplace cofactor expansion and rank decisions by minors.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "sdof/channel.hpp"
#include "sdof/complex_matrix.hpp"
#include "sdof/gaussian_mi.hpp"

namespace oracle {

using sdof::ComplexMatrix;
using sdof::cplx;

inline ComplexMatrix minor_matrix(const ComplexMatrix& m, std::size_t drop_row, std::size_t drop_col) {
    ComplexMatrix out(m.rows() - 1, m.cols() - 1);
    std::size_t oi = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == drop_row) continue;
        std::size_t oj = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j == drop_col) continue;
            out(oi, oj++) = m(i, j);
        }
        ++oi;
    }
    return out;
}

// Laplace expansion along the first row; exponential but exact enough for
// the small matrices under test.
inline cplx det_cofactor(const ComplexMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1.0;
    if (n == 1) return m(0, 0);
    cplx acc = 0.0;
    double sign = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) != cplx(0.0)) acc += sign * m(0, j) * det_cofactor(minor_matrix(m, 0, j));
        sign = -sign;
    }
    return acc;
}

inline void combinations(std::size_t n, std::size_t k,
                         const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

// Largest |det| over all k x k submatrices.
inline double max_abs_minor(const ComplexMatrix& m, std::size_t k) {
    double best = 0.0;
    combinations(m.rows(), k, [&](const std::vector<std::size_t>& ri) {
        combinations(m.cols(), k, [&](const std::vector<std::size_t>& ci) {
            ComplexMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(ri[i], ci[j]);
            best = std::max(best, std::abs(det_cofactor(sub)));
        });
    });
    return best;
}

inline ComplexMatrix random_matrix(sdof::Rng& rng, std::size_t rows, std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.complex_gaussian();
    return m;
}

// [sqrt(pa) A | sqrt(pb) B]: one unit-power component equivalent to two
// independent components of powers pa and pb.
inline ComplexMatrix merge_scaled(const ComplexMatrix& a, double pa, const ComplexMatrix& b, double pb) {
    ComplexMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = std::sqrt(pa) * a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = std::sqrt(pb) * b(i, j);
    }
    return m;
}

}  // namespace oracle
