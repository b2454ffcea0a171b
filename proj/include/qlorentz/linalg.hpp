#pragma once

#include "qlorentz/scalar.hpp"

#include <cstddef>
#include <vector>

namespace qlorentz {

/// Dense row-major complex matrix, sized for the small systems this project
/// meets (4x4 metric inversions up to a few hundred rows of relation vectors).
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Cplx> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Cplx& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Cplx& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat eye(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Cplx(1);
        return m;
    }

    Real max_abs() const {
        Real m(0);
        for (const auto& c : a) {
            Real v = c.abs();
            if (v > m) m = v;
        }
        return m;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        Mat out(x.rows, y.cols);
        for (std::size_t i = 0; i < x.rows; ++i)
            for (std::size_t k = 0; k < x.cols; ++k) {
                const Cplx& v = x(i, k);
                if (v.re == 0 && v.im == 0) continue;
                for (std::size_t j = 0; j < y.cols; ++j) out(i, j) += v * y(k, j);
            }
        return out;
    }
    friend Mat operator+(const Mat& x, const Mat& y) {
        Mat out = x;
        for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
        return out;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        Mat out = x;
        for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
        return out;
    }
    friend Mat operator*(const Cplx& c, const Mat& y) {
        Mat out = y;
        for (auto& v : out.a) v = c * v;
        return out;
    }
};

/// Gauss-Jordan inverse with partial pivoting; throws SingularMetric when the
/// pivot magnitude falls below the threshold.
inline Mat invert(Mat m, const Real& pivot_threshold) {
    if (m.rows != m.cols) throw Error("invert: non-square");
    const std::size_t n = m.rows;
    Mat inv = Mat::eye(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        Real bestv = m(col, col).abs2();
        for (std::size_t i = col + 1; i < n; ++i) {
            Real v = m(i, col).abs2();
            if (v > bestv) {
                bestv = v;
                best = i;
            }
        }
        if (bestv <= pivot_threshold * pivot_threshold) throw SingularMetric("pivot below threshold");
        if (best != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(col, j), m(best, j));
                std::swap(inv(col, j), inv(best, j));
            }
        Cplx piv = m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) = m(col, j) / piv;
            inv(col, j) = inv(col, j) / piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            Cplx f = m(i, col);
            if (f.re == 0 && f.im == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Determinant by elimination (used for eigenvalue membership checks).
inline Cplx determinant(Mat m) {
    if (m.rows != m.cols) throw Error("determinant: non-square");
    const std::size_t n = m.rows;
    Cplx det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        Real bestv = m(col, col).abs2();
        for (std::size_t i = col + 1; i < n; ++i) {
            Real v = m(i, col).abs2();
            if (v > bestv) {
                bestv = v;
                best = i;
            }
        }
        if (bestv == 0) return Cplx(0);
        if (best != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m(col, j), m(best, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            Cplx f = m(i, col) / m(col, col);
            if (f.re == 0 && f.im == 0) continue;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

}  // namespace qlorentz
