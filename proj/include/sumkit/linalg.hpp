#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

#include "sumkit/errors.hpp"

namespace sumkit {

using DenseVector = std::vector<double>;

inline double dot(const DenseVector& a, const DenseVector& b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double l2_norm(const DenseVector& a) {
    return std::sqrt(dot(a, a));
}

inline bool is_zero_vector(const DenseVector& a) {
    for (double x : a) {
        if (x != 0.0) return false;
    }
    return true;
}

inline bool all_finite(const DenseVector& a) {
    for (double x : a) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

// Minimal row-major dense matrix; just enough for the GRU and scoring head.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    double& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    // y = M x
    DenseVector apply(const DenseVector& x) const {
        assert(static_cast<int>(x.size()) == cols);
        DenseVector y(rows, 0.0);
        for (int r = 0; r < rows; ++r) {
            double s = 0.0;
            const double* row = &a[static_cast<size_t>(r) * cols];
            for (int c = 0; c < cols; ++c) s += row[c] * x[c];
            y[r] = s;
        }
        return y;
    }

    // y = M^T x
    DenseVector apply_transposed(const DenseVector& x) const {
        assert(static_cast<int>(x.size()) == rows);
        DenseVector y(cols, 0.0);
        for (int r = 0; r < rows; ++r) {
            const double* row = &a[static_cast<size_t>(r) * cols];
            for (int c = 0; c < cols; ++c) y[c] += row[c] * x[r];
        }
        return y;
    }

    // M += u v^T
    void add_outer(const DenseVector& u, const DenseVector& v) {
        assert(static_cast<int>(u.size()) == rows && static_cast<int>(v.size()) == cols);
        for (int r = 0; r < rows; ++r) {
            double* row = &a[static_cast<size_t>(r) * cols];
            for (int c = 0; c < cols; ++c) row[c] += u[r] * v[c];
        }
    }
};

inline double sigmoid(double x) {
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

} // namespace sumkit
