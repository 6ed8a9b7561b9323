#include "cugan/matrix.hpp"

#include <cassert>
#include <cmath>

namespace cugan {

bool Matrix::all_finite() const {
    for (double v : data) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    assert(a.cols == b.rows);
    Matrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        const double* arow = a.data.data() + static_cast<std::size_t>(i) * a.cols;
        double* crow = c.data.data() + static_cast<std::size_t>(i) * c.cols;
        for (int k = 0; k < a.cols; ++k) {
            const double aik = arow[k];
            const double* brow = b.data.data() + static_cast<std::size_t>(k) * b.cols;
            for (int j = 0; j < b.cols; ++j) {
                crow[j] += aik * brow[j];
            }
        }
    }
    return c;
}

Matrix matmul_trans_a(const Matrix& a, const Matrix& b) {
    assert(a.rows == b.rows);
    Matrix c(a.cols, b.cols);
    for (int k = 0; k < a.rows; ++k) {
        const double* arow = a.data.data() + static_cast<std::size_t>(k) * a.cols;
        const double* brow = b.data.data() + static_cast<std::size_t>(k) * b.cols;
        for (int i = 0; i < a.cols; ++i) {
            const double aki = arow[i];
            double* crow = c.data.data() + static_cast<std::size_t>(i) * c.cols;
            for (int j = 0; j < b.cols; ++j) {
                crow[j] += aki * brow[j];
            }
        }
    }
    return c;
}

Matrix matmul_trans_b(const Matrix& a, const Matrix& b) {
    assert(a.cols == b.cols);
    Matrix c(a.rows, b.rows);
    for (int i = 0; i < a.rows; ++i) {
        const double* arow = a.data.data() + static_cast<std::size_t>(i) * a.cols;
        double* crow = c.data.data() + static_cast<std::size_t>(i) * c.cols;
        for (int j = 0; j < b.rows; ++j) {
            const double* brow = b.data.data() + static_cast<std::size_t>(j) * b.cols;
            double acc = 0.0;
            for (int k = 0; k < a.cols; ++k) {
                acc += arow[k] * brow[k];
            }
            crow[j] = acc;
        }
    }
    return c;
}

void add_row_broadcast(Matrix& m, std::span<const double> v) {
    assert(static_cast<std::size_t>(m.cols) == v.size());
    for (int i = 0; i < m.rows; ++i) {
        double* row = m.data.data() + static_cast<std::size_t>(i) * m.cols;
        for (int j = 0; j < m.cols; ++j) {
            row[j] += v[j];
        }
    }
}

std::vector<double> matvec(const Matrix& m, std::span<const double> x) {
    assert(static_cast<std::size_t>(m.cols) == x.size());
    std::vector<double> y(static_cast<std::size_t>(m.rows), 0.0);
    for (int i = 0; i < m.rows; ++i) {
        const double* row = m.data.data() + static_cast<std::size_t>(i) * m.cols;
        double acc = 0.0;
        for (int j = 0; j < m.cols; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

std::vector<double> matvec_trans(const Matrix& m, std::span<const double> x) {
    assert(static_cast<std::size_t>(m.rows) == x.size());
    std::vector<double> y(static_cast<std::size_t>(m.cols), 0.0);
    for (int i = 0; i < m.rows; ++i) {
        const double* row = m.data.data() + static_cast<std::size_t>(i) * m.cols;
        const double xi = x[i];
        for (int j = 0; j < m.cols; ++j) y[j] += row[j] * xi;
    }
    return y;
}

double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double l2_norm(std::span<const double> v) {
    return std::sqrt(dot(v, v));
}

} // namespace cugan
