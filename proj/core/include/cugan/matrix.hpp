#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cugan {

/// Dense row-major matrix of doubles. Batches are stored one sample per row.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    std::span<double> row(int r) { return {data.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)}; }
    std::span<const double> row(int r) const { return {data.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)}; }

    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
    bool all_finite() const;
};

/// C = A * B
Matrix matmul(const Matrix& a, const Matrix& b);
/// C = A^T * B
Matrix matmul_trans_a(const Matrix& a, const Matrix& b);
/// C = A * B^T
Matrix matmul_trans_b(const Matrix& a, const Matrix& b);

void add_row_broadcast(Matrix& m, std::span<const double> v);

/// y = M^T x (for power iteration on weight matrices).
std::vector<double> matvec_trans(const Matrix& m, std::span<const double> x);
std::vector<double> matvec(const Matrix& m, std::span<const double> x);

double dot(std::span<const double> a, std::span<const double> b);
double l2_norm(std::span<const double> v);

} // namespace cugan
