#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace emovae {

// Dense row-major matrix of 64-bit floats. A row vector is a 1 x n matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill_value = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> init);

  static Matrix row_vector(std::span<const double> values);

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  double* row(std::size_t r) { return data.data() + r * cols; }
  const double* row(std::size_t r) const { return data.data() + r * cols; }
  std::span<const double> row_span(std::size_t r) const { return {row(r), cols}; }

  std::size_t size() const { return rows * cols; }
  bool same_shape(const Matrix& other) const {
    return rows == other.rows && cols == other.cols;
  }
  bool all_finite() const;
  void fill(double v);
};

Matrix matmul(const Matrix& a, const Matrix& b);
// aT * b without materializing the transpose.
Matrix matmul_at_b(const Matrix& a, const Matrix& b);
// a * bT without materializing the transpose.
Matrix matmul_a_bt(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

void add_inplace(Matrix& a, const Matrix& b);
void sub_inplace(Matrix& a, const Matrix& b);
void scale_inplace(Matrix& a, double s);
Matrix hadamard(const Matrix& a, const Matrix& b);

}  // namespace emovae
