#include "emovae/numeric/matrix.hpp"

#include <cmath>
#include <string>

#include "emovae/error.hpp"

namespace emovae {

namespace {

std::string shape_str(const Matrix& m) {
  return std::to_string(m.rows) + "x" + std::to_string(m.cols);
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (!a.same_shape(b)) {
    throw DimensionError(std::string(op) + ": shape mismatch " + shape_str(a) +
                         " vs " + shape_str(b));
  }
}

}  // namespace

Matrix::Matrix(std::size_t r, std::size_t c, double fill_value)
    : rows(r), cols(c), data(r * c, fill_value) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> init) {
  rows = init.size();
  cols = rows == 0 ? 0 : init.begin()->size();
  data.reserve(rows * cols);
  for (const auto& r : init) {
    if (r.size() != cols) {
      throw DimensionError("Matrix initializer rows have unequal lengths");
    }
    data.insert(data.end(), r.begin(), r.end());
  }
}

Matrix Matrix::row_vector(std::span<const double> values) {
  Matrix m;
  m.rows = 1;
  m.cols = values.size();
  m.data.assign(values.begin(), values.end());
  return m;
}

bool Matrix::all_finite() const {
  for (double v : data) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void Matrix::fill(double v) {
  std::fill(data.begin(), data.end(), v);
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) {
    throw DimensionError("matmul: inner dimensions disagree, " + shape_str(a) +
                         " * " + shape_str(b));
  }
  Matrix c(a.rows, b.cols, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* arow = a.row(i);
    double* crow = c.row(i);
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double aik = arow[k];
      const double* brow = b.row(k);
      for (std::size_t j = 0; j < b.cols; ++j) {
        crow[j] += aik * brow[j];
      }
    }
  }
  return c;
}

Matrix matmul_at_b(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows) {
    throw DimensionError("matmul_at_b: row counts disagree, " + shape_str(a) +
                         "T * " + shape_str(b));
  }
  Matrix c(a.cols, b.cols, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* arow = a.row(i);
    const double* brow = b.row(i);
    for (std::size_t r = 0; r < a.cols; ++r) {
      const double air = arow[r];
      double* crow = c.row(r);
      for (std::size_t j = 0; j < b.cols; ++j) {
        crow[j] += air * brow[j];
      }
    }
  }
  return c;
}

Matrix matmul_a_bt(const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) {
    throw DimensionError("matmul_a_bt: column counts disagree, " +
                         shape_str(a) + " * " + shape_str(b) + "T");
  }
  Matrix c(a.rows, b.rows, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* arow = a.row(i);
    double* crow = c.row(i);
    for (std::size_t j = 0; j < b.rows; ++j) {
      const double* brow = b.row(j);
      double acc = 0.0;
      for (std::size_t k = 0; k < a.cols; ++k) {
        acc += arow[k] * brow[k];
      }
      crow[j] = acc;
    }
  }
  return c;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      t(j, i) = m(i, j);
    }
  }
  return t;
}

void add_inplace(Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  for (std::size_t i = 0; i < a.data.size(); ++i) a.data[i] += b.data[i];
}

void sub_inplace(Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "sub");
  for (std::size_t i = 0; i < a.data.size(); ++i) a.data[i] -= b.data[i];
}

void scale_inplace(Matrix& a, double s) {
  for (double& v : a.data) v *= s;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "hadamard");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] *= b.data[i];
  return c;
}

}  // namespace emovae
