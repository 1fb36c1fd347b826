#pragma once

#include <cstddef>
#include <vector>

namespace gdmcf {

// Dense row-major double matrix. Small by design: the library only needs
// plain storage plus the handful of products used by the model.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

  double& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  double* row(int r) { return a.data() + static_cast<size_t>(r) * cols; }
  const double* row(int r) const { return a.data() + static_cast<size_t>(r) * cols; }

  size_t size() const { return a.size(); }
  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
  bool all_finite() const;
};

// C = A * B
Matrix matmul(const Matrix& a, const Matrix& b);
// C = A^T * B
Matrix matmul_tn(const Matrix& a, const Matrix& b);
// C = A * B^T
Matrix matmul_nt(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

// y += alpha * x (shape-checked)
void axpy_inplace(Matrix& y, double alpha, const Matrix& x);

double dot(const double* x, const double* y, int n);
double norm2(const double* x, int n);

double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace gdmcf
