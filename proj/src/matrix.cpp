#include "gdmcf/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "gdmcf/threads.hpp"

namespace gdmcf {

bool Matrix::all_finite() const {
  for (double v : a) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul: inner dimensions differ");
  Matrix c(a.rows, b.cols);
  parallel_rows(a.rows, [&](int r0, int r1) {
    for (int i = r0; i < r1; ++i) {
      const double* ai = a.row(i);
      double* ci = c.row(i);
      for (int k = 0; k < a.cols; ++k) {
        double aik = ai[k];
        if (aik == 0.0) continue;
        const double* bk = b.row(k);
        for (int j = 0; j < b.cols; ++j) ci[j] += aik * bk[j];
      }
    }
  });
  return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows) throw std::invalid_argument("matmul_tn: row counts differ");
  Matrix c(a.cols, b.cols);
  // accumulate rank-1 updates row by row; deterministic order
  for (int k = 0; k < a.rows; ++k) {
    const double* ak = a.row(k);
    const double* bk = b.row(k);
    for (int i = 0; i < a.cols; ++i) {
      double aki = ak[i];
      if (aki == 0.0) continue;
      double* ci = c.row(i);
      for (int j = 0; j < b.cols; ++j) ci[j] += aki * bk[j];
    }
  }
  return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) throw std::invalid_argument("matmul_nt: col counts differ");
  Matrix c(a.rows, b.rows);
  parallel_rows(a.rows, [&](int r0, int r1) {
    for (int i = r0; i < r1; ++i) {
      const double* ai = a.row(i);
      double* ci = c.row(i);
      for (int j = 0; j < b.rows; ++j) ci[j] = dot(ai, b.row(j), a.cols);
    }
  });
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

void axpy_inplace(Matrix& y, double alpha, const Matrix& x) {
  if (!y.same_shape(x)) throw std::invalid_argument("axpy: shape mismatch");
  for (size_t i = 0; i < y.a.size(); ++i) y.a[i] += alpha * x.a[i];
}

double dot(const double* x, const double* y, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double norm2(const double* x, int n) { return std::sqrt(dot(x, x, n)); }

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a.a.size(); ++i) m = std::max(m, std::fabs(a.a[i] - b.a[i]));
  return m;
}

}  // namespace gdmcf
