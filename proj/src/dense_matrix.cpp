#include "quospec/dense_matrix.hpp"

#include <cmath>
#include <string>

#if __has_include(<cblas-openblas.h>)
#include <cblas-openblas.h>
#elif __has_include(<cblas.h>)
#include <cblas.h>
#else
#error "no cblas header found"
#endif

namespace quospec {

DenseMatrix DenseMatrix::create(std::int64_t rows, std::int64_t cols,
                                std::vector<Complex> data, bool integral) {
  if (rows < 1 || cols < 1 ||
      data.size() != static_cast<std::size_t>(rows) * cols) {
    fail(ErrorCode::InvalidParams, "dense matrix shape mismatch");
  }
  for (const Complex& z : data) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      fail(ErrorCode::InvalidParams, "dense matrix entries must be finite");
    }
  }
  DenseMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.data = std::move(data);
  m.integral = integral;
  return m;
}

DenseMatrix DenseMatrix::zero(std::int64_t rows, std::int64_t cols) {
  DenseMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.data.assign(static_cast<std::size_t>(rows) * cols, Complex(0.0));
  return m;
}

DenseMatrix DenseMatrix::identity(std::int64_t n) {
  DenseMatrix m = zero(n, n);
  for (std::int64_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  m.integral = true;
  return m;
}

double DenseMatrix::max_abs() const {
  double best = 0.0;
  for (const Complex& z : data) best = std::max(best, std::abs(z));
  return best;
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data) s += std::norm(z);
  return std::sqrt(s);
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) {
    fail(ErrorCode::InvalidParams, "matrix product shape mismatch");
  }
  DenseMatrix c = DenseMatrix::zero(a.rows, b.cols);
  const Complex one(1.0), zero(0.0);
  cblas_zgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans,
              static_cast<int>(a.rows), static_cast<int>(b.cols),
              static_cast<int>(a.cols), &one, a.data.data(),
              static_cast<int>(a.cols), b.data.data(),
              static_cast<int>(b.cols), &zero, c.data.data(),
              static_cast<int>(c.cols));
  return c;
}

DenseMatrix matrix_power(const DenseMatrix& a, std::int64_t e) {
  if (!a.square()) {
    fail(ErrorCode::NonSquare, "matrix power requires a square matrix");
  }
  if (e < 0) fail(ErrorCode::InvalidParams, "matrix power must be >= 0");
  DenseMatrix acc = DenseMatrix::identity(a.rows);
  DenseMatrix base = a;
  while (e > 0) {
    if (e & 1) acc = multiply(acc, base);
    if (e >>= 1) base = multiply(base, base);
  }
  return acc;
}

Complex trace(const DenseMatrix& a) {
  if (!a.square()) {
    fail(ErrorCode::NonSquare, "trace requires a square matrix");
  }
  Complex t = 0.0;
  for (std::int64_t i = 0; i < a.rows; ++i) t += a.at(i, i);
  return t;
}

}  // namespace quospec
