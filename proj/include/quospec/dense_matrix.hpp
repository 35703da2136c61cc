#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "quospec/error.hpp"

namespace quospec {

using Complex = std::complex<double>;

/// Row-major dense complex matrix. Construction through `create` rejects
/// non-finite entries. `integral` tags matrices whose entries are known to
/// be (real) integers end to end, e.g. regular representations of integral
/// group-ring matrices; the integrality diagnostics require it.
struct DenseMatrix {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<Complex> data;  // row-major, rows*cols entries
  bool integral = false;

  static DenseMatrix create(std::int64_t rows, std::int64_t cols,
                            std::vector<Complex> data, bool integral = false);
  static DenseMatrix zero(std::int64_t rows, std::int64_t cols);
  static DenseMatrix identity(std::int64_t n);

  Complex& at(std::int64_t i, std::int64_t j) { return data[i * cols + j]; }
  const Complex& at(std::int64_t i, std::int64_t j) const {
    return data[i * cols + j];
  }
  bool square() const { return rows == cols; }

  /// Largest entry magnitude.
  double max_abs() const;
  double frobenius_norm() const;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matrix_power(const DenseMatrix& a, std::int64_t e);
Complex trace(const DenseMatrix& a);

}  // namespace quospec
