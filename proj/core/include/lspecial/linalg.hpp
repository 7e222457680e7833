#ifndef LSPECIAL_LINALG_HPP
#define LSPECIAL_LINALG_HPP

#include <cstddef>
#include <vector>

#include "lspecial/scalar.hpp"

namespace lspecial {

// Dense row-major matrix of Scalars, single backend.
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols, Backend b)
      : rows_(rows), cols_(cols), backend_(b),
        a_(rows * cols, Scalar::zero(b)) {
    if (rows == 0 || cols == 0) throw Error("Matrix: dimensions must be >= 1");
  }

  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Backend backend() const { return backend_; }

  void set(std::size_t r, std::size_t c, const Scalar& v) {
    if (v.backend() != backend_)
      throw MixedBackendError("Matrix: entry backend mismatch");
    at(r, c) = v;
  }

  double max_abs() const;

private:
  std::size_t rows_, cols_;
  Backend backend_;
  std::vector<Scalar> a_;
};

// Basis of the kernel of m. Exact backend: exact Gaussian elimination.
// Approx backend: column-pivoted elimination, a pivot below
// rank_tol * (largest pivot scale) counts as zero.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m,
                                           const ToleranceConfig& tol = {});

std::size_t rank(const Matrix& m, const ToleranceConfig& tol = {});

}  // namespace lspecial

#endif  // LSPECIAL_LINALG_HPP
