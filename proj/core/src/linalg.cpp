#include "lspecial/linalg.hpp"

#include <algorithm>
#include <utility>

namespace lspecial {

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, v.abs());
  return m;
}

namespace {

struct Rref {
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::size_t> pivot_cols;  // pivot column of row k
};

// Reduced row echelon form. Pivot selection: exact backend takes any nonzero
// entry; approx backend takes the entry of largest modulus in the column and
// treats pivots below rank_tol * max|M| as zero.
Rref reduce(const Matrix& m, const ToleranceConfig& tol) {
  tol.validate();
  const Backend b = m.backend();
  const std::size_t nr = m.rows(), nc = m.cols();
  Rref out;
  out.rows.resize(nr);
  for (std::size_t r = 0; r < nr; ++r) {
    out.rows[r].reserve(nc);
    for (std::size_t c = 0; c < nc; ++c) out.rows[r].push_back(m.at(r, c));
  }
  const double zero_thresh =
      b == Backend::Approx ? tol.rank_tol * std::max(m.max_abs(), 0.0) : 0.0;

  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    // pivot search
    std::size_t best = nr;
    double best_abs = zero_thresh;
    for (std::size_t r = row; r < nr; ++r) {
      const Scalar& e = out.rows[r][col];
      if (b == Backend::Exact) {
        if (!e.is_zero()) {
          best = r;
          break;
        }
      } else {
        const double a = e.abs();
        if (a > best_abs) {
          best_abs = a;
          best = r;
        }
      }
    }
    if (best == nr) continue;  // no usable pivot in this column
    std::swap(out.rows[row], out.rows[best]);

    const Scalar inv = out.rows[row][col].inverse();
    for (std::size_t c = col; c < nc; ++c) out.rows[row][c] *= inv;
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == row) continue;
      const Scalar f = out.rows[r][col];
      if (f.is_zero()) continue;
      for (std::size_t c = col; c < nc; ++c)
        out.rows[r][c] -= f * out.rows[row][c];
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

}  // namespace

std::size_t rank(const Matrix& m, const ToleranceConfig& tol) {
  return reduce(m, tol).pivot_cols.size();
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& m,
                                           const ToleranceConfig& tol) {
  const Rref rref = reduce(m, tol);
  const std::size_t nc = m.cols();
  const Backend b = m.backend();

  std::vector<bool> is_pivot(nc, false);
  for (std::size_t c : rref.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t fc = 0; fc < nc; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Scalar> v(nc, Scalar::zero(b));
    v[fc] = Scalar::one(b);
    for (std::size_t k = 0; k < rref.pivot_cols.size(); ++k)
      v[rref.pivot_cols[k]] = -rref.rows[k][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lspecial
