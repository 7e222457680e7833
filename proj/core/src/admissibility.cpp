#include "lspecial/admissibility.hpp"

#include <algorithm>

#include "lspecial/linalg.hpp"

namespace lspecial {

BivarPoly real_defining(const BivarPoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("real_defining: zero polynomial");
  if (p.backend() != Backend::Exact)
    throw BackendError("real_defining: Exact backend required");
  auto [p1, p2] = re_im_split(p);
  if (p2.is_zero()) return make_primitive_real(p1);
  if (p1.is_zero()) return make_primitive_real(p2);
  return bp_gcd_real(p1, p2);
}

PairCheck verify_pair(const UnivarPoly& f1, const UnivarPoly& f2,
                      const BetaParam& beta, const BivarPoly& curve,
                      const ToleranceConfig& tol) {
  PairCheck out;
  out.cofactor = BivarPoly::zero(VarSpace::XY, curve.backend());
  if (curve.is_zero() || !curve.has_real_coeffs())
    throw Error("verify_pair: curve must be a nonzero real polynomial");
  if (f1.is_constant() || f2.is_constant()) {
    out.reason = "non-constancy violated";
    return out;
  }
  const BivarPoly g = pair_to_curve(f1, f2, beta);
  DivisionOutcome div = divide_with_residual(g, curve, tol);
  out.residual = div.residual;
  if (!div.divisible) {
    out.reason = "curve does not divide the transformed pair difference";
    return out;
  }
  out.cofactor = div.quotient;
  out.ok = true;
  return out;
}

namespace {

struct SystemLayout {
  int d = 0;        // degree bound for F1, F2
  int n = 0;        // curve degree
  int rdeg = 0;     // degree bound for R'
  // column order: a_0 (optional), a_1..a_d, b_0..b_d, c_(u,v) grlex
  std::vector<Exponent> r_exponents;

  int num_cols(bool with_a0) const {
    return (with_a0 ? d + 1 : d) + (d + 1) + static_cast<int>(r_exponents.size());
  }
};

int monomial_index(int i, int j, int d) {
  // row index of monomial z^i z_b^j among all i + j <= d
  const int t = i + j;
  return t * (t + 1) / 2 + j;
}

Matrix assemble(const BivarPoly& s_curve, const SystemLayout& lay, Backend bk,
                bool with_a0) {
  const int rows = (lay.d + 1) * (lay.d + 2) / 2;
  Matrix m(static_cast<std::size_t>(rows),
           static_cast<std::size_t>(lay.num_cols(with_a0)), bk);
  int col = 0;
  const Scalar one = Scalar::one(bk);
  for (int k = with_a0 ? 0 : 1; k <= lay.d; ++k, ++col)
    m.at(monomial_index(k, 0, lay.d), col) = one;
  for (int k = 0; k <= lay.d; ++k, ++col)
    m.at(monomial_index(0, k, lay.d), col) = -one;
  for (const auto& [u, v] : lay.r_exponents) {
    for (const auto& [e, c] : s_curve.terms())
      m.at(monomial_index(u + e.first, v + e.second, lay.d), col) -= c;
    ++col;
  }
  return m;
}

// Divides the whole solution vector by its largest-modulus pair coefficient
// so candidates are scale-normalized deterministically.
void normalize_candidate(std::vector<Scalar>& v) {
  std::size_t best = 0;
  double best_abs = -1.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double a = v[k].abs();
    if (a > best_abs + 1e-15) {
      best_abs = a;
      best = k;
    }
  }
  if (best_abs <= 0.0) return;
  const Scalar inv = v[best].inverse();
  for (auto& s : v) s *= inv;
}

}  // namespace

ObstructionReport obstruction_search(const BivarPoly& curve,
                                     const BetaParam& beta, int d,
                                     const ToleranceConfig& tol) {
  if (curve.is_zero() || !curve.has_real_coeffs())
    throw Error("obstruction_search: curve must be a nonzero real polynomial");
  if (curve.space() != VarSpace::XY)
    throw SpaceMismatchError("obstruction_search: XY-space curve required");
  const int n = *curve.degree();
  if (d < n) throw Error("obstruction_search: degree bound d must be >= deg curve");
  const Backend bk = curve.backend();
  if (bk != beta.backend())
    throw MixedBackendError("obstruction_search: curve/beta backend mismatch");

  SystemLayout lay;
  lay.d = d;
  lay.n = n;
  lay.rdeg = d - n;
  for (int t = 0; t <= lay.rdeg; ++t)
    for (int j = 0; j <= t; ++j) lay.r_exponents.push_back({t - j, j});

  const BivarPoly s_curve = sbeta_forward(curve, beta);

  ObstructionReport report;
  const auto full_kernel = nullspace(assemble(s_curve, lay, bk, true), tol);
  const auto reduced_kernel = nullspace(assemble(s_curve, lay, bk, false), tol);
  report.total_nullity = static_cast<int>(full_kernel.size());
  report.trivial_dim =
      static_cast<int>(full_kernel.size() - reduced_kernel.size());

  for (auto v : reduced_kernel) {
    normalize_candidate(v);
    CandidatePair cand;
    cand.f1 = UnivarPoly(bk);
    cand.f2 = UnivarPoly(bk);
    cand.cofactor = BivarPoly::zero(VarSpace::ZW, bk);
    int col = 0;
    for (int k = 1; k <= d; ++k, ++col) cand.f1.set_coeff(k, v[col]);
    for (int k = 0; k <= d; ++k, ++col) cand.f2.set_coeff(k, v[col]);
    for (const auto& [u, w] : lay.r_exponents) cand.cofactor.add_term(u, w, v[col++]);

    const bool cofactor_nonzero =
        bk == Backend::Exact
            ? !cand.cofactor.is_zero()
            : cand.cofactor.max_abs_coeff() > tol.residual_tol;
    if (!cofactor_nonzero) continue;
    // A pair of lower degree sits inside every higher-degree system; only a
    // pair attaining the bound witnesses existence at degree d (candidates
    // are normalized, so on the Approx backend coefficients below
    // residual_tol count as zero).
    auto effective_degree = [&](const UnivarPoly& f) {
      int deg = -1;
      for (int k = 0; k <= d; ++k) {
        const Scalar c = f.coeff(k);
        const bool nonzero = bk == Backend::Exact
                                 ? !c.is_zero()
                                 : c.abs() > tol.residual_tol;
        if (nonzero) deg = k;
      }
      return deg;
    };
    if (std::max(effective_degree(cand.f1), effective_degree(cand.f2)) != d)
      continue;
    const PairCheck check = verify_pair(cand.f1, cand.f2, beta, curve, tol);
    if (check.ok) report.genuine_solutions.push_back(std::move(cand));
  }
  report.exists_admissible = !report.genuine_solutions.empty();
  return report;
}

int leading_obstruction(int n, const BetaParam& beta,
                        const ToleranceConfig& tol) {
  if (n < 2) throw Error("leading_obstruction: n >= 2 required");
  const Backend bk = beta.backend();
  const Scalar b = beta.scalar();

  // Row for exponent j of y: even j constrains (Im a) + b^{-j} (Im b) = 0,
  // odd j constrains (Re a) + b^{-j} (Re b) = 0. Unknowns (a1, a2, a3, a4)
  // = (Re a, Im a, Re b, Im b).
  std::vector<int> js{0, 1, n - 1, n};
  js.erase(std::unique(js.begin(), js.end()), js.end());

  Matrix m(js.size(), 4, bk);
  for (std::size_t r = 0; r < js.size(); ++r) {
    const int j = js[r];
    const Scalar bj = pow(b.inverse(), j);
    if (j % 2 == 0) {
      m.at(r, 1) = Scalar::one(bk);
      m.at(r, 3) = bj;
    } else {
      m.at(r, 0) = Scalar::one(bk);
      m.at(r, 2) = bj;
    }
  }
  return static_cast<int>(nullspace(m, tol).size());
}

bool is_diagonal(const BivarPoly& p) {
  if (p.is_zero()) return true;
  const int n = *p.degree();
  for (const auto& [e, c] : p.terms())
    if (!(e == Exponent{n, 0} || e == Exponent{0, n})) return false;
  return true;
}

bool diagonal_divides(const BivarPoly& p, const BivarPoly& q,
                      const ToleranceConfig& tol) {
  if (p.is_zero() || q.is_zero() || !is_diagonal(p) || !is_diagonal(q))
    throw NotDiagonalError("diagonal_divides: nonzero diagonal polynomials required");
  return divide_with_residual(p, q, tol).divisible;
}

}  // namespace lspecial
