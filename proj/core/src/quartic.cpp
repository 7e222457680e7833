#include "lspecial/quartic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lspecial/substitution.hpp"
#include "lspecial/trace.hpp"

namespace lspecial {

double quartic_phi() { return 2.0 * std::numbers::pi / 5.0; }

namespace {

void check_beta(double beta) {
  if (!(beta > 0.0 && beta < 1.0))
    throw BetaOutOfRangeError("beta must satisfy 0 < beta < 1");
}

double sign_q(int q) { return q == 0 ? 1.0 : -1.0; }
double sign_p1(int p) { return p == 0 ? -1.0 : 1.0; }  // (-1)^{p+1}

}  // namespace

AlphaPair alpha_of_beta(double beta) {
  check_beta(beta);
  const double phi = quartic_phi();
  const double k = (1.0 + beta) * (1.0 - std::cos(phi)) /
                   ((1.0 - beta) * std::sin(phi));
  AlphaPair ap;
  ap.alpha = 1.0 / std::sqrt(beta * (1.0 + k * k));
  ap.alpha_star = k * ap.alpha;
  return ap;
}

std::complex<double> gamma_pq(double alpha, double alpha_star, double beta,
                              int p, int q) {
  const std::complex<double> tail(sign_q(q) * beta * alpha_star,
                                  sign_p1(p) * beta * alpha);
  const std::complex<double> den = 1.0 + tail;
  if (std::abs(den) == 0.0)
    throw DivisionByZeroError("gamma_pq: vanishing denominator");
  return (beta + tail) / den;
}

std::complex<double> c_pq(double alpha, double alpha_star, double beta, int p,
                          int q) {
  const std::complex<double> tail(sign_q(q) * beta * alpha_star,
                                  sign_p1(p) * beta * alpha);
  return (1.0 + tail) / (1.0 - beta);
}

GPair g_funcs(double beta) {
  check_beta(beta);
  const AlphaPair ap = alpha_of_beta(beta);
  const std::complex<double> rot = std::polar(1.0, quartic_phi());
  GPair g;
  g.g1 = gamma_pq(ap.alpha, ap.alpha_star, beta, 1, 0) / beta;
  g.g2 = rot * gamma_pq(ap.alpha, ap.alpha_star, beta, 0, 0) / beta;
  return g;
}

double solve_beta(double bracket_lo, double bracket_hi, double tol) {
  if (!(tol > 0.0)) throw ToleranceError("solve_beta: tol must be positive");
  check_beta(bracket_lo);
  check_beta(bracket_hi);
  if (bracket_lo >= bracket_hi)
    throw Error("solve_beta: bracket_lo must be < bracket_hi");

  auto h = [](double beta) {
    const GPair g = g_funcs(beta);
    return g.g1.real() - g.g2.real();
  };

  double lo = bracket_lo, hi = bracket_hi;
  double h_lo = h(lo), h_hi = h(hi);
  if (h_lo == 0.0) hi = lo;
  else if (h_hi == 0.0) lo = hi;
  else if ((h_lo < 0.0) == (h_hi < 0.0))
    throw NoSignChangeError("solve_beta: Re g1 - Re g2 has equal signs at bracket ends");

  int iter = 0;
  while (hi - lo > tol) {
    if (++iter > 200)
      throw ToleranceError("solve_beta: bisection failed to reach tolerance");
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // at floating resolution
    const double h_mid = h(mid);
    if (h_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((h_mid < 0.0) == (h_lo < 0.0)) {
      lo = mid;
      h_lo = h_mid;
    } else {
      hi = mid;
    }
  }
  const double beta0 = 0.5 * (lo + hi);
  const GPair g = g_funcs(beta0);
  if (!(g.g1.imag() * g.g2.imag() > 0.0))
    throw VerificationError("solve_beta: Im g1 * Im g2 <= 0 at the root");
  return beta0;
}

int factor_phase(int p, int q) {
  static constexpr int table[2][2] = {{2, 1}, {3, 4}};
  return table[p][q];
}

double VerificationRecord::max_residual() const {
  return std::max({gamma_align, factor_identities, full_identity, modulus,
                   boundary_eval});
}

QuarticConstruction build_construction(double beta0) {
  check_beta(beta0);
  QuarticConstruction qc;
  qc.beta0 = beta0;
  qc.phi = quartic_phi();
  const AlphaPair ap = alpha_of_beta(beta0);
  qc.alpha = ap.alpha;
  qc.alpha_star = ap.alpha_star;
  if (!(qc.alpha > 0.0 && qc.alpha_star > 0.0))
    throw VerificationError("build_construction: alpha, alpha_star must be positive");
  if (std::abs(qc.alpha * qc.alpha + qc.alpha_star * qc.alpha_star -
               1.0 / beta0) > 1e-12 / beta0)
    throw VerificationError("build_construction: alpha^2 + alpha_star^2 != 1/beta");
  if (!boundedness_check(beta0, qc.alpha))
    throw VerificationError("build_construction: alpha >= 1/sqrt(beta), unbounded level set");

  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      qc.C_pq[p][q] = c_pq(qc.alpha, qc.alpha_star, beta0, p, q);
  qc.C = qc.C_pq[0][0] * qc.C_pq[0][1] * qc.C_pq[1][0] * qc.C_pq[1][1];
  qc.gamma = std::polar(1.0, -qc.phi) *
             gamma_pq(qc.alpha, qc.alpha_star, beta0, 0, 1);
  if (std::abs(std::abs(qc.gamma) - std::sqrt(beta0)) > 1e-12)
    throw VerificationError("build_construction: |gamma| != sqrt(beta)");

  qc.x2y2_coeff = 2.0 / beta0 - 4.0 * qc.alpha * qc.alpha;
  qc.curve = BivarPoly(VarSpace::XY, Backend::Approx);
  qc.curve.add_term(4, 0, Scalar::approx(1.0));
  qc.curve.add_term(2, 2, Scalar::approx(qc.x2y2_coeff));
  qc.curve.add_term(0, 4, Scalar::approx(1.0 / (beta0 * beta0)));

  qc.f1 = UnivarPoly(Backend::Approx);
  qc.f1.set_coeff(1, Scalar::approx(-1.0));
  qc.f1.set_coeff(5, Scalar::approx(qc.C));
  qc.f2 = UnivarPoly(Backend::Approx);
  qc.f2.set_coeff(1, Scalar::approx(-qc.gamma));
  const std::complex<double> g5 =
      qc.gamma * qc.gamma * qc.gamma * qc.gamma * qc.gamma;
  qc.f2.set_coeff(5, Scalar::approx(qc.C * g5));

  qc.residuals = verify_construction(qc);
  return qc;
}

VerificationRecord verify_construction(const QuarticConstruction& qc,
                                       double tol) {
  if (!(tol > 0.0)) throw ToleranceError("verify_construction: tol must be positive");
  VerificationRecord rec;
  const double beta = qc.beta0;
  const BetaParam bp = BetaParam::from_double(beta);

  // (i) phase alignment of the four gamma_pq with powers of e^{i phi}
  // (iv) modulus |gamma_pq| = sqrt(beta)
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      const std::complex<double> gpq =
          gamma_pq(qc.alpha, qc.alpha_star, beta, p, q);
      const std::complex<double> aligned =
          std::polar(1.0, factor_phase(p, q) * qc.phi) * qc.gamma;
      rec.gamma_align = std::max(rec.gamma_align, std::abs(gpq - aligned));
      rec.modulus =
          std::max(rec.modulus, std::abs(std::abs(gpq) - std::sqrt(beta)));
    }

  // (ii) S_beta(x - ((-1)^p a + (-1)^q i a*) y) = C_pq (z - gamma_pq z_b)
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      const std::complex<double> root(
          (p == 0 ? 1.0 : -1.0) * qc.alpha,
          (q == 0 ? 1.0 : -1.0) * qc.alpha_star);
      BivarPoly lin(VarSpace::XY, Backend::Approx);
      lin.add_term(1, 0, Scalar::approx(1.0));
      lin.add_term(0, 1, Scalar::approx(-root));
      const BivarPoly lhs = sbeta_forward(lin, bp);
      const std::complex<double> cpq =
          c_pq(qc.alpha, qc.alpha_star, beta, p, q);
      const std::complex<double> gpq =
          gamma_pq(qc.alpha, qc.alpha_star, beta, p, q);
      BivarPoly rhs(VarSpace::ZW, Backend::Approx);
      rhs.add_term(1, 0, Scalar::approx(cpq));
      rhs.add_term(0, 1, Scalar::approx(-cpq * gpq));
      rec.factor_identities =
          std::max(rec.factor_identities, (lhs - rhs).max_abs_coeff());
    }

  // (iii) full identity: inverse transform of F1 - F2 equals ell * (P - 1)
  {
    const BivarPoly lhs = pair_to_curve(qc.f1, qc.f2, bp);
    BivarPoly lin(VarSpace::ZW, Backend::Approx);
    lin.add_term(1, 0, Scalar::approx(1.0));
    lin.add_term(0, 1, Scalar::approx(-qc.gamma));
    const BivarPoly ell = sbeta_inverse(lin, bp);
    const BivarPoly rhs =
        ell * (qc.curve - BivarPoly::constant(VarSpace::XY, Scalar::approx(1.0)));
    rec.full_identity = (lhs - rhs).max_abs_coeff();
  }

  // (v) boundary spot checks on 32 traced points of P = 1
  {
    const CurveTrace tr = trace_level(qc.curve, 1.0, 32);
    for (const auto& pt : tr.points) {
      const std::complex<double> z(pt[0], pt[1]);
      const std::complex<double> zb(pt[0], pt[1] / beta);
      const std::complex<double> v1 =
          qc.f1.evaluate(Scalar::approx(z)).approx_value();
      const std::complex<double> v2 =
          qc.f2.evaluate(Scalar::approx(zb)).approx_value();
      rec.boundary_eval = std::max(
          rec.boundary_eval, std::abs(v1 - v2) / std::max(1.0, std::abs(v1)));
    }
  }
  return rec;
}

BivarPoly published_reference_curve() {
  BivarPoly p(VarSpace::XY, Backend::Approx);
  p.add_term(4, 0, Scalar::approx(1.0));
  p.add_term(2, 2, Scalar::approx(34.913));
  p.add_term(0, 4, Scalar::approx(643.992));
  return p;
}

}  // namespace lspecial
