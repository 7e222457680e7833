#ifndef LSPECIAL_QUARTIC_HPP
#define LSPECIAL_QUARTIC_HPP

#include <array>
#include <complex>

#include "lspecial/bivar.hpp"
#include "lspecial/univar.hpp"

namespace lspecial {

// Angle phi = 2*pi/5 used throughout the quartic construction.
double quartic_phi();

struct AlphaPair {
  double alpha = 0.0;
  double alpha_star = 0.0;
};

// Positive solution of alpha_star = k(beta) * alpha, alpha^2 + alpha_star^2
// = 1/beta, with k = (1+beta)(1-cos phi)/((1-beta) sin phi).
AlphaPair alpha_of_beta(double beta);

// (beta + (-1)^q beta a* + (-1)^{p+1} i beta a) /
// (1 + (-1)^q beta a* + (-1)^{p+1} i beta a); modulus sqrt(beta).
std::complex<double> gamma_pq(double alpha, double alpha_star, double beta,
                              int p, int q);

// (1-beta)^{-1} (1 + (-1)^q beta a* + (-1)^{p+1} i beta a).
std::complex<double> c_pq(double alpha, double alpha_star, double beta, int p,
                          int q);

struct GPair {
  std::complex<double> g1;
  std::complex<double> g2;
};

// g1 = gamma_{1,0}(alpha(beta), beta)/beta,
// g2 = e^{i phi} gamma_{0,0}(alpha(beta), beta)/beta.
GPair g_funcs(double beta);

// Bisection root of Re g1(beta) = Re g2(beta) on the bracket; also checks
// Im g1, Im g2 > 0 at the root.
double solve_beta(double bracket_lo = 0.01, double bracket_hi = 0.1,
                  double tol = 1e-14);

struct VerificationRecord {
  double gamma_align = 0.0;       // max |gamma_pq - e^{i f(p,q) phi} gamma|
  double factor_identities = 0.0; // four linear-factor coefficient identities
  double full_identity = 0.0;     // transformed pair vs cofactor * (P - 1)
  double modulus = 0.0;           // max ||gamma_pq| - sqrt(beta)|
  double boundary_eval = 0.0;     // F1(z) = F2(z_b) at traced boundary points

  double max_residual() const;
  bool passed(double tol) const { return max_residual() < tol; }
};

struct QuarticConstruction {
  double beta0 = 0.0;
  double alpha = 0.0;
  double alpha_star = 0.0;
  double phi = 0.0;
  std::complex<double> gamma;
  std::complex<double> C;
  std::array<std::array<std::complex<double>, 2>, 2> C_pq{};
  BivarPoly curve{VarSpace::XY, Backend::Approx};  // homogeneous P
  double x2y2_coeff = 0.0;                         // 2/beta - 4 alpha^2
  UnivarPoly f1{Backend::Approx};
  UnivarPoly f2{Backend::Approx};
  VerificationRecord residuals;
};

// Exponent table f(p,q) aligning the four linear factors with the fifth
// roots of unity: f(0,0)=2, f(0,1)=1, f(1,0)=3, f(1,1)=4.
int factor_phase(int p, int q);

QuarticConstruction build_construction(double beta0);

VerificationRecord verify_construction(const QuarticConstruction& qc,
                                       double tol = 1e-9);

// Reference curve printed alongside the published construction,
// x^4 + 34.913 x^2 y^2 + 643.992 y^4; kept for comparison in reports.
BivarPoly published_reference_curve();

}  // namespace lspecial

#endif  // LSPECIAL_QUARTIC_HPP
