#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lspecial/errors.hpp"
#include "lspecial/quartic.hpp"

using namespace lspecial;

namespace {

// independent of alpha_of_beta: solve alpha^2 (1 + k^2) = 1/beta directly
AlphaPair alpha_oracle(double beta) {
  const double phi = 2.0 * std::acos(-1.0) / 5.0;
  const double k = (1.0 + beta) * (1.0 - std::cos(phi)) / ((1.0 - beta) * std::sin(phi));
  AlphaPair out;
  out.alpha = 1.0 / std::sqrt(beta * (1.0 + k * k));
  out.alpha_star = k * out.alpha;
  return out;
}

}  // namespace

TEST_CASE("phi is the fifth-circle angle") {
  CHECK(quartic_phi() == doctest::Approx(2.0 * std::acos(-1.0) / 5.0).epsilon(1e-15));
}

TEST_CASE("alpha solves the constraint system") {
  for (double beta : {0.01, 0.0394058, 0.1, 0.5, 0.9}) {
    const AlphaPair a = alpha_of_beta(beta);
    const AlphaPair o = alpha_oracle(beta);
    CHECK(a.alpha == doctest::Approx(o.alpha).epsilon(1e-12));
    CHECK(a.alpha_star == doctest::Approx(o.alpha_star).epsilon(1e-12));
    CHECK(a.alpha * a.alpha + a.alpha_star * a.alpha_star ==
          doctest::Approx(1.0 / beta).epsilon(1e-12));
    CHECK(a.alpha > 0.0);
    CHECK(a.alpha_star > 0.0);
  }
  // frozen values at beta = 0.01
  const AlphaPair a = alpha_of_beta(0.01);
  CHECK(a.alpha == doctest::Approx(8.0337).epsilon(1e-4));
  CHECK(a.alpha_star == doctest::Approx(5.9548).epsilon(1e-4));
}

TEST_CASE("gamma factors have modulus sqrt(beta) and conjugate in p") {
  for (double beta : {0.01, 0.0394058, 0.25, 0.7}) {
    const AlphaPair a = alpha_of_beta(beta);
    for (int p = 0; p <= 1; ++p)
      for (int q = 0; q <= 1; ++q) {
        const auto g = gamma_pq(a.alpha, a.alpha_star, beta, p, q);
        CHECK(std::abs(g) == doctest::Approx(std::sqrt(beta)).epsilon(1e-12));
      }
  }
}

TEST_CASE("gamma conjugation across the p index") {
  const double beta = 0.0394058;
  const AlphaPair a = alpha_of_beta(beta);
  for (int q = 0; q <= 1; ++q) {
    const auto g0 = gamma_pq(a.alpha, a.alpha_star, beta, 0, q);
    const auto g1 = gamma_pq(a.alpha, a.alpha_star, beta, 1, q);
    CHECK(std::abs(g1 - std::conj(g0)) < 1e-14);
  }
}

TEST_CASE("c and gamma factors share their affine numerator") {
  // both are built from 1 + s with s = (-1)^q b a* + (-1)^{p+1} i b a:
  // c_pq = (1 + s)/(1 - b) and gamma_pq = (b + s)/(1 + s), so
  // gamma_pq * (1 + s) = beta + s must hold
  for (double beta : {0.01, 0.0394058, 0.3}) {
    const AlphaPair a = alpha_of_beta(beta);
    for (int p = 0; p <= 1; ++p)
      for (int q = 0; q <= 1; ++q) {
        const auto c = c_pq(a.alpha, a.alpha_star, beta, p, q);
        const auto g = gamma_pq(a.alpha, a.alpha_star, beta, p, q);
        const std::complex<double> one_plus_s = c * (1.0 - beta);
        const std::complex<double> s = one_plus_s - 1.0;
        CHECK(std::abs(g * one_plus_s - (beta + s)) < 1e-13);
      }
    // degenerate alpha = alpha* = 0 collapses every factor to 1/(1-beta)
    CHECK(std::abs(c_pq(0.0, 0.0, beta, 0, 1) - 1.0 / (1.0 - beta)) < 1e-15);
  }
}

TEST_CASE("golden g values at the bracket endpoints") {
  const GPair lo = g_funcs(0.01);
  CHECK(lo.g1.real() == doctest::Approx(7.09).epsilon(2e-3));
  CHECK(lo.g1.imag() == doctest::Approx(7.04).epsilon(2e-3));
  CHECK(lo.g2.real() > lo.g1.real());  // bracket sign at the low end
  const GPair hi = g_funcs(0.1);
  CHECK(hi.g2.real() < hi.g1.real());  // and the flip at the high end
}

TEST_CASE("bisection locates the matching beta") {
  const double b0 = solve_beta();
  CHECK(b0 > 0.039);
  CHECK(b0 < 0.040);
  CHECK(b0 == doctest::Approx(0.0394058).epsilon(1e-5));
  CHECK(1.0 / (b0 * b0) == doctest::Approx(643.992).epsilon(1e-5));
  const GPair g = g_funcs(b0);
  CHECK(std::abs(g.g1.real() - g.g2.real()) < 1e-12);
  CHECK(g.g1.imag() > 0.0);
  CHECK(g.g2.imag() > 0.0);
}

TEST_CASE("bisection refuses a bracket without a sign change") {
  CHECK_THROWS_AS(solve_beta(0.2, 0.3), NoSignChangeError);
  CHECK_THROWS_AS(solve_beta(0.05, 0.01), Error);  // inverted bracket
}

TEST_CASE("factor phase table") {
  CHECK(factor_phase(0, 0) == 2);
  CHECK(factor_phase(0, 1) == 1);
  CHECK(factor_phase(1, 0) == 3);
  CHECK(factor_phase(1, 1) == 4);
}

TEST_CASE("the full construction certifies itself") {
  const QuarticConstruction qc = build_construction(solve_beta());
  CHECK(qc.residuals.max_residual() < 1e-9);
  CHECK(qc.residuals.passed(1e-9));
  CHECK(qc.alpha == doctest::Approx(3.96).epsilon(1e-2));
  CHECK(qc.x2y2_coeff == doctest::Approx(-11.97).epsilon(5e-3));
  // curve coefficients: monic in x^4, closed-form middle, 1/beta^2 tail
  CHECK(qc.curve.coeff(4, 0).to_complex().real() == doctest::Approx(1.0));
  CHECK(qc.curve.coeff(2, 2).to_complex().real() ==
        doctest::Approx(qc.x2y2_coeff).epsilon(1e-12));
  CHECK(qc.curve.coeff(0, 4).to_complex().real() ==
        doctest::Approx(1.0 / (qc.beta0 * qc.beta0)).epsilon(1e-12));
  CHECK(std::abs(qc.gamma) == doctest::Approx(std::sqrt(qc.beta0)).epsilon(1e-12));
  // pair shape: degree-5 with vanishing middle coefficients
  CHECK(qc.f1.degree() == 5);
  CHECK(qc.f2.degree() == 5);
  for (int k : {0, 2, 3, 4}) {
    CHECK(qc.f1.coeff(k).abs() < 1e-12);
    CHECK(qc.f2.coeff(k).abs() < 1e-12);
  }
}

TEST_CASE("verification is sensitive to perturbations") {
  QuarticConstruction qc = build_construction(solve_beta());
  SUBCASE("perturbed gamma breaks the alignment residual") {
    qc.gamma *= 1.0 + 1e-6;
    const VerificationRecord r = verify_construction(qc);
    CHECK(r.gamma_align > 1e-8);
  }
  SUBCASE("perturbed curve breaks the factorization identity") {
    qc.curve.add_term(2, 2, Scalar::approx(1e-5));
    const VerificationRecord r = verify_construction(qc);
    CHECK(r.max_residual() > 1e-8);
  }
  SUBCASE("perturbed pair breaks the boundary identity") {
    qc.f1.set_coeff(1, qc.f1.coeff(1) + Scalar::approx(1e-6));
    const VerificationRecord r = verify_construction(qc);
    CHECK(r.max_residual() > 1e-8);
  }
}

TEST_CASE("construction rejects beta outside the unit interval") {
  CHECK_THROWS_AS(build_construction(0.0), BetaOutOfRangeError);
  CHECK_THROWS_AS(build_construction(1.2), BetaOutOfRangeError);
}

TEST_CASE("reference curve used for comparison reporting") {
  const BivarPoly ref = published_reference_curve();
  CHECK(ref.coeff(4, 0).to_complex().real() == doctest::Approx(1.0));
  CHECK(ref.coeff(2, 2).to_complex().real() == doctest::Approx(34.913));
  CHECK(ref.coeff(0, 4).to_complex().real() == doctest::Approx(643.992));
  // its middle coefficient deliberately differs from the closed form
  const QuarticConstruction qc = build_construction(solve_beta());
  CHECK(std::abs(ref.coeff(2, 2).to_complex().real() - qc.x2y2_coeff) > 40.0);
}
