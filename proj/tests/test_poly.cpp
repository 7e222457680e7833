#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lspecial/bivar.hpp"
#include "lspecial/gcd.hpp"
#include "lspecial/univar.hpp"

using namespace lspecial;

namespace {

std::mt19937 rng(777);

Scalar random_rat() {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  return Scalar::exact(Rational(num(rng), den(rng)));
}

BivarPoly random_real_poly(int max_deg, VarSpace s = VarSpace::XY) {
  BivarPoly p(s, Backend::Exact);
  for (int i = 0; i <= max_deg; ++i)
    for (int j = 0; i + j <= max_deg; ++j) p.add_term(i, j, random_rat());
  if (p.is_zero()) p.add_term(0, 0, Scalar::one(Backend::Exact));
  return p;
}

}  // namespace

TEST_CASE("univariate basics: trim, degree, evaluation") {
  UnivarPoly f(Backend::Exact);
  CHECK(!f.degree().has_value());
  f.set_coeff(3, Scalar::exact_int(2));
  f.set_coeff(0, Scalar::exact_int(-1));
  CHECK(f.degree() == 3);
  f.set_coeff(3, Scalar::zero(Backend::Exact));
  CHECK(f.degree() == 0);  // leading zero trimmed away
  f.set_coeff(2, Scalar::exact_int(5));
  // f = 5 z^2 - 1 at z = 1/2 + i: 5(z^2) - 1 with z^2 = -3/4 + i
  const Scalar z = Scalar::exact(Rational(1, 2), Rational(1));
  CHECK(f.evaluate(z) == Scalar::exact(Rational(-19, 4), Rational(5)));
}

TEST_CASE("bivariate term iteration is grlex descending") {
  BivarPoly p(VarSpace::XY, Backend::Exact);
  p.add_term(0, 0, Scalar::exact_int(1));
  p.add_term(1, 1, Scalar::exact_int(2));
  p.add_term(0, 2, Scalar::exact_int(3));
  p.add_term(2, 0, Scalar::exact_int(4));
  std::vector<Exponent> order;
  for (const auto& [e, c] : p.terms()) order.push_back(e);
  CHECK(order == std::vector<Exponent>{{2, 0}, {1, 1}, {0, 2}, {0, 0}});
  CHECK(p.degree() == 2);
}

TEST_CASE("zero coefficients are never stored") {
  BivarPoly p(VarSpace::XY, Backend::Exact);
  p.add_term(1, 0, Scalar::exact_int(3));
  p.add_term(1, 0, Scalar::exact_int(-3));
  CHECK(p.is_zero());
  CHECK(!p.degree().has_value());
}

TEST_CASE("ring operations agree with pointwise evaluation") {
  for (int it = 0; it < 25; ++it) {
    const BivarPoly a = random_real_poly(3), b = random_real_poly(3);
    const Scalar x = random_rat(), y = random_rat();
    CHECK((a + b).evaluate(x, y) == a.evaluate(x, y) + b.evaluate(x, y));
    CHECK((a * b).evaluate(x, y) == a.evaluate(x, y) * b.evaluate(x, y));
    CHECK((a - b).evaluate(x, y) == a.evaluate(x, y) - b.evaluate(x, y));
  }
}

TEST_CASE("spaces do not mix") {
  const BivarPoly a = random_real_poly(2, VarSpace::XY);
  const BivarPoly b = random_real_poly(2, VarSpace::ZW);
  CHECK_THROWS_AS(a + b, SpaceMismatchError);
  CHECK_THROWS_AS(a * b, SpaceMismatchError);
}

TEST_CASE("homogeneous part selects one total degree") {
  BivarPoly p(VarSpace::XY, Backend::Exact);
  p.add_term(2, 0, Scalar::exact_int(1));
  p.add_term(0, 2, Scalar::exact_int(2));
  p.add_term(1, 0, Scalar::exact_int(-7));
  const BivarPoly h2 = p.homogeneous_part(2);
  CHECK(h2.coeff(2, 0) == Scalar::exact_int(1));
  CHECK(h2.coeff(0, 2) == Scalar::exact_int(2));
  CHECK(h2.coeff(1, 0).is_zero());
  CHECK(p.homogeneous_part(5).is_zero());
}

TEST_CASE("geometric-factor division: z^5 - g^5 w^5 over z - g w") {
  const Scalar g = Scalar::exact(Rational(2, 3), Rational(1, 4));
  BivarPoly num(VarSpace::ZW, Backend::Exact);
  num.add_term(5, 0, Scalar::one(Backend::Exact));
  num.add_term(0, 5, -pow(g, 5));
  BivarPoly den(VarSpace::ZW, Backend::Exact);
  den.add_term(1, 0, Scalar::one(Backend::Exact));
  den.add_term(0, 1, -g);
  const DivisionOutcome out = divide_with_residual(num, den);
  REQUIRE(out.divisible);
  CHECK(out.residual == 0.0);
  for (int k = 0; k <= 4; ++k) CHECK(out.quotient.coeff(4 - k, k) == pow(g, k));
  CHECK(out.quotient * den == num);
}

TEST_CASE("exact division fails cleanly on non-multiples") {
  BivarPoly a(VarSpace::XY, Backend::Exact);
  a.add_term(2, 0, Scalar::exact_int(1));
  a.add_term(0, 0, Scalar::exact_int(1));  // x^2 + 1
  BivarPoly b(VarSpace::XY, Backend::Exact);
  b.add_term(1, 0, Scalar::exact_int(1));
  b.add_term(0, 1, Scalar::exact_int(-1));  // x - y
  CHECK(!divide_with_residual(a, b).divisible);
  CHECK(!bp_divide_exact(a, b).has_value());
  const auto q = bp_divide_exact(a * b, b);
  REQUIRE(q.has_value());
  CHECK(*q == a);
}

TEST_CASE("approx division tolerates and reports small residuals") {
  BivarPoly a(VarSpace::XY, Backend::Approx);
  a.add_term(2, 0, Scalar::approx(1.0));
  a.add_term(0, 2, Scalar::approx(-1.0));
  a.add_term(0, 0, Scalar::approx(3e-12));  // noise below residual_tol
  BivarPoly b(VarSpace::XY, Backend::Approx);
  b.add_term(1, 0, Scalar::approx(1.0));
  b.add_term(0, 1, Scalar::approx(1.0));
  const DivisionOutcome out = divide_with_residual(a, b);
  CHECK(out.divisible);
  CHECK(out.residual > 0.0);
  CHECK(out.residual < 1e-9);
}

TEST_CASE("real/imaginary split reassembles the polynomial") {
  BivarPoly p(VarSpace::XY, Backend::Exact);
  p.add_term(2, 0, Scalar::exact(Rational(1), Rational(2)));
  p.add_term(1, 1, Scalar::exact(Rational(0), Rational(-3)));
  p.add_term(0, 0, Scalar::exact(Rational(-1, 2), Rational(0)));
  const auto [re, im] = re_im_split(p);
  CHECK(re.has_real_coeffs());
  CHECK(im.has_real_coeffs());
  CHECK(re + Scalar::exact_int(0, 1) * im == p);
  CHECK(re.coeff(2, 0) == Scalar::exact_int(1));
  CHECK(im.coeff(1, 1) == Scalar::exact_int(-3));
  const BivarPoly q = random_real_poly(2, VarSpace::ZW);
  CHECK_THROWS_AS(re_im_split(q), SpaceMismatchError);
}

TEST_CASE("embedding a univariate polynomial into the bivariate algebra") {
  UnivarPoly f(Backend::Exact);
  f.set_coeff(0, Scalar::exact_int(1));
  f.set_coeff(3, Scalar::exact_int(-2));
  const BivarPoly e1 = embed_univar(f, EmbedVar::FirstVar, VarSpace::ZW);
  const BivarPoly e2 = embed_univar(f, EmbedVar::SecondVar, VarSpace::ZW);
  CHECK(e1.coeff(3, 0) == Scalar::exact_int(-2));
  CHECK(e2.coeff(0, 3) == Scalar::exact_int(-2));
  CHECK(e1.coeff(0, 0) == Scalar::exact_int(1));
  const Scalar z = random_rat();
  CHECK(e1.evaluate(z, Scalar::zero(Backend::Exact)) == f.evaluate(z));
}

TEST_CASE("canonical primitive form: integer coprime, positive leading") {
  BivarPoly p(VarSpace::XY, Backend::Exact);
  p.add_term(2, 0, Scalar::exact(Rational(-2, 3)));
  p.add_term(0, 1, Scalar::exact(Rational(4, 9)));
  const BivarPoly c = make_primitive_real(p);
  CHECK(c.coeff(2, 0) == Scalar::exact_int(3));
  CHECK(c.coeff(0, 1) == Scalar::exact_int(-2));
  // scaling by any nonzero rational leaves the canonical form unchanged
  CHECK(make_primitive_real(Scalar::exact(Rational(-7, 11)) * p) == c);
}

TEST_CASE("bivariate gcd on factored examples") {
  BivarPoly xpy(VarSpace::XY, Backend::Exact);
  xpy.add_term(1, 0, Scalar::exact_int(1));
  xpy.add_term(0, 1, Scalar::exact_int(1));
  BivarPoly xmy(VarSpace::XY, Backend::Exact);
  xmy.add_term(1, 0, Scalar::exact_int(1));
  xmy.add_term(0, 1, Scalar::exact_int(-1));
  // gcd(x^2 - y^2, (x + y)^2) = x + y
  CHECK(bp_gcd_real(xpy * xmy, xpy * xpy) == xpy);
  // coprime inputs give gcd 1
  CHECK(bp_gcd_real(xpy, xmy).degree() == 0);
  // gcd with zero is the primitive part of the other argument
  const BivarPoly z = BivarPoly::zero(VarSpace::XY, Backend::Exact);
  CHECK(bp_gcd_real(Scalar::exact(Rational(3, 2)) * xpy, z) == xpy);
  CHECK_THROWS_AS(bp_gcd_real(z, z), ZeroPolynomialError);
}

TEST_CASE("gcd extracts a planted common factor") {
  for (int it = 0; it < 15; ++it) {
    const BivarPoly g = make_primitive_real(random_real_poly(2));
    const BivarPoly a = random_real_poly(2), b = random_real_poly(2);
    const BivarPoly d = bp_gcd_real(a * g, b * g);
    // the planted factor divides the gcd of the products
    CHECK(bp_divide_exact(d, g).has_value());
    CHECK(bp_divide_exact(a * g, d).has_value());
    CHECK(bp_divide_exact(b * g, d).has_value());
  }
}
