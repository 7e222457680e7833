#ifndef LSPECIAL_SUBSTITUTION_HPP
#define LSPECIAL_SUBSTITUTION_HPP

#include "lspecial/bivar.hpp"
#include "lspecial/univar.hpp"

namespace lspecial {

// The parameter beta of the operator normal form, real with 0 < beta < 1.
class BetaParam {
public:
  explicit BetaParam(const Scalar& value);

  static BetaParam from_rational(const Rational& r) {
    return BetaParam(Scalar::exact(r));
  }
  static BetaParam from_double(double v) { return BetaParam(Scalar::approx(v)); }

  const Scalar& scalar() const { return value_; }
  Backend backend() const { return value_.backend(); }
  double as_double() const { return value_.re_as_double(); }

private:
  Scalar value_;
};

// P(x, y) -> P(x(z, z_b), y(z, z_b)) with x = (z - b z_b)/(1 - b),
// y = i b (z - z_b)/(1 - b). Linear, multiplicative, degree-preserving.
BivarPoly sbeta_forward(const BivarPoly& p, const BetaParam& beta);

// Q(z, z_b) -> Q(x + iy, x + (i/b) y); the exact inverse of sbeta_forward.
BivarPoly sbeta_inverse(const BivarPoly& q, const BetaParam& beta);

// The complex polynomial in (x, y) whose real zero set contains the curve
// defined by the pair: inverse transform of F1(z) - F2(z_b).
BivarPoly pair_to_curve(const UnivarPoly& f1, const UnivarPoly& f2,
                        const BetaParam& beta);

}  // namespace lspecial

#endif  // LSPECIAL_SUBSTITUTION_HPP
