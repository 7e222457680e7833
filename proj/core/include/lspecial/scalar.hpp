#ifndef LSPECIAL_SCALAR_HPP
#define LSPECIAL_SCALAR_HPP

#include <complex>
#include <variant>

#include "lspecial/rational.hpp"

namespace lspecial {

enum class Backend { Exact, Approx };

struct ToleranceConfig {
  double residual_tol = 1e-9;   // coefficientwise residual bound
  double rank_tol = 1e-8;       // relative pivot threshold for Approx elimination
  double bisection_tol = 1e-14; // resolution on beta for root bracketing

  void validate() const {
    if (residual_tol <= 0 || rank_tol <= 0 || bisection_tol <= 0)
      throw Error("ToleranceConfig: all tolerances must be strictly positive");
  }
};

// A Gaussian rational: re + i*im with rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  bool operator==(const GaussianRational&) const = default;
};

// Complex number with an Exact (Gaussian rational) or Approx (binary64 pair)
// backend. Mixed-backend arithmetic throws; promotion is explicit via
// to_approx().
class Scalar {
public:
  Scalar() : v_(GaussianRational{}) {}

  static Scalar exact(Rational re, Rational im = Rational(0)) {
    Scalar s;
    s.v_ = GaussianRational{std::move(re), std::move(im)};
    return s;
  }
  static Scalar exact_int(long re, long im = 0) {
    return exact(Rational(re), Rational(im));
  }
  static Scalar approx(double re, double im = 0.0) {
    Scalar s;
    s.v_ = std::complex<double>(re, im);
    return s;
  }
  static Scalar approx(std::complex<double> z) {
    Scalar s;
    s.v_ = z;
    return s;
  }
  static Scalar zero(Backend b) {
    return b == Backend::Exact ? exact_int(0) : approx(0.0);
  }
  static Scalar one(Backend b) {
    return b == Backend::Exact ? exact_int(1) : approx(1.0);
  }

  Backend backend() const {
    return std::holds_alternative<GaussianRational>(v_) ? Backend::Exact
                                                        : Backend::Approx;
  }

  bool is_zero() const;
  bool is_real() const;
  bool is_one() const;

  const GaussianRational& exact_value() const;
  std::complex<double> approx_value() const;

  // Backend-agnostic double views.
  std::complex<double> to_complex() const;
  double re_as_double() const { return to_complex().real(); }
  double im_as_double() const { return to_complex().imag(); }

  Scalar to_approx() const { return approx(to_complex()); }

  Scalar conj() const;
  Scalar abs2() const;  // |z|^2 as a real Scalar on the same backend
  double abs() const;   // |z| as binary64 regardless of backend

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  Scalar inverse() const;

  // Exact comparison within one backend; mixed backends throw.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
  std::variant<GaussianRational, std::complex<double>> v_;
};

// Checks both operands share a backend, throws MixedBackendError otherwise.
Backend common_backend(const Scalar& a, const Scalar& b);

// Integer power, n >= 0.
Scalar pow(const Scalar& base, int n);

}  // namespace lspecial

#endif  // LSPECIAL_SCALAR_HPP
