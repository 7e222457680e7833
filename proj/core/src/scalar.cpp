#include "lspecial/scalar.hpp"

#include <cmath>

namespace lspecial {

namespace {

const GaussianRational& ex(const Scalar& s) { return s.exact_value(); }

}  // namespace

bool Scalar::is_zero() const {
  if (backend() == Backend::Exact) {
    const auto& g = std::get<GaussianRational>(v_);
    return g.re == 0 && g.im == 0;
  }
  const auto z = std::get<std::complex<double>>(v_);
  return z.real() == 0.0 && z.imag() == 0.0;
}

bool Scalar::is_real() const {
  if (backend() == Backend::Exact) return std::get<GaussianRational>(v_).im == 0;
  return std::get<std::complex<double>>(v_).imag() == 0.0;
}

bool Scalar::is_one() const {
  if (backend() == Backend::Exact) {
    const auto& g = std::get<GaussianRational>(v_);
    return g.re == 1 && g.im == 0;
  }
  const auto z = std::get<std::complex<double>>(v_);
  return z.real() == 1.0 && z.imag() == 0.0;
}

const GaussianRational& Scalar::exact_value() const {
  if (backend() != Backend::Exact)
    throw BackendError("Scalar: exact value requested from Approx scalar");
  return std::get<GaussianRational>(v_);
}

std::complex<double> Scalar::approx_value() const {
  if (backend() != Backend::Approx)
    throw BackendError("Scalar: approx value requested from Exact scalar");
  return std::get<std::complex<double>>(v_);
}

std::complex<double> Scalar::to_complex() const {
  if (backend() == Backend::Exact) {
    const auto& g = std::get<GaussianRational>(v_);
    return {rat_to_double(g.re), rat_to_double(g.im)};
  }
  return std::get<std::complex<double>>(v_);
}

Scalar Scalar::conj() const {
  if (backend() == Backend::Exact) {
    const auto& g = std::get<GaussianRational>(v_);
    return exact(g.re, -g.im);
  }
  return approx(std::conj(std::get<std::complex<double>>(v_)));
}

Scalar Scalar::abs2() const {
  if (backend() == Backend::Exact) {
    const auto& g = std::get<GaussianRational>(v_);
    return exact(g.re * g.re + g.im * g.im);
  }
  return approx(std::norm(std::get<std::complex<double>>(v_)));
}

double Scalar::abs() const { return std::abs(to_complex()); }

Scalar Scalar::operator-() const {
  if (backend() == Backend::Exact) {
    const auto& g = std::get<GaussianRational>(v_);
    return exact(-g.re, -g.im);
  }
  return approx(-std::get<std::complex<double>>(v_));
}

Backend common_backend(const Scalar& a, const Scalar& b) {
  if (a.backend() != b.backend())
    throw MixedBackendError("mixed Exact/Approx operands; promote with to_approx()");
  return a.backend();
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (common_backend(a, b) == Backend::Exact)
    return Scalar::exact(ex(a).re + ex(b).re, ex(a).im + ex(b).im);
  return Scalar::approx(a.approx_value() + b.approx_value());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (common_backend(a, b) == Backend::Exact)
    return Scalar::exact(ex(a).re - ex(b).re, ex(a).im - ex(b).im);
  return Scalar::approx(a.approx_value() - b.approx_value());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (common_backend(a, b) == Backend::Exact) {
    const auto& x = ex(a);
    const auto& y = ex(b);
    return Scalar::exact(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
  }
  return Scalar::approx(a.approx_value() * b.approx_value());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZeroError("Scalar: division by zero");
  if (backend() == Backend::Exact) {
    const auto& g = std::get<GaussianRational>(v_);
    const Rational n = g.re * g.re + g.im * g.im;
    return exact(g.re / n, -g.im / n);
  }
  return approx(1.0 / std::get<std::complex<double>>(v_));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  common_backend(a, b);
  return a * b.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (common_backend(*this, o) == Backend::Exact)
    return std::get<GaussianRational>(v_) == std::get<GaussianRational>(o.v_);
  return std::get<std::complex<double>>(v_) == std::get<std::complex<double>>(o.v_);
}

Scalar pow(const Scalar& base, int n) {
  Scalar r = Scalar::one(base.backend());
  Scalar b = base;
  for (; n > 0; n >>= 1) {
    if (n & 1) r *= b;
    if (n > 1) b *= b;
  }
  return r;
}

}  // namespace lspecial
