#ifndef LSPECIAL_UNIVAR_HPP
#define LSPECIAL_UNIVAR_HPP

#include <optional>
#include <vector>

#include "lspecial/scalar.hpp"

namespace lspecial {

// Dense univariate polynomial, coeffs_[k] is the coefficient of z^k.
// Highest-index coefficient is nonzero unless the polynomial is zero.
class UnivarPoly {
public:
  explicit UnivarPoly(Backend b) : backend_(b) {}
  UnivarPoly(Backend b, std::vector<Scalar> coeffs)
      : backend_(b), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
      if (c.backend() != backend_)
        throw MixedBackendError("UnivarPoly: coefficient backend mismatch");
    trim();
  }

  static UnivarPoly zero(Backend b) { return UnivarPoly(b); }

  Backend backend() const { return backend_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  std::optional<int> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
  }

  Scalar coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size())
      return Scalar::zero(backend_);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  void set_coeff(int k, const Scalar& c) {
    if (k < 0) throw Error("UnivarPoly: negative exponent");
    if (c.backend() != backend_)
      throw MixedBackendError("UnivarPoly: coefficient backend mismatch");
    if (static_cast<std::size_t>(k) >= coeffs_.size()) {
      if (c.is_zero()) return;
      coeffs_.resize(static_cast<std::size_t>(k) + 1, Scalar::zero(backend_));
    }
    coeffs_[static_cast<std::size_t>(k)] = c;
    trim();
  }

  Scalar evaluate(const Scalar& z) const {
    Scalar acc = Scalar::zero(common_backend(z, Scalar::zero(backend_)));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * z + *it;
    return acc;
  }

  UnivarPoly to_approx() const {
    UnivarPoly p(Backend::Approx);
    p.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) p.coeffs_.push_back(c.to_approx());
    return p;
  }

  friend UnivarPoly operator*(const Scalar& s, const UnivarPoly& p) {
    UnivarPoly r(p.backend_);
    for (const auto& c : p.coeffs_) r.coeffs_.push_back(s * c);
    r.trim();
    return r;
  }

  friend UnivarPoly operator-(const UnivarPoly& a, const UnivarPoly& b) {
    if (a.backend_ != b.backend_)
      throw MixedBackendError("UnivarPoly: backend mismatch");
    UnivarPoly r(a.backend_);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    r.coeffs_.assign(n, Scalar::zero(a.backend_));
    for (std::size_t k = 0; k < n; ++k)
      r.coeffs_[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    r.trim();
    return r;
  }

  bool operator==(const UnivarPoly& o) const {
    if (backend_ != o.backend_ || coeffs_.size() != o.coeffs_.size())
      return false;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != o.coeffs_[k]) return false;
    return true;
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  Backend backend_;
  std::vector<Scalar> coeffs_;
};

}  // namespace lspecial

#endif  // LSPECIAL_UNIVAR_HPP
