#include "lspecial/bivar.hpp"

#include <algorithm>
#include <vector>

namespace lspecial {

void BivarPoly::add_term(int i, int j, const Scalar& c) {
  if (i < 0 || j < 0) throw Error("BivarPoly: negative exponent");
  if (c.backend() != backend_)
    throw MixedBackendError("BivarPoly: coefficient backend mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Exponent{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void BivarPoly::check_compatible(const BivarPoly& o, const char* op) const {
  if (space_ != o.space_)
    throw SpaceMismatchError(std::string("BivarPoly: variable-space mismatch in ") + op);
  if (backend_ != o.backend_)
    throw MixedBackendError(std::string("BivarPoly: backend mismatch in ") + op);
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r(space_, backend_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
  a.check_compatible(b, "add");
  BivarPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, c);
  return r;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
  a.check_compatible(b, "sub");
  BivarPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, -c);
  return r;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  a.check_compatible(b, "mul");
  BivarPoly r(a.space_, a.backend_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

BivarPoly operator*(const Scalar& s, const BivarPoly& p) {
  if (s.backend() != p.backend_)
    throw MixedBackendError("BivarPoly: scalar backend mismatch");
  BivarPoly r(p.space_, p.backend_);
  for (const auto& [e, c] : p.terms_) r.add_term(e.first, e.second, s * c);
  return r;
}

bool BivarPoly::operator==(const BivarPoly& o) const {
  if (space_ != o.space_ || backend_ != o.backend_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (e != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

Scalar BivarPoly::evaluate(const Scalar& u, const Scalar& v) const {
  const Backend b = common_backend(u, v);
  if (b != backend_)
    throw MixedBackendError("BivarPoly::evaluate: point backend mismatch");
  int maxi = 0, maxj = 0;
  for (const auto& [e, c] : terms_) {
    maxi = std::max(maxi, e.first);
    maxj = std::max(maxj, e.second);
  }
  std::vector<Scalar> up(static_cast<std::size_t>(maxi) + 1, Scalar::one(b));
  std::vector<Scalar> vp(static_cast<std::size_t>(maxj) + 1, Scalar::one(b));
  for (int k = 1; k <= maxi; ++k) up[k] = up[k - 1] * u;
  for (int k = 1; k <= maxj; ++k) vp[k] = vp[k - 1] * v;
  Scalar acc = Scalar::zero(b);
  for (const auto& [e, c] : terms_) acc += c * up[e.first] * vp[e.second];
  return acc;
}

BivarPoly BivarPoly::homogeneous_part(int m) const {
  BivarPoly r(space_, backend_);
  for (const auto& [e, c] : terms_)
    if (e.first + e.second == m) r.terms_.emplace(e, c);
  return r;
}

bool BivarPoly::has_real_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_real()) return false;
  return true;
}

double BivarPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, c.abs());
  return m;
}

BivarPoly BivarPoly::to_approx() const {
  BivarPoly r(space_, Backend::Approx);
  for (const auto& [e, c] : terms_) r.add_term(e.first, e.second, c.to_approx());
  return r;
}

DivisionOutcome divide_with_residual(const BivarPoly& a, const BivarPoly& b,
                                     const ToleranceConfig& tol) {
  tol.validate();
  if (b.is_zero()) throw DivisionByZeroError("bp_divide_exact: division by zero polynomial");
  if (a.space() != b.space())
    throw SpaceMismatchError("bp_divide_exact: variable-space mismatch");
  if (a.backend() != b.backend())
    throw MixedBackendError("bp_divide_exact: backend mismatch");

  const Backend be = a.backend();
  const Exponent lead_b = b.terms().begin()->first;
  const Scalar lead_b_coeff = b.terms().begin()->second;
  const double scale = std::max(1.0, a.max_abs_coeff());

  BivarPoly rem = a;
  BivarPoly q(a.space(), be);
  double dropped = 0.0;

  // Reduce the grlex-leading term at each step; a = b*q exactly forces
  // LT(a) = LT(b)*LT(q), so a non-matching leading monomial means the
  // division fails (up to tolerance on the Approx backend).
  while (!rem.is_zero()) {
    const auto [e, c] = *rem.terms().begin();
    const bool fits = e.first >= lead_b.first && e.second >= lead_b.second;
    if (!fits) {
      if (be == Backend::Exact) return {q, 1.0, false};
      dropped = std::max(dropped, c.abs());
      BivarPoly t = rem;
      t.add_term(e.first, e.second, -c);
      rem = t;
      continue;
    }
    const Scalar f = c / lead_b_coeff;
    q.add_term(e.first - lead_b.first, e.second - lead_b.second, f);
    rem -= BivarPoly::monomial(a.space(), e.first - lead_b.first,
                               e.second - lead_b.second, f) *
           b;
  }
  const double residual = dropped / scale;
  const bool divisible =
      be == Backend::Exact ? dropped == 0.0 : residual <= tol.residual_tol;
  return {q, residual, divisible};
}

std::optional<BivarPoly> bp_divide_exact(const BivarPoly& a, const BivarPoly& b,
                                         const ToleranceConfig& tol) {
  DivisionOutcome out = divide_with_residual(a, b, tol);
  if (!out.divisible) return std::nullopt;
  return out.quotient;
}

std::pair<BivarPoly, BivarPoly> re_im_split(const BivarPoly& p) {
  if (p.space() != VarSpace::XY)
    throw SpaceMismatchError("re_im_split: XY space required");
  BivarPoly p1(VarSpace::XY, p.backend());
  BivarPoly p2(VarSpace::XY, p.backend());
  for (const auto& [e, c] : p.terms()) {
    if (p.backend() == Backend::Exact) {
      const auto& g = c.exact_value();
      p1.add_term(e.first, e.second, Scalar::exact(g.re));
      p2.add_term(e.first, e.second, Scalar::exact(g.im));
    } else {
      const auto z = c.approx_value();
      p1.add_term(e.first, e.second, Scalar::approx(z.real()));
      p2.add_term(e.first, e.second, Scalar::approx(z.imag()));
    }
  }
  return {p1, p2};
}

BivarPoly embed_univar(const UnivarPoly& f, EmbedVar which, VarSpace space) {
  BivarPoly r(space, f.backend());
  const auto& cs = f.coeffs();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const int e = static_cast<int>(k);
    if (which == EmbedVar::FirstVar)
      r.add_term(e, 0, cs[k]);
    else
      r.add_term(0, e, cs[k]);
  }
  return r;
}

}  // namespace lspecial
