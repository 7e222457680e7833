#include "lspecial/gcd.hpp"

#include <algorithm>
#include <vector>

namespace lspecial {

namespace {

// Univariate polynomials over Q, index = power of x, zero = empty vector.
using PolyX = std::vector<Rational>;
// Polynomials in (Q[x])[y], index = power of y.
using PolyXY = std::vector<PolyX>;

void px_trim(PolyX& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

PolyX px_mul(const PolyX& a, const PolyX& b) {
  if (a.empty() || b.empty()) return {};
  PolyX r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  px_trim(r);
  return r;
}

PolyX px_sub(const PolyX& a, const PolyX& b) {
  PolyX r = a;
  if (b.size() > r.size()) r.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  px_trim(r);
  return r;
}

// Division in Q[x]; returns {quotient, remainder}.
std::pair<PolyX, PolyX> px_divrem(const PolyX& a, const PolyX& b) {
  if (b.empty()) throw DivisionByZeroError("px_divrem: zero divisor");
  PolyX r = a, q;
  const std::size_t db = b.size() - 1;
  const Rational& lb = b.back();
  while (r.size() > db || (r.size() == b.size() && !r.empty())) {
    if (r.size() < b.size()) break;
    const std::size_t k = r.size() - b.size();
    const Rational f = r.back() / lb;
    if (q.size() < k + 1) q.resize(k + 1, Rational(0));
    q[k] += f;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + k] -= f * b[i];
    px_trim(r);
  }
  px_trim(q);
  return {q, r};
}

// Canonical associate: integer coprime coefficients, positive leading one.
PolyX px_canonical(const PolyX& p) {
  if (p.empty()) return {};
  BigInt den_lcm = 1, num_gcd = 0;
  for (const auto& c : p)
    if (c != 0) den_lcm = lcm(den_lcm, denominator(c));
  PolyX r = p;
  for (auto& c : r) c *= Rational(den_lcm);
  for (const auto& c : r)
    if (c != 0) num_gcd = gcd(num_gcd, numerator(c));
  if (num_gcd != 0)
    for (auto& c : r) c /= Rational(num_gcd);
  if (r.back() < 0)
    for (auto& c : r) c = -c;
  return r;
}

PolyX px_gcd(PolyX a, PolyX b) {
  while (!b.empty()) {
    PolyX r = px_divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return px_canonical(a);
}

void pxy_trim(PolyXY& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int pxy_deg_y(const PolyXY& p) { return static_cast<int>(p.size()) - 1; }

PolyXY pxy_mul_px(const PolyXY& p, const PolyX& f) {
  PolyXY r;
  r.reserve(p.size());
  for (const auto& c : p) r.push_back(px_mul(c, f));
  pxy_trim(r);
  return r;
}

PolyXY pxy_sub(const PolyXY& a, const PolyXY& b) {
  PolyXY r = a;
  if (b.size() > r.size()) r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = px_sub(r[i], b[i]);
  pxy_trim(r);
  return r;
}

PolyXY pxy_shift_y(const PolyXY& p, int k) {
  if (p.empty()) return {};
  PolyXY r(p.size() + static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < p.size(); ++i) r[i + k] = p[i];
  return r;
}

PolyX pxy_content(const PolyXY& p) {
  PolyX c;
  for (const auto& coeff : p)
    if (!coeff.empty()) c = px_gcd(c, coeff);
  return c;
}

// Exact coefficientwise division by a polynomial in x.
PolyXY pxy_div_px(const PolyXY& p, const PolyX& d) {
  PolyXY r;
  r.reserve(p.size());
  for (const auto& c : p) {
    if (c.empty()) {
      r.push_back({});
      continue;
    }
    auto [q, rem] = px_divrem(c, d);
    if (!rem.empty()) throw Error("pxy_div_px: inexact division");
    r.push_back(std::move(q));
  }
  pxy_trim(r);
  return r;
}

PolyXY pxy_primitive(const PolyXY& p) {
  if (p.empty()) return {};
  return pxy_div_px(p, pxy_content(p));
}

// Pseudo-remainder of A by B in y (B nonzero, deg_y B <= deg_y A allowed).
PolyXY pxy_prem(PolyXY r, const PolyXY& b) {
  const PolyX& lb = b.back();
  const int db = pxy_deg_y(b);
  while (!r.empty() && pxy_deg_y(r) >= db) {
    const int k = pxy_deg_y(r) - db;
    const PolyX lr = r.back();
    r = pxy_sub(pxy_mul_px(r, lb), pxy_shift_y(pxy_mul_px(b, lr), k));
  }
  return r;
}

// Gcd of content-free inputs via a primitive pseudo-remainder sequence.
PolyXY pxy_gcd_pp(PolyXY a, PolyXY b) {
  if (pxy_deg_y(a) < pxy_deg_y(b)) std::swap(a, b);
  while (true) {
    if (b.empty()) return pxy_primitive(a);
    if (pxy_deg_y(b) == 0) {
      // content-free inputs: a y-degree-0 remainder means coprime in y
      return PolyXY{PolyX{Rational(1)}};
    }
    PolyXY r = pxy_prem(a, b);
    a = std::move(b);
    b = pxy_primitive(r);
  }
}

PolyXY to_pxy(const BivarPoly& p) {
  PolyXY r;
  for (const auto& [e, c] : p.terms()) {
    const auto& g = c.exact_value();
    const std::size_t j = static_cast<std::size_t>(e.second);
    const std::size_t i = static_cast<std::size_t>(e.first);
    if (r.size() <= j) r.resize(j + 1);
    if (r[j].size() <= i) r[j].resize(i + 1, Rational(0));
    r[j][i] += g.re;
  }
  for (auto& c : r) px_trim(c);
  pxy_trim(r);
  return r;
}

BivarPoly from_pxy(const PolyXY& p, VarSpace space) {
  BivarPoly r(space, Backend::Exact);
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < p[j].size(); ++i)
      if (p[j][i] != 0)
        r.add_term(static_cast<int>(i), static_cast<int>(j),
                   Scalar::exact(p[j][i]));
  return r;
}

void check_real_exact(const BivarPoly& p, const char* who) {
  if (p.backend() != Backend::Exact)
    throw BackendError(std::string(who) + ": Exact backend required");
  if (!p.has_real_coeffs())
    throw BackendError(std::string(who) + ": real coefficients required");
}

}  // namespace

BivarPoly make_primitive_real(const BivarPoly& p) {
  check_real_exact(p, "make_primitive_real");
  if (p.is_zero()) throw ZeroPolynomialError("make_primitive_real: zero polynomial");
  BigInt den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : p.terms())
    den_lcm = lcm(den_lcm, denominator(c.exact_value().re));
  for (const auto& [e, c] : p.terms())
    num_gcd = gcd(num_gcd, numerator(c.exact_value().re * Rational(den_lcm)));
  Rational scale = Rational(den_lcm) / Rational(num_gcd);
  if (p.terms().begin()->second.exact_value().re * scale < 0) scale = -scale;
  return Scalar::exact(scale) * p;
}

BivarPoly bp_gcd_real(const BivarPoly& a, const BivarPoly& b) {
  check_real_exact(a, "bp_gcd_real");
  check_real_exact(b, "bp_gcd_real");
  if (a.space() != b.space())
    throw SpaceMismatchError("bp_gcd_real: variable-space mismatch");
  if (a.is_zero() && b.is_zero())
    throw ZeroPolynomialError("bp_gcd_real: gcd(0, 0)");
  if (a.is_zero()) return make_primitive_real(b);
  if (b.is_zero()) return make_primitive_real(a);

  PolyXY pa = to_pxy(a), pb = to_pxy(b);
  const PolyX cont_a = pxy_content(pa), cont_b = pxy_content(pb);
  const PolyX cont_g = px_gcd(cont_a, cont_b);
  const PolyXY pp_g = pxy_gcd_pp(pxy_div_px(pa, cont_a), pxy_div_px(pb, cont_b));
  const PolyXY g = pxy_mul_px(pp_g, cont_g);
  return make_primitive_real(from_pxy(g, a.space()));
}

}  // namespace lspecial
