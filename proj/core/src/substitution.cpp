#include "lspecial/substitution.hpp"

#include <algorithm>
#include <vector>

namespace lspecial {

namespace {

bool beta_in_range(const Scalar& v) {
  if (!v.is_real()) return false;
  if (v.backend() == Backend::Exact) {
    const Rational& r = v.exact_value().re;
    return r > 0 && r < 1;
  }
  const double d = v.approx_value().real();
  return d > 0.0 && d < 1.0;
}

// Substitutes u for the first variable and v for the second.
BivarPoly substitute(const BivarPoly& p, const BivarPoly& u, const BivarPoly& v,
                     VarSpace target) {
  const Backend b = p.backend();
  int maxi = 0, maxj = 0;
  for (const auto& [e, c] : p.terms()) {
    maxi = std::max(maxi, e.first);
    maxj = std::max(maxj, e.second);
  }
  std::vector<BivarPoly> up(1, BivarPoly::constant(target, Scalar::one(b)));
  std::vector<BivarPoly> vp(1, BivarPoly::constant(target, Scalar::one(b)));
  for (int k = 1; k <= maxi; ++k) up.push_back(up.back() * u);
  for (int k = 1; k <= maxj; ++k) vp.push_back(vp.back() * v);
  BivarPoly r(target, b);
  for (const auto& [e, c] : p.terms()) r += c * (up[e.first] * vp[e.second]);
  return r;
}

}  // namespace

BetaParam::BetaParam(const Scalar& value) : value_(value) {
  if (!beta_in_range(value_))
    throw BetaOutOfRangeError("BetaParam: beta must be real with 0 < beta < 1");
}

BivarPoly sbeta_forward(const BivarPoly& p, const BetaParam& beta) {
  if (p.space() != VarSpace::XY)
    throw SpaceMismatchError("sbeta_forward: XY-space polynomial required");
  if (p.backend() != beta.backend())
    throw MixedBackendError("sbeta_forward: polynomial/beta backend mismatch");
  const Backend bk = p.backend();
  const Scalar b = beta.scalar();
  const Scalar one = Scalar::one(bk);
  const Scalar inv1mb = (one - b).inverse();
  const Scalar i = bk == Backend::Exact ? Scalar::exact(Rational(0), Rational(1))
                                        : Scalar::approx(0.0, 1.0);
  // x = (z - b z_b)/(1-b), y = i b (z - z_b)/(1-b)
  BivarPoly x(VarSpace::ZW, bk);
  x.add_term(1, 0, inv1mb);
  x.add_term(0, 1, -(b * inv1mb));
  BivarPoly y(VarSpace::ZW, bk);
  y.add_term(1, 0, i * b * inv1mb);
  y.add_term(0, 1, -(i * b * inv1mb));
  return substitute(p, x, y, VarSpace::ZW);
}

BivarPoly sbeta_inverse(const BivarPoly& q, const BetaParam& beta) {
  if (q.space() != VarSpace::ZW)
    throw SpaceMismatchError("sbeta_inverse: ZW-space polynomial required");
  if (q.backend() != beta.backend())
    throw MixedBackendError("sbeta_inverse: polynomial/beta backend mismatch");
  const Backend bk = q.backend();
  const Scalar i = bk == Backend::Exact ? Scalar::exact(Rational(0), Rational(1))
                                        : Scalar::approx(0.0, 1.0);
  // z = x + i y, z_b = x + (i/b) y
  BivarPoly z(VarSpace::XY, bk);
  z.add_term(1, 0, Scalar::one(bk));
  z.add_term(0, 1, i);
  BivarPoly zb(VarSpace::XY, bk);
  zb.add_term(1, 0, Scalar::one(bk));
  zb.add_term(0, 1, i / beta.scalar());
  return substitute(q, z, zb, VarSpace::XY);
}

BivarPoly pair_to_curve(const UnivarPoly& f1, const UnivarPoly& f2,
                        const BetaParam& beta) {
  if (f1.backend() != f2.backend())
    throw MixedBackendError("pair_to_curve: pair backend mismatch");
  const BivarPoly g = embed_univar(f1, EmbedVar::FirstVar, VarSpace::ZW) -
                      embed_univar(f2, EmbedVar::SecondVar, VarSpace::ZW);
  return sbeta_inverse(g, beta);
}

}  // namespace lspecial
