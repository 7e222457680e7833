#ifndef LSPECIAL_ADMISSIBILITY_HPP
#define LSPECIAL_ADMISSIBILITY_HPP

#include <string>
#include <vector>

#include "lspecial/gcd.hpp"
#include "lspecial/substitution.hpp"

namespace lspecial {

// Canonical real defining polynomial of the curve cut out by a complex
// polynomial: gcd of its real and imaginary parts, primitive form.
BivarPoly real_defining(const BivarPoly& p);

struct PairCheck {
  bool ok = false;
  BivarPoly cofactor{VarSpace::XY, Backend::Exact};
  double residual = 0.0;
  std::string reason;
};

// Does the real curve polynomial divide the inverse-transformed difference
// F1(z) - F2(z_b)? Both F1 and F2 must be non-constant.
PairCheck verify_pair(const UnivarPoly& f1, const UnivarPoly& f2,
                      const BetaParam& beta, const BivarPoly& curve,
                      const ToleranceConfig& tol = {});

struct CandidatePair {
  UnivarPoly f1{Backend::Exact};
  UnivarPoly f2{Backend::Exact};
  BivarPoly cofactor{VarSpace::ZW, Backend::Exact};  // the R' factor, ZW space
};

struct ObstructionReport {
  int total_nullity = 0;
  int trivial_dim = 0;
  std::vector<CandidatePair> genuine_solutions;
  bool exists_admissible = false;
};

// Linear-system search for pairs (F1, F2) of degree <= d with
// F1(z) - F2(z_b) = R' * S_beta(curve), R' of total degree <= d - n.
// The trivial family F1 = F2 = constant, R' = 0 is excluded structurally
// by pinning F1's constant coefficient to zero. A genuine solution counts
// only when max(deg F1, deg F2) attains d exactly, so lower-degree pairs
// embedded in a larger system do not report existence at degree d.
ObstructionReport obstruction_search(const BivarPoly& curve,
                                     const BetaParam& beta, int d,
                                     const ToleranceConfig& tol = {});

// Real dimension of {(a, b) in C^2 : the inverse transform of
// a z^n + b z_b^n has all-real coefficients}, from the constraints at
// x^n, x^{n-1}y, xy^{n-1}, y^n.
int leading_obstruction(int n, const BetaParam& beta,
                        const ToleranceConfig& tol = {});

// True iff every term sits at (n, 0) or (0, n) for the single n = deg p.
bool is_diagonal(const BivarPoly& p);

// Exact divisibility of diagonal p by diagonal q.
bool diagonal_divides(const BivarPoly& p, const BivarPoly& q,
                      const ToleranceConfig& tol = {});

}  // namespace lspecial

#endif  // LSPECIAL_ADMISSIBILITY_HPP
