#ifndef LSPECIAL_BIVAR_HPP
#define LSPECIAL_BIVAR_HPP

#include <map>
#include <optional>
#include <utility>

#include "lspecial/scalar.hpp"
#include "lspecial/univar.hpp"

namespace lspecial {

// Variable space of a bivariate polynomial: (x, y) or (z, z_beta).
enum class VarSpace { XY, ZW };

// Exponent pair; first component is the power of x (resp. z).
using Exponent = std::pair<int, int>;

// Graded-lexicographic order with x > y (z > z_beta), descending: the
// leading term comes first in iteration order.
struct GrlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da > db;
    return a.first > b.first;
  }
};

// Sparse bivariate polynomial over Scalars; no stored zero coefficients,
// all coefficients on one backend, variable-space tagged.
class BivarPoly {
public:
  using TermMap = std::map<Exponent, Scalar, GrlexDescending>;

  BivarPoly(VarSpace s, Backend b) : space_(s), backend_(b) {}

  static BivarPoly zero(VarSpace s, Backend b) { return BivarPoly(s, b); }
  static BivarPoly constant(VarSpace s, const Scalar& c) {
    return monomial(s, 0, 0, c);
  }
  static BivarPoly monomial(VarSpace s, int i, int j, const Scalar& c) {
    BivarPoly p(s, c.backend());
    p.add_term(i, j, c);
    return p;
  }

  VarSpace space() const { return space_; }
  Backend backend() const { return backend_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  // Degree of the zero polynomial is the empty optional (a sentinel, not -1).
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    const auto& e = terms_.begin()->first;
    return e.first + e.second;
  }

  Scalar coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Scalar::zero(backend_) : it->second;
  }

  void add_term(int i, int j, const Scalar& c);

  BivarPoly operator-() const;
  friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const Scalar& s, const BivarPoly& p);
  BivarPoly& operator+=(const BivarPoly& b) { return *this = *this + b; }
  BivarPoly& operator-=(const BivarPoly& b) { return *this = *this - b; }

  bool operator==(const BivarPoly& o) const;

  Scalar evaluate(const Scalar& u, const Scalar& v) const;

  BivarPoly homogeneous_part(int m) const;

  // True if all coefficients have zero imaginary part.
  bool has_real_coeffs() const;

  double max_abs_coeff() const;

  BivarPoly to_approx() const;

private:
  void check_compatible(const BivarPoly& o, const char* op) const;

  VarSpace space_;
  Backend backend_;
  TermMap terms_;
};

struct DivisionOutcome {
  BivarPoly quotient;
  double residual = 0.0;  // max remainder coefficient / max(1, max |a| coeff)
  bool divisible = false;
};

// Leading-term reduction under graded-lex. Exact backend requires a zero
// remainder; Approx accepts a relative remainder up to residual_tol.
DivisionOutcome divide_with_residual(const BivarPoly& a, const BivarPoly& b,
                                     const ToleranceConfig& tol = {});

// Returns the quotient, or nullopt when b does not divide a.
std::optional<BivarPoly> bp_divide_exact(const BivarPoly& a, const BivarPoly& b,
                                         const ToleranceConfig& tol = {});

// p = p1 + i*p2 with p1, p2 real-coefficient polynomials. XY space only.
std::pair<BivarPoly, BivarPoly> re_im_split(const BivarPoly& p);

enum class EmbedVar { FirstVar, SecondVar };

// f(z) as an element of the bivariate algebra using only the chosen variable.
BivarPoly embed_univar(const UnivarPoly& f, EmbedVar which, VarSpace space);

}  // namespace lspecial

#endif  // LSPECIAL_BIVAR_HPP
