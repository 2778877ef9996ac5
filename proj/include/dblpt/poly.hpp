#pragma once

#include <string>
#include <vector>

#include "dblpt/gf2_sum.hpp"

namespace dblpt {

/// Exponent vector of a monomial x_1^{a_1} ... x_n^{a_n}.
using Exponents = std::vector<int>;

/// A polynomial in GF(2)[x_1, ..., x_n], the cohomology of BO(1)^n.
///
/// Classes of BO(n) are pulled back along the product map and appear here as
/// symmetric polynomials; w_i is represented by the elementary symmetric
/// polynomial sigma_i. Symmetry is not enforced by the type.
class SymPoly {
 public:
  explicit SymPoly(int nvars = 0) : nvars_(nvars) {}
  SymPoly(int nvars, Gf2Sum<Exponents> terms);

  static SymPoly one(int nvars);
  static SymPoly variable(int nvars, int j);
  /// sigma_i(x_1, ..., x_n); sigma_0 = 1 and sigma_i = 0 for i > n.
  static SymPoly elementary(int nvars, int i);

  int nvars() const { return nvars_; }
  const Gf2Sum<Exponents>& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  void toggle(Exponents e);

  /// Degree of the (homogeneous) polynomial; -1 for zero. Throws
  /// std::invalid_argument if the terms have mixed degrees.
  int degree() const;
  bool is_homogeneous() const;
  bool is_symmetric() const;
  /// Coefficient of a single exponent vector.
  bool coefficient(const Exponents& e) const { return terms_.contains(e); }

  SymPoly& operator+=(const SymPoly& other);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  SymPoly pow(int n) const;

 private:
  void check_compatible(const SymPoly& other) const;

  int nvars_;
  Gf2Sum<Exponents> terms_;
};

/// A monomial w_1^{a_1} w_2^{a_2} ... stored as its exponent list a_1, a_2, ...
/// (trailing zeros trimmed).
using WExponents = std::vector<int>;
using WPoly = Gf2Sum<WExponents>;

/// Degree sum_i i * a_i of a w-monomial.
int w_degree(const WExponents& w);
WExponents w_normalize(WExponents w);

/// Image of a w-polynomial under the splitting map into `nvars` variables.
SymPoly from_w(const WPoly& p, int nvars);
SymPoly from_w(const WExponents& w, int nvars);

/// Rewrites a symmetric polynomial in the w-basis by repeatedly cancelling
/// the leading monomial. Throws std::invalid_argument if `p` is not
/// symmetric.
WPoly to_w_basis(const SymPoly& p);

/// Text form: `w1^2*w3`, `1` for the empty monomial.
std::string render_w(const WExponents& w);
std::string render_w(const WPoly& p);
/// Text form in variables: `x1^2*x3 + ...`.
std::string render_x(const SymPoly& p);

}  // namespace dblpt
