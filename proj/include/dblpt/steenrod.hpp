#pragma once

#include <string>
#include <vector>

#include "dblpt/gf2_sum.hpp"
#include "dblpt/poly.hpp"

namespace dblpt {

/// Sq^{a_1} Sq^{a_2} ... Sq^{a_r}; the empty list is Sq^0 = identity.
struct SqMonomial {
  std::vector<int> exponents;

  SqMonomial() = default;
  /// Drops zero entries (Sq^0 = 1); throws std::invalid_argument on a
  /// negative entry.
  explicit SqMonomial(std::vector<int> exponents);

  int degree() const;
  /// a_j >= 2 a_{j+1} for every j.
  bool is_admissible() const;

  friend bool operator==(const SqMonomial&, const SqMonomial&) = default;
};

/// Canonical order: reverse lexicographic on exponent lists, so `Sq^6`
/// renders ahead of `Sq^5 Sq^1`.
struct SqOrder {
  bool operator()(const SqMonomial& a, const SqMonomial& b) const {
    return a.exponents > b.exponents;
  }
};

using SqElement = Gf2Sum<SqMonomial, SqOrder>;

SqElement sq(std::vector<int> exponents);

/// Rewrites into the admissible basis with the Adem relations
///   Sq^a Sq^b = sum_c C(b-c-1, a-2c) Sq^{a+b-c} Sq^c   (a < 2b).
SqElement adem_normalize(const SqElement& e);

/// Degree-(deg p + a) part of the total square of p, where Sq(x) = x + x^2
/// on each variable and the total square is multiplicative.
SymPoly sq_act(int a, const SymPoly& p);
/// Composite action: the rightmost square acts first.
SymPoly act(const SqMonomial& m, const SymPoly& p);
SymPoly act(const SqElement& e, const SymPoly& p);

/// Right side of the Wu formula,
///   Sq^i(w_j) = sum_t C(j-i+t-1, t) w_{i-t} w_{j+t},
/// as a w-polynomial (w_0 = 1 dropped, w_m = 0 for m > nvars).
WPoly wu_rhs(int i, int j, int nvars);
/// True iff sq_act(i, sigma_j) agrees with wu_rhs in `nvars` variables.
/// Requires 1 <= i <= j <= nvars; throws std::invalid_argument otherwise.
bool wu_check(int i, int j, int nvars);

/// sigma^s applied to a class of H^*BO(k) (a class of H^*MO(k) when the
/// payload is divisible by sigma_k).
struct SuspendedClass {
  int susp = 0;
  SymPoly payload;

  int degree() const { return payload.is_zero() ? -1 : susp + payload.degree(); }
  friend bool operator==(const SuspendedClass&, const SuspendedClass&) = default;
};

/// Steenrod squares commute with suspension: acts on the payload only.
SuspendedClass suspend_act(int a, const SuspendedClass& c);
SuspendedClass suspend_act(const SqElement& e, const SuspendedClass& c);

/// One line of the vanishing chain for Sq^{k+3} on sigma^2 w_k, k = 4r - 1.
struct ChainStep {
  std::string label;
  std::string expected;  // closed form the step must equal, in w-notation
  SuspendedClass value;
  bool holds = false;
};

struct Lemma55Report {
  int r = 0;
  int k = 0;
  /// Sq^{4r+2} = Sq^2 Sq^{4r} + Sq^1 Sq^{4r} Sq^1 after admissible
  /// normalization.
  bool adem_identity = false;
  std::vector<ChainStep> steps;
  /// Sq^{k+3} of sigma^2 w_k through the decomposed operation.
  SuspendedClass final_value;
  bool final_is_zero = false;
  bool all_hold() const;
};

/// Runs the chain in k = 4r - 1 variables. Throws std::invalid_argument for
/// r < 1.
Lemma55Report lemma55_check(int r);

std::string render(const SqMonomial& m);
std::string render(const SqElement& e);
/// `susp^2(w1^2*w3^2)`, payload in the w-basis.
std::string render(const SuspendedClass& c);

}  // namespace dblpt
