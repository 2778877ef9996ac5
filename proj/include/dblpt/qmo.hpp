#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "dblpt/errors.hpp"
#include "dblpt/gf2_sum.hpp"
#include "dblpt/mo.hpp"

namespace dblpt {

/// A polynomial generator Q^I x of H_*QMO(k): Q^{ops[0]} Q^{ops[1]} ...
/// applied to x = sigma^susp e_J, the last entry of `ops` acting first.
///
/// Admissibility is i_j <= 2 i_{j+1}; a nonempty sequence must have excess
/// i_1 - i_2 - ... - i_r greater than dim x. Height is 2^r.
struct QGenerator {
  std::vector<int> ops;
  EMonomial base;
  int susp = 0;

  int dimension() const;
  int height() const { return 1 << ops.size(); }
  int excess() const;

  friend std::strong_ordering operator<=>(const QGenerator& a, const QGenerator& b);
  friend bool operator==(const QGenerator&, const QGenerator&) = default;
};

bool is_admissible_sequence(const std::vector<int>& ops);

/// Validated constructor; throws InadmissibleComposition if `ops` is not
/// admissible or its excess is too small.
QGenerator make_generator(std::vector<int> ops, EMonomial base, int susp = 0);

/// A Pontrjagin-product monomial: a multiset of generators kept sorted. The
/// empty product is the unit 1.
struct QMonomial {
  std::vector<QGenerator> factors;

  QMonomial() = default;
  explicit QMonomial(std::vector<QGenerator> factors);
  explicit QMonomial(QGenerator g) : factors{std::move(g)} {}

  static QMonomial unit() { return {}; }
  bool is_unit() const { return factors.empty(); }
  int dimension() const;
  int height() const;

  /// Canonical order: height, then factors lexicographically.
  friend std::strong_ordering operator<=>(const QMonomial& a, const QMonomial& b);
  friend bool operator==(const QMonomial&, const QMonomial&) = default;
};

QMonomial operator*(const QMonomial& a, const QMonomial& b);

using QClass = Gf2Sum<QMonomial>;
using QTensor = Gf2Sum<std::pair<QMonomial, QMonomial>>;

/// The height-1 class of an e-monomial (MO context).
QClass q_class(const EMonomial& m);
QClass q_class(const QGenerator& g);
QClass q_class(const QMonomial& m);

QClass q_product(const QClass& a, const QClass& b);
QTensor tensor(const QClass& a, const QClass& b);
QTensor tensor_product(const QTensor& a, const QTensor& b);

/// Generators of dimension <= max_dim over MO(k), canonical order.
std::vector<QGenerator> qmo_generators(int k, int max_dim);
/// Monomials of dimension n, canonical order.
std::vector<QMonomial> qmo_basis(int k, int n);

/// Keeps the height-2 monomials.
QClass h2_project(const QClass& c);
QClass project_height(const QClass& c, int height);

/// Kudo-Araki operation Q^i, extended linearly:
///   Q^i u = 0 for i < dim u, Q^i u = u * u for i = dim u,
///   for i > dim u a generator gains i as a new outermost operation, and a
///   product is expanded by the Cartan formula; Q^0 1 = 1 and Q^i 1 = 0.
/// Throws InadmissibleComposition when the new sequence is inadmissible.
QClass q_apply(int i, const QClass& c);
QClass q_apply(int i, const QMonomial& m);

/// Coproduct induced by the diagonal; multiplicative over Pontrjagin
/// products, the Cartan formula psi Q^n = sum (Q^a (x) Q^b) psi on
/// generators, and the MO coproduct on e-monomials. `reduced` drops every
/// term with a unit side.
QTensor q_coproduct(const QMonomial& m, bool reduced);
QTensor q_coproduct(const QClass& c, bool reduced);

/// Dual Steenrod square Sq^i_*, via the dual Cartan formula on products,
/// the Nishida relations
///   Sq^i_* Q^s = sum_t C(s-i, i-2t) Q^{s-i+t} Sq^t_*
/// on generators, and the dual action on H_*BO(1) on e-monomials.
QClass nishida(int i, const QClass& c);
QClass nishida(int i, const QMonomial& m);

/// Homology suspension applied `times` times: products and the unit die,
/// Q^I x goes to Q^I(sigma x) re-evaluated through q_apply.
QClass homology_suspend(const QClass& c, int times);

/// Basis of the primitives {c in H_n QMO(k) : reduced psi(c) = 0}.
std::vector<QClass> primitive_submodule(int k, int n);

std::string render(const QGenerator& g);
std::string render(const QMonomial& m);
std::string render(const QClass& c);
std::string render(const QTensor& t);

}  // namespace dblpt
