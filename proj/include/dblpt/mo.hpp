#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "dblpt/gf2_sum.hpp"
#include "dblpt/poly.hpp"

namespace dblpt {

/// Which space a monomial e_I lives in. In H_*BO(k) indices may be 0; in
/// the reduced homology of the Thom complex MO(k) = BO(k)/BO(k-1) every
/// index is at least 1.
enum class Context { BO, MO };

/// e_{i_1} e_{i_2} ... e_{i_k} with i_1 <= ... <= i_k.
///
/// The empty index list is the unit; it only occurs as the `1` side of a
/// coproduct term.
struct EMonomial {
  std::vector<int> indices;
  Context context = Context::MO;

  EMonomial() = default;
  /// Sorts `indices` and checks them against the context lower bound.
  /// Throws std::invalid_argument on a violation.
  explicit EMonomial(std::vector<int> indices, Context context = Context::MO);

  static EMonomial unit(Context context = Context::MO) {
    EMonomial m;
    m.context = context;
    return m;
  }

  int k() const { return static_cast<int>(indices.size()); }
  int dimension() const;
  bool is_unit() const { return indices.empty(); }

  friend auto operator<=>(const EMonomial&, const EMonomial&) = default;
  friend bool operator==(const EMonomial&, const EMonomial&) = default;
};

/// e_1^{a} e_2^{b} ... built from (index, power) pairs, in MO context.
EMonomial e_pow(std::initializer_list<std::pair<int, int>> powers);

using MOClass = Gf2Sum<EMonomial>;
using MOTensor = Gf2Sum<std::pair<EMonomial, EMonomial>>;

/// Sorted index lists of length k, entries >= 1, summing to n, in
/// lexicographic order.
std::vector<EMonomial> mo_basis(int k, int n);
/// As mo_basis, entries >= 0.
std::vector<EMonomial> bo_basis(int k, int n);

EMonomial merge(const EMonomial& a, const EMonomial& b);
/// Product induced by the map classifying the product bundle; throws
/// std::invalid_argument on a context mismatch.
MOClass mo_product(const MOClass& a, const MOClass& b);

/// Coproduct induced by the diagonal, psi(e_i) = sum_j e_j (x) e_{i-j},
/// extended multiplicatively over the factors of e_I.
///
/// In MO context terms containing an e_0 on either side die in the quotient
/// BO(k)/BO(k-1); the unit terms c (x) 1 and 1 (x) c are kept unless
/// `reduced`. In BO context every splitting is kept, and `reduced` drops the
/// terms with e_0^k on one side.
MOTensor mo_coproduct(const EMonomial& m, bool reduced);
MOTensor mo_coproduct(const MOClass& c, bool reduced);

/// Dual Steenrod square Sq^i_* from Sq^i_* e_j = C(j-i, i) e_{j-i} on
/// H_*BO(1), extended by the dual Cartan formula. In MO context a resulting
/// index 0 kills the term.
MOClass sq_dual(int i, const EMonomial& m);
MOClass sq_dual(int i, const MOClass& c);

/// <p, e_I>: the coefficient of x_1^{i_1} ... x_k^{i_k} in p. Requires
/// p.nvars() == k and deg p == |I|; throws std::invalid_argument otherwise.
bool kronecker_pair(const SymPoly& p, const EMonomial& m);
bool kronecker_pair(const SymPoly& p, const MOClass& c);

/// `e[1,1,3]`; `1` for the unit.
std::string render(const EMonomial& m);
std::string render(const MOClass& c);
std::string render(const MOTensor& t);

}  // namespace dblpt
