#pragma once

#include <string>
#include <vector>

#include "dblpt/gf2_sum.hpp"
#include "dblpt/poly.hpp"

namespace dblpt {

/// GF(2)[g_1, ..., g_m] / (g_1^{b_1}, ..., g_m^{b_m}) with graded generators.
class TruncRing {
 public:
  struct Generator {
    std::string name;
    int degree;
    int bound;  // g^bound = 0
  };
  using Element = Gf2Sum<Exponents>;

  explicit TruncRing(std::vector<Generator> generators);

  const std::vector<Generator>& generators() const { return gens_; }

  Element one() const;
  Element gen(std::size_t i) const;
  Element monomial(Exponents e) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, int n) const;
  /// Multiplicative inverse of 1 + (nilpotent); throws std::invalid_argument
  /// if the degree-0 part is not 1.
  Element inverse(const Element& a) const;
  Element component(const Element& a, int degree) const;
  int degree(const Exponents& e) const;
  std::string render(const Element& a) const;

 private:
  std::vector<Generator> gens_;
};

/// Closed manifolds with closed-form tangential Stiefel-Whitney classes.
struct ManifoldSpec {
  enum class Kind {
    RPProduct,  // RP(n_1) x RP(n_2) x ...
    Dold,       // P(1, 2^{r-1}), dimension 2^r + 1
    Sphere,     // S(n), a boundary
  };
  Kind kind;
  std::vector<int> params;  // RP dimensions; {r}; {n}

  int dimension() const;
  TruncRing ring() const;
  /// The top monomial, dual to the fundamental class.
  Exponents fundamental() const;
  std::string render() const;
};

/// Parses `RP(4)xRP(2)`, `RP(2)`, `Dold(r=2)` or `Sphere(5)`. Throws
/// std::invalid_argument on anything else.
ManifoldSpec parse_manifold(const std::string& text);

TruncRing::Element total_tangent_sw(const ManifoldSpec& m);
/// Inverse of the tangential class in the truncated ring.
TruncRing::Element total_normal_sw(const ManifoldSpec& m);

/// Normal number wbar_{i_1} ... wbar_{i_r}[M]. The indices must sum to the
/// dimension of M; throws std::invalid_argument otherwise.
bool sw_number(const ManifoldSpec& m, const std::vector<int>& wbar_indices);

}  // namespace dblpt
