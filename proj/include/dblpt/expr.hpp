#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dblpt/errors.hpp"
#include "dblpt/poly.hpp"
#include "dblpt/qmo.hpp"
#include "dblpt/steenrod.hpp"

namespace dblpt {

/// Syntax tree for class expressions:
///
///   class  := term ('+' term)*
///   term   := factor ('*' factor)*
///   factor := 'e' '[' int (',' int)* ']'
///           | 'Q' '^' int '(' class ')'
///           | 'susp' '^' int '(' 'e' '[' ... ']' ')'
///           | '(' class ')' | '0' | '1'
///
/// Whitespace is ignored between tokens.
struct Expr {
  enum class Kind { Zero, One, Literal, Suspension, QApply, Product, Sum };
  Kind kind = Kind::Zero;
  std::vector<int> indices;  // Literal, Suspension
  int exponent = 0;          // QApply: n of Q^n; Suspension: s of susp^s
  std::vector<Expr> children;
  std::size_t offset = 0;

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Throws ParseError on malformed text.
Expr parse_expr(const std::string& text);

/// The common k of every literal, or nullopt for a literal-free expression.
/// Throws ParseError at the first literal whose length disagrees.
std::optional<int> infer_k(const Expr& e);

/// Evaluates in H_*QMO(k). Throws ParseError if a literal has the wrong k or
/// an index below 1, InadmissibleComposition for Q^n outside the admissible
/// range.
QClass evaluate(const Expr& e, int k);

/// parse_expr + evaluate.
QClass parse_class(const std::string& text, int k);

/// `Sq^a Sq^b + Sq^c + 1`. Throws ParseError.
SqElement parse_steenrod(const std::string& text);

/// `w1^2*w3 + w2`, `1` or `0`, in the w-basis. Throws ParseError.
WPoly parse_wpoly(const std::string& text);

/// Indices of a Stiefel-Whitney monomial written `w2*w7`, `w2 w7`, `wbar2*wbar7`
/// or with the UTF-8 combining bar `w̄₂w̄₇` (subscript digits allowed).
/// Exponents `w2^3` repeat the index. Throws ParseError.
std::vector<int> parse_sw_indices(const std::string& text);

}  // namespace dblpt
