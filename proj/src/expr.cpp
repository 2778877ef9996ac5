#include "dblpt/expr.hpp"

#include <cctype>
#include <charconv>
#include <string_view>

namespace dblpt {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::size_t pos() const { return pos_; }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  int integer() {
    skip_space();
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected a non-negative integer");
    if (value < 0) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    if (pos_ >= text_.size()) throw ParseError(what + " but reached end of input", pos_);
    throw ParseError(what, pos_);
  }
  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<int> index_list(Cursor& c) {
  c.expect("[");
  std::vector<int> out{c.integer()};
  while (c.accept(",")) out.push_back(c.integer());
  c.expect("]");
  return out;
}

Expr parse_class_expr(Cursor& c);

Expr parse_factor(Cursor& c) {
  const std::size_t at = (c.skip_space(), c.pos());
  Expr e;
  e.offset = at;
  if (c.accept("susp")) {
    e.kind = Expr::Kind::Suspension;
    c.expect("^");
    e.exponent = c.integer();
    c.expect("(");
    c.expect("e");
    e.indices = index_list(c);
    c.expect(")");
    return e;
  }
  if (c.accept("e")) {
    e.kind = Expr::Kind::Literal;
    e.indices = index_list(c);
    return e;
  }
  if (c.accept("Q")) {
    e.kind = Expr::Kind::QApply;
    c.expect("^");
    e.exponent = c.integer();
    c.expect("(");
    e.children.push_back(parse_class_expr(c));
    c.expect(")");
    return e;
  }
  if (c.accept("(")) {
    Expr inner = parse_class_expr(c);
    c.expect(")");
    return inner;
  }
  if (c.accept("0")) {
    e.kind = Expr::Kind::Zero;
    return e;
  }
  if (c.accept("1")) {
    e.kind = Expr::Kind::One;
    return e;
  }
  c.fail("expected e[...], Q^n(...), susp^s(...), '(' , '0' or '1'");
}

Expr parse_term(Cursor& c) {
  Expr first = parse_factor(c);
  if (c.peek() != '*') return first;
  Expr prod;
  prod.kind = Expr::Kind::Product;
  prod.offset = first.offset;
  prod.children.push_back(std::move(first));
  while (c.accept("*")) prod.children.push_back(parse_factor(c));
  return prod;
}

Expr parse_class_expr(Cursor& c) {
  Expr first = parse_term(c);
  if (c.peek() != '+') return first;
  Expr sum;
  sum.kind = Expr::Kind::Sum;
  sum.offset = first.offset;
  sum.children.push_back(std::move(first));
  while (c.accept("+")) sum.children.push_back(parse_term(c));
  return sum;
}

void collect_k(const Expr& e, std::optional<int>& k) {
  if (e.kind == Expr::Kind::Literal || e.kind == Expr::Kind::Suspension) {
    const int here = static_cast<int>(e.indices.size());
    if (k && *k != here)
      throw ParseError("inconsistent k: literal has " + std::to_string(here) + " indices, expected " +
                           std::to_string(*k),
                       e.offset);
    k = here;
  }
  for (const auto& child : e.children) collect_k(child, k);
}

EMonomial literal(const Expr& e, int k) {
  if (static_cast<int>(e.indices.size()) != k)
    throw ParseError("literal has " + std::to_string(e.indices.size()) + " indices but k = " + std::to_string(k),
                     e.offset);
  for (int i : e.indices)
    if (i < 1) throw ParseError("MO(k) indices must be at least 1", e.offset);
  return EMonomial(e.indices);
}

}  // namespace

Expr parse_expr(const std::string& text) {
  Cursor c(text);
  Expr e = parse_class_expr(c);
  c.finish();
  return e;
}

std::optional<int> infer_k(const Expr& e) {
  std::optional<int> k;
  collect_k(e, k);
  return k;
}

QClass evaluate(const Expr& e, int k) {
  switch (e.kind) {
    case Expr::Kind::Zero:
      return {};
    case Expr::Kind::One:
      return QClass(QMonomial::unit());
    case Expr::Kind::Literal:
      return q_class(literal(e, k));
    case Expr::Kind::Suspension: {
      if (e.exponent < 1) throw ParseError("susp^s needs s >= 1", e.offset);
      return QClass(QMonomial(QGenerator{{}, literal(e, k), e.exponent}));
    }
    case Expr::Kind::QApply:
      return q_apply(e.exponent, evaluate(e.children.front(), k));
    case Expr::Kind::Product: {
      QClass out(QMonomial::unit());
      for (const auto& child : e.children) out = q_product(out, evaluate(child, k));
      return out;
    }
    case Expr::Kind::Sum: {
      QClass out;
      for (const auto& child : e.children) out += evaluate(child, k);
      return out;
    }
  }
  return {};
}

QClass parse_class(const std::string& text, int k) {
  const Expr e = parse_expr(text);
  infer_k(e);
  return evaluate(e, k);
}

SqElement parse_steenrod(const std::string& text) {
  Cursor c(text);
  SqElement out;
  do {
    if (c.accept("0")) continue;
    if (c.accept("1")) {
      out.toggle(SqMonomial{});
      continue;
    }
    std::vector<int> exps;
    while (c.accept("Sq")) {
      c.expect("^");
      exps.push_back(c.integer());
    }
    if (exps.empty()) c.fail("expected Sq^n");
    out += sq(std::move(exps));
  } while (c.accept("+"));
  c.finish();
  return out;
}

WPoly parse_wpoly(const std::string& text) {
  Cursor c(text);
  WPoly out;
  do {
    if (c.accept("0")) continue;
    if (c.accept("1")) {
      out.toggle(WExponents{});
      continue;
    }
    WExponents w;
    do {
      c.expect("w");
      const std::size_t at = c.pos();
      const int i = c.integer();
      if (i < 1) throw ParseError("w_i needs i >= 1", at);
      int power = 1;
      if (c.accept("^")) power = c.integer();
      if (w.size() < static_cast<std::size_t>(i)) w.resize(static_cast<std::size_t>(i), 0);
      w[static_cast<std::size_t>(i - 1)] += power;
    } while (c.accept("*"));
    out.toggle(w_normalize(std::move(w)));
  } while (c.accept("+"));
  c.finish();
  return out;
}

std::vector<int> parse_sw_indices(const std::string& raw) {
  // Fold the Unicode spellings onto ASCII. Error offsets refer to the
  // folded text.
  std::string text;
  static const std::pair<std::string_view, std::string_view> folds[] = {
      {"w̄", "w"}, {"wbar", "w"}, {"₀", "0"}, {"₁", "1"}, {"₂", "2"}, {"₃", "3"},
      {"₄", "4"}, {"₅", "5"}, {"₆", "6"}, {"₇", "7"}, {"₈", "8"}, {"₉", "9"}, {"[M]", ""},
  };
  for (std::size_t i = 0; i < raw.size();) {
    bool folded = false;
    for (const auto& [from, to] : folds)
      if (std::string_view(raw).substr(i, from.size()) == from) {
        text += to;
        i += from.size();
        folded = true;
        break;
      }
    if (!folded) text += raw[i++];
  }

  Cursor c(text);
  std::vector<int> out;
  while (!c.at_end()) {
    c.expect("w");
    const std::size_t at = c.pos();
    const int i = c.integer();
    if (i < 1) throw ParseError("w_i needs i >= 1", at);
    int power = 1;
    if (c.accept("^")) power = c.integer();
    for (int j = 0; j < power; ++j) out.push_back(i);
    c.accept("*");
  }
  if (out.empty()) c.fail("expected a Stiefel-Whitney monomial");
  return out;
}

}  // namespace dblpt
