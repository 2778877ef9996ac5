#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>

namespace dblpt {

/// A formal sum of terms with coefficients in GF(2).
///
/// Adding a term that is already present cancels it. Terms are kept in the
/// order given by `Compare`, which is the canonical output order of every
/// class built on top of this container.
template <class T, class Compare = std::less<T>>
class Gf2Sum {
 public:
  using term_type = T;
  using container_type = std::set<T, Compare>;
  using const_iterator = typename container_type::const_iterator;

  Gf2Sum() = default;
  explicit Gf2Sum(T term) { toggle(std::move(term)); }
  Gf2Sum(std::initializer_list<T> terms) {
    for (const auto& t : terms) toggle(t);
  }

  void toggle(const T& term) {
    auto [it, inserted] = terms_.insert(term);
    if (!inserted) terms_.erase(it);
  }
  void toggle(T&& term) {
    auto it = terms_.find(term);
    if (it != terms_.end())
      terms_.erase(it);
    else
      terms_.insert(std::move(term));
  }

  bool contains(const T& term) const { return terms_.count(term) != 0; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const container_type& terms() const { return terms_; }

  Gf2Sum& operator+=(const Gf2Sum& other) {
    for (const auto& t : other.terms_) toggle(t);
    return *this;
  }
  friend Gf2Sum operator+(Gf2Sum a, const Gf2Sum& b) {
    a += b;
    return a;
  }
  friend bool operator==(const Gf2Sum& a, const Gf2Sum& b) {
    return a.terms_ == b.terms_;
  }

 private:
  container_type terms_;
};

/// Applies a linear map given on terms to a whole sum.
template <class T, class C, class F>
auto map_linear(const Gf2Sum<T, C>& sum, F&& on_term) {
  decltype(on_term(*sum.begin())) out;
  for (const auto& t : sum) out += on_term(t);
  return out;
}

/// Renders a sum as `t1 + t2 + ...`, or `0` when empty.
template <class T, class C, class F>
std::string render_sum(const Gf2Sum<T, C>& sum, F&& render_term) {
  if (sum.is_zero()) return "0";
  std::string out;
  for (const auto& t : sum) {
    if (!out.empty()) out += " + ";
    out += render_term(t);
  }
  return out;
}

}  // namespace dblpt
