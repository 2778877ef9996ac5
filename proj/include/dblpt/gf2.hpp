#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "dblpt/gf2_sum.hpp"

namespace dblpt {

/// C(a, b) mod 2 by Lucas' criterion.
///
/// `a` may be negative only when `b == 0` (the empty product, C(-1, 0) = 1);
/// any other negative `a` throws std::domain_error. Negative `b` gives 0.
bool binom_mod2(long long a, long long b);

/// Number of ones in the binary expansion of m.
int binary_digit_count(unsigned long long m);

bool is_power_of_two(unsigned long long m);

class BitVector {
 public:
  explicit BitVector(std::size_t length = 0);

  std::size_t size() const { return length_; }
  bool test(std::size_t i) const;
  bool operator[](std::size_t i) const { return test(i); }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);

  bool any() const;
  /// Index of the lowest set bit, if any.
  std::optional<std::size_t> lowest_set() const;
  std::size_t count() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector& a, const BitVector& b) = default;

  /// GF(2) inner product.
  bool dot(const BitVector& other) const;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  /// All rows must share one length; throws std::invalid_argument otherwise.
  BitMatrix(std::vector<BitVector> rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  bool test(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

  BitVector operator*(const BitVector& v) const;

 private:
  std::vector<BitVector> rows_;
  std::size_t cols_ = 0;
};

/// Incrementally maintained reduced row-echelon basis of a subspace of
/// GF(2)^n. Pivots are the lowest set index of each stored row.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t length) : length_(length) {}

  /// Returns true if `v` enlarged the span.
  bool insert(BitVector v);
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return !reduce(v).any(); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t length() const { return length_; }
  /// Fully reduced basis ordered by ascending pivot.
  std::vector<BitVector> basis() const;

 private:
  void check_length(const BitVector& v) const;

  std::size_t length_;
  std::map<std::size_t, BitVector> rows_;  // pivot -> row
};

std::size_t rank(const BitMatrix& m);

/// Basis of the right null space {v : m v = 0}, one vector per free column
/// in ascending order, pivots chosen lowest-index first.
std::vector<BitVector> kernel(const BitMatrix& m);

/// True iff `v` lies in the GF(2) span of `span`. Throws
/// std::invalid_argument on a length mismatch.
bool membership(const BitVector& v, const std::vector<BitVector>& span);

// ---------------------------------------------------------------------------
// Coordinates of formal sums. Shared by every module that turns a linear
// question about classes into a matrix question.

template <class T, class C = std::less<T>>
class TermIndex {
 public:
  TermIndex() = default;
  explicit TermIndex(const std::vector<T>& basis) {
    for (const auto& t : basis) add(t);
  }

  std::size_t add(const T& t) {
    auto [it, inserted] = index_.emplace(t, terms_.size());
    if (inserted) terms_.push_back(t);
    return it->second;
  }
  std::optional<std::size_t> find(const T& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t size() const { return terms_.size(); }
  const T& term(std::size_t i) const { return terms_[i]; }

  void add_all(const Gf2Sum<T, C>& sum) {
    for (const auto& t : sum) add(t);
  }

  BitVector coordinates(const Gf2Sum<T, C>& sum) const {
    BitVector v(terms_.size());
    for (const auto& t : sum) {
      auto i = find(t);
      if (!i) throw std::invalid_argument("term outside coordinate basis");
      v.set(*i);
    }
    return v;
  }

  Gf2Sum<T, C> sum_of(const BitVector& v) const {
    Gf2Sum<T, C> out;
    for (std::size_t i = 0; i < terms_.size() && i < v.size(); ++i)
      if (v.test(i)) out.toggle(terms_[i]);
    return out;
  }

 private:
  std::map<T, std::size_t, C> index_;
  std::vector<T> terms_;
};

/// Reduced basis of the span of `sums`, in canonical pivot order.
template <class T, class C>
std::vector<Gf2Sum<T, C>> span_basis(const std::vector<Gf2Sum<T, C>>& sums) {
  TermIndex<T, C> index;
  for (const auto& s : sums) index.add_all(s);
  EchelonBasis ech(index.size());
  for (const auto& s : sums) ech.insert(index.coordinates(s));
  std::vector<Gf2Sum<T, C>> out;
  for (const auto& row : ech.basis()) out.push_back(index.sum_of(row));
  return out;
}

template <class T, class C>
bool in_span(const Gf2Sum<T, C>& v, const std::vector<Gf2Sum<T, C>>& span) {
  TermIndex<T, C> index;
  for (const auto& s : span) index.add_all(s);
  index.add_all(v);
  EchelonBasis ech(index.size());
  for (const auto& s : span) ech.insert(index.coordinates(s));
  return ech.contains(index.coordinates(v));
}

template <class T, class C>
bool span_equal(const std::vector<Gf2Sum<T, C>>& a,
                const std::vector<Gf2Sum<T, C>>& b) {
  for (const auto& v : a)
    if (!in_span(v, b)) return false;
  for (const auto& v : b)
    if (!in_span(v, a)) return false;
  return true;
}

/// Kernel of a linear map given on basis terms, as sums of basis terms.
///
/// The domain coordinates follow `domain` in order; the kernel basis is
/// therefore deterministic for a deterministic domain enumeration.
template <class T, class C = std::less<T>, class F>
std::vector<Gf2Sum<T, C>> kernel_of(const std::vector<T>& domain, F&& map) {
  using Image = std::decay_t<decltype(map(domain.front()))>;
  if (domain.empty()) return {};
  std::vector<Image> images;
  images.reserve(domain.size());
  for (const auto& t : domain) images.push_back(map(t));

  using U = typename Image::term_type;
  TermIndex<U, typename Image::container_type::key_compare> target;
  for (const auto& img : images) target.add_all(img);

  BitMatrix m(target.size(), domain.size());
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const auto& u : images[c]) m.set(*target.find(u), c);

  TermIndex<T, C> source(domain);
  std::vector<Gf2Sum<T, C>> out;
  for (const auto& v : kernel(m)) out.push_back(source.sum_of(v));
  return out;
}

}  // namespace dblpt
