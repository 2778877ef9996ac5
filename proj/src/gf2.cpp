#include "dblpt/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace dblpt {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
}  // namespace

bool binom_mod2(long long a, long long b) {
  if (b < 0) return false;
  if (b == 0) {
    if (a < -1)
      throw std::domain_error("binom_mod2: C(" + std::to_string(a) +
                              ", 0) undefined below a = -1");
    return true;
  }
  if (a < 0)
    throw std::domain_error("binom_mod2: negative top argument " + std::to_string(a) +
                            " with b > 0");
  return (a & b) == b;
}

int binary_digit_count(unsigned long long m) { return std::popcount(m); }

bool is_power_of_two(unsigned long long m) { return std::has_single_bit(m); }

// ---------------------------------------------------------------------------

BitVector::BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

bool BitVector::test(std::size_t i) const {
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value)
    words_[i / kWordBits] |= mask;
  else
    words_[i / kWordBits] &= ~mask;
}

void BitVector::flip(std::size_t i) { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

bool BitVector::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::optional<std::size_t> BitVector::lowest_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return std::nullopt;
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.length_ != length_) throw std::invalid_argument("BitVector length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.length_ != length_) throw std::invalid_argument("BitVector length mismatch");
  unsigned parity = 0;
  for (std::size_t w = 0; w < words_.size(); ++w)
    parity ^= static_cast<unsigned>(std::popcount(words_[w] & other.words_[w])) & 1U;
  return parity != 0;
}

// ---------------------------------------------------------------------------

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows, BitVector(cols)), cols_(cols) {}

BitMatrix::BitMatrix(std::vector<BitVector> rows, std::size_t cols) : rows_(std::move(rows)), cols_(cols) {
  for (const auto& r : rows_)
    if (r.size() != cols_) throw std::invalid_argument("BitMatrix: ragged rows");
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitVector BitMatrix::operator*(const BitVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("BitMatrix * BitVector: length mismatch");
  BitVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) out.set(r, rows_[r].dot(v));
  return out;
}

// ---------------------------------------------------------------------------

void EchelonBasis::check_length(const BitVector& v) const {
  if (v.size() != length_)
    throw std::invalid_argument("EchelonBasis: vector of length " + std::to_string(v.size()) +
                                ", expected " + std::to_string(length_));
}

BitVector EchelonBasis::reduce(BitVector v) const {
  check_length(v);
  for (const auto& [pivot, row] : rows_)
    if (v.test(pivot)) v ^= row;
  return v;
}

bool EchelonBasis::insert(BitVector v) {
  v = reduce(std::move(v));
  auto pivot = v.lowest_set();
  if (!pivot) return false;
  for (auto& [p, row] : rows_)
    if (row.test(*pivot)) row ^= v;
  rows_.emplace(*pivot, std::move(v));
  return true;
}

std::vector<BitVector> EchelonBasis::basis() const {
  std::vector<BitVector> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::size_t rank(const BitMatrix& m) {
  EchelonBasis ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
  return ech.rank();
}

std::vector<BitVector> kernel(const BitMatrix& m) {
  EchelonBasis ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
  const auto rows = ech.basis();

  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& row : rows) {
    auto p = *row.lowest_set();
    pivots.push_back(p);
    is_pivot[p] = true;
  }

  std::vector<BitVector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].test(free)) v.set(pivots[i]);
    out.push_back(std::move(v));
  }
  return out;
}

bool membership(const BitVector& v, const std::vector<BitVector>& span) {
  EchelonBasis ech(v.size());
  for (const auto& s : span) ech.insert(s);
  return ech.contains(v);
}

}  // namespace dblpt
