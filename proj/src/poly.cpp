#include "dblpt/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dblpt {

SymPoly::SymPoly(int nvars, Gf2Sum<Exponents> terms) : nvars_(nvars), terms_(std::move(terms)) {
  for (const auto& e : terms_)
    if (static_cast<int>(e.size()) != nvars_)
      throw std::invalid_argument("SymPoly: exponent vector of wrong length");
}

SymPoly SymPoly::one(int nvars) {
  SymPoly p(nvars);
  p.toggle(Exponents(static_cast<std::size_t>(nvars), 0));
  return p;
}

SymPoly SymPoly::variable(int nvars, int j) {
  if (j < 0 || j >= nvars) throw std::out_of_range("SymPoly::variable: index out of range");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(j)] = 1;
  SymPoly p(nvars);
  p.toggle(std::move(e));
  return p;
}

SymPoly SymPoly::elementary(int nvars, int i) {
  SymPoly p(nvars);
  if (i < 0 || i > nvars) return p;
  // Choose which i of the n variables appear, via a selector mask permuted
  // through every arrangement.
  std::vector<int> mask(static_cast<std::size_t>(nvars), 0);
  std::fill(mask.end() - i, mask.end(), 1);
  do {
    p.toggle(mask);
  } while (std::next_permutation(mask.begin(), mask.end()));
  return p;
}

void SymPoly::toggle(Exponents e) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("SymPoly: exponent vector of wrong length");
  terms_.toggle(std::move(e));
}

int SymPoly::degree() const {
  int d = -1;
  for (const auto& e : terms_) {
    int de = std::accumulate(e.begin(), e.end(), 0);
    if (d >= 0 && de != d) throw std::invalid_argument("SymPoly: inhomogeneous polynomial");
    d = de;
  }
  return d;
}

bool SymPoly::is_homogeneous() const {
  try {
    (void)degree();
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool SymPoly::is_symmetric() const {
  for (const auto& e : terms_) {
    Exponents sorted = e;
    std::sort(sorted.begin(), sorted.end());
    do {
      if (!terms_.contains(sorted)) return false;
    } while (std::next_permutation(sorted.begin(), sorted.end()));
  }
  return true;
}

void SymPoly::check_compatible(const SymPoly& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("SymPoly: variable count mismatch");
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  check_compatible(other);
  terms_ += other.terms_;
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  a.check_compatible(b);
  SymPoly out(a.nvars_);
  for (const auto& ea : a.terms_)
    for (const auto& eb : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      out.terms_.toggle(std::move(e));
    }
  return out;
}

SymPoly SymPoly::pow(int n) const {
  SymPoly result = one(nvars_);
  SymPoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------

int w_degree(const WExponents& w) {
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += static_cast<int>(i + 1) * w[i];
  return d;
}

WExponents w_normalize(WExponents w) {
  while (!w.empty() && w.back() == 0) w.pop_back();
  return w;
}

SymPoly from_w(const WExponents& w, int nvars) {
  SymPoly p = SymPoly::one(nvars);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] > 0) p = p * SymPoly::elementary(nvars, static_cast<int>(i + 1)).pow(w[i]);
  return p;
}

SymPoly from_w(const WPoly& p, int nvars) {
  SymPoly out(nvars);
  for (const auto& w : p) out += from_w(w, nvars);
  return out;
}

WPoly to_w_basis(const SymPoly& p) {
  if (!p.is_symmetric()) throw std::invalid_argument("to_w_basis: polynomial is not symmetric");
  WPoly out;
  SymPoly rest = p;
  while (!rest.is_zero()) {
    // Lexicographically largest exponent vector; symmetric, so it is
    // non-increasing and equals the leading term of a unique w-monomial.
    const Exponents& lead = *std::prev(rest.terms().end());
    const int n = rest.nvars();
    WExponents w(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      int next = (i + 1 < n) ? lead[static_cast<std::size_t>(i + 1)] : 0;
      w[static_cast<std::size_t>(i)] = lead[static_cast<std::size_t>(i)] - next;
    }
    w = w_normalize(std::move(w));
    rest += from_w(w, n);
    out.toggle(std::move(w));
  }
  return out;
}

std::string render_w(const WExponents& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "w" + std::to_string(i + 1);
    if (w[i] > 1) out += "^" + std::to_string(w[i]);
  }
  return out.empty() ? "1" : out;
}

std::string render_w(const WPoly& p) {
  return render_sum(p, [](const WExponents& w) { return render_w(w); });
}

std::string render_x(const SymPoly& p) {
  return render_sum(p.terms(), [](const Exponents& e) {
    std::string out;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!out.empty()) out += "*";
      out += "x" + std::to_string(j + 1);
      if (e[j] > 1) out += "^" + std::to_string(e[j]);
    }
    return out.empty() ? std::string("1") : out;
  });
}

}  // namespace dblpt
