#include "dblpt/manifolds.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <stdexcept>
#include <string>

namespace dblpt {

TruncRing::TruncRing(std::vector<Generator> generators) : gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.degree < 1 || g.bound < 1) throw std::invalid_argument("TruncRing: bad generator " + g.name);
}

TruncRing::Element TruncRing::one() const { return Element(Exponents(gens_.size(), 0)); }

TruncRing::Element TruncRing::gen(std::size_t i) const {
  Exponents e(gens_.size(), 0);
  e.at(i) = 1;
  return monomial(std::move(e));
}

TruncRing::Element TruncRing::monomial(Exponents e) const {
  if (e.size() != gens_.size()) throw std::invalid_argument("TruncRing: exponent length mismatch");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] >= gens_[i].bound) return {};
  return Element(std::move(e));
}

TruncRing::Element TruncRing::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Exponents e(gens_.size());
      bool vanishes = false;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = x[i] + y[i];
        if (e[i] >= gens_[i].bound) vanishes = true;
      }
      if (!vanishes) out.toggle(std::move(e));
    }
  return out;
}

TruncRing::Element TruncRing::pow(const Element& a, int n) const {
  Element result = one();
  Element base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

TruncRing::Element TruncRing::inverse(const Element& a) const {
  const Exponents unit(gens_.size(), 0);
  if (!a.contains(unit)) throw std::invalid_argument("TruncRing::inverse: constant term is not 1");
  // a = 1 + n with n nilpotent: a^{-1} = sum_j n^j.
  Element nil = a;
  nil.toggle(unit);
  Element result = one();
  Element term = one();
  while (true) {
    term = mul(term, nil);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

int TruncRing::degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * gens_[i].degree;
  return d;
}

TruncRing::Element TruncRing::component(const Element& a, int deg) const {
  Element out;
  for (const auto& e : a)
    if (degree(e) == deg) out.toggle(e);
  return out;
}

std::string TruncRing::render(const Element& a) const {
  // Ascending degree reads naturally for total classes: 1 + d + c*d.
  std::vector<Exponents> terms(a.begin(), a.end());
  std::stable_sort(terms.begin(), terms.end(),
                   [this](const Exponents& x, const Exponents& y) { return degree(x) < degree(y); });
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& e : terms) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += gens_[i].name;
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    out += mono.empty() ? "1" : mono;
  }
  return out;
}

// ---------------------------------------------------------------------------

int ManifoldSpec::dimension() const {
  switch (kind) {
    case Kind::RPProduct:
      return std::accumulate(params.begin(), params.end(), 0);
    case Kind::Dold:
      return (1 << params.at(0)) + 1;
    case Kind::Sphere:
      return params.at(0);
  }
  return 0;
}

TruncRing ManifoldSpec::ring() const {
  std::vector<TruncRing::Generator> gens;
  switch (kind) {
    case Kind::RPProduct:
      for (std::size_t i = 0; i < params.size(); ++i)
        gens.push_back({std::string(1, static_cast<char>('a' + i)), 1, params[i] + 1});
      break;
    case Kind::Dold:
      gens.push_back({"c", 1, 2});
      gens.push_back({"d", 2, (1 << (params.at(0) - 1)) + 1});
      break;
    case Kind::Sphere:
      gens.push_back({"s", params.at(0), 2});
      break;
  }
  return TruncRing(std::move(gens));
}

Exponents ManifoldSpec::fundamental() const {
  switch (kind) {
    case Kind::RPProduct:
      return params;
    case Kind::Dold:
      return {1, 1 << (params.at(0) - 1)};
    case Kind::Sphere:
      return {1};
  }
  return {};
}

std::string ManifoldSpec::render() const {
  switch (kind) {
    case Kind::RPProduct: {
      std::string out;
      for (int n : params) {
        if (!out.empty()) out += "x";
        out += "RP(" + std::to_string(n) + ")";
      }
      return out;
    }
    case Kind::Dold:
      return "Dold(r=" + std::to_string(params.at(0)) + ")";
    case Kind::Sphere:
      return "Sphere(" + std::to_string(params.at(0)) + ")";
  }
  return {};
}

ManifoldSpec parse_manifold(const std::string& text) {
  static const std::regex rp_product(R"(\s*RP\(\s*\d+\s*\)(\s*x\s*RP\(\s*\d+\s*\))*\s*)");
  static const std::regex rp_factor(R"(RP\(\s*(\d+)\s*\))");
  static const std::regex dold(R"(\s*Dold\(\s*r\s*=\s*(\d+)\s*\)\s*)");
  static const std::regex sphere(R"(\s*Sphere\(\s*(\d+)\s*\)\s*)");

  std::smatch m;
  if (std::regex_match(text, rp_product)) {
    ManifoldSpec spec{ManifoldSpec::Kind::RPProduct, {}};
    for (auto it = std::sregex_iterator(text.begin(), text.end(), rp_factor); it != std::sregex_iterator(); ++it) {
      int n = std::stoi((*it)[1].str());
      if (n < 1) throw std::invalid_argument("RP(n) requires n >= 1");
      spec.params.push_back(n);
    }
    return spec;
  }
  if (std::regex_match(text, m, dold)) {
    int r = std::stoi(m[1].str());
    if (r < 1 || r > 20) throw std::invalid_argument("Dold(r=R) requires 1 <= R <= 20");
    return {ManifoldSpec::Kind::Dold, {r}};
  }
  if (std::regex_match(text, m, sphere)) {
    int n = std::stoi(m[1].str());
    if (n < 1) throw std::invalid_argument("Sphere(n) requires n >= 1");
    return {ManifoldSpec::Kind::Sphere, {n}};
  }
  throw std::invalid_argument("unsupported manifold '" + text +
                              "' (expected RP(n)xRP(m)..., Dold(r=R) or Sphere(n))");
}

TruncRing::Element total_tangent_sw(const ManifoldSpec& m) {
  const TruncRing ring = m.ring();
  switch (m.kind) {
    case ManifoldSpec::Kind::RPProduct: {
      auto w = ring.one();
      for (std::size_t i = 0; i < m.params.size(); ++i)
        w = ring.mul(w, ring.pow(ring.one() + ring.gen(i), m.params[i] + 1));
      return w;
    }
    case ManifoldSpec::Kind::Dold: {
      const auto c = ring.gen(0);
      const auto d = ring.gen(1);
      const int q = 1 << (m.params.at(0) - 1);
      return ring.mul(ring.one() + c, ring.pow(ring.one() + c + d, q + 1));
    }
    case ManifoldSpec::Kind::Sphere:
      return ring.one();
  }
  return {};
}

TruncRing::Element total_normal_sw(const ManifoldSpec& m) { return m.ring().inverse(total_tangent_sw(m)); }

bool sw_number(const ManifoldSpec& m, const std::vector<int>& wbar_indices) {
  const int total = std::accumulate(wbar_indices.begin(), wbar_indices.end(), 0);
  if (total != m.dimension())
    throw std::invalid_argument("sw_number: monomial degree " + std::to_string(total) +
                                " does not match manifold dimension " + std::to_string(m.dimension()));
  const TruncRing ring = m.ring();
  const auto wbar = total_normal_sw(m);
  auto product = ring.one();
  for (int i : wbar_indices) product = ring.mul(product, ring.component(wbar, i));
  return product.contains(m.fundamental());
}

}  // namespace dblpt
