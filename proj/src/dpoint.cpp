#include "dblpt/dpoint.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "dblpt/gf2.hpp"

namespace dblpt {

namespace {

QMonomial product_of(const EMonomial& a, const EMonomial& b) {
  return QMonomial(std::vector<QGenerator>{QGenerator{{}, a, 0}, QGenerator{{}, b, 0}});
}

}  // namespace

D2Elements d2_elements(int k) {
  if (k < 2) throw std::invalid_argument("d2_elements: requires k >= 2");
  const EMonomial e1k = e_pow({{1, k}});
  return {
      product_of(e1k, e_pow({{1, k - 1}, {3, 1}})),
      product_of(e1k, e_pow({{1, k - 2}, {2, 2}})),
      product_of(e_pow({{1, k - 1}, {2, 1}}), e_pow({{1, k - 1}, {2, 1}})),
      QMonomial(QGenerator{{k + 2}, e1k, 0}),
  };
}

std::vector<QMonomial> d2_closed_form(int k) {
  const auto e = d2_elements(k);
  std::vector<QMonomial> out{e.e13, e.e22, e.square, e.q_top};
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QMonomial> d2_basis(int k) {
  if (k < 1) throw std::invalid_argument("d2_basis: requires k >= 1");
  std::vector<QMonomial> out;
  for (auto& m : qmo_basis(k, 2 * k + 2))
    if (m.height() == 2) out.push_back(std::move(m));
  if (k >= 2 && out != d2_closed_form(k))
    throw std::logic_error("d2_basis: enumeration disagrees with the closed form at k=" + std::to_string(k));
  return out;
}

MOClass xi_q_image(int k) {
  if (k < 1) throw std::invalid_argument("xi_q_image: requires k >= 1");
  MOClass out;
  std::vector<int> m(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> compose = [&](int j, int remaining) {
    if (j == k - 1) {
      m[static_cast<std::size_t>(j)] = remaining;
      bool coeff = true;
      std::vector<int> idx;
      for (int mj : m) {
        coeff = coeff && binom_mod2(mj - 1, 0);
        idx.push_back(1);
        idx.push_back(mj + 1);
      }
      if (coeff) out.toggle(EMonomial(std::move(idx)));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      m[static_cast<std::size_t>(j)] = v;
      compose(j + 1, remaining - v);
    }
  };
  compose(0, 2);
  return out;
}

MOClass xi_push(const D2Class& c, int k) {
  MOClass out;
  for (const auto& term : c) {
    if (term.dimension() != 2 * k + 2 || term.height() != 2)
      throw DomainError("xi undefined outside the height-2, dimension 2k+2 range: " + render(term));
    if (term.factors.size() == 2) {
      const auto& a = term.factors[0];
      const auto& b = term.factors[1];
      if (a.susp != 0 || b.susp != 0 || a.base.k() != k || b.base.k() != k)
        throw DomainError("xi undefined for " + render(term));
      out.toggle(merge(a.base, b.base));
      continue;
    }
    const auto& g = term.factors.front();
    if (g.susp == 0 && g.ops == std::vector<int>{k + 2} && g.base == e_pow({{1, k}})) {
      out += xi_q_image(k);
      continue;
    }
    throw DomainError("xi undefined for " + render(term));
  }
  return out;
}

EMonomial odd_marker(int k) { return e_pow({{1, 2 * k - 1}, {3, 1}}); }

Parity parity_decision(const D2Class& c, int k) {
  return xi_push(c, k).contains(odd_marker(k)) ? Parity::Odd : Parity::Even;
}

const char* to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

}  // namespace dblpt
