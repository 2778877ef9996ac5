#include "dblpt/mo.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dblpt/gf2.hpp"

namespace dblpt {

EMonomial::EMonomial(std::vector<int> idx, Context ctx) : indices(std::move(idx)), context(ctx) {
  std::sort(indices.begin(), indices.end());
  const int lower = context == Context::MO ? 1 : 0;
  if (!indices.empty() && indices.front() < lower)
    throw std::invalid_argument("e-monomial index " + std::to_string(indices.front()) +
                                (context == Context::MO ? " below 1 in MO context"
                                                        : " negative in BO context"));
}

int EMonomial::dimension() const { return std::accumulate(indices.begin(), indices.end(), 0); }

EMonomial e_pow(std::initializer_list<std::pair<int, int>> powers) {
  std::vector<int> idx;
  for (auto [i, p] : powers)
    for (int n = 0; n < p; ++n) idx.push_back(i);
  return EMonomial(std::move(idx));
}

namespace {

void partitions(int k, int n, int min_part, std::vector<int>& current, Context ctx,
                std::vector<EMonomial>& out) {
  if (k == 0) {
    if (n == 0) out.emplace_back(current, ctx);
    return;
  }
  // Remaining k parts are each >= part, so part * k <= n.
  for (int part = min_part; part * k <= n; ++part) {
    current.push_back(part);
    partitions(k - 1, n - part, part, current, ctx, out);
    current.pop_back();
  }
}

std::vector<EMonomial> sorted_lists(int k, int n, int lower, Context ctx) {
  std::vector<EMonomial> out;
  if (k < 1 || n < 0) return out;
  std::vector<int> current;
  partitions(k, n, lower, current, ctx, out);
  return out;
}

void check_context(const EMonomial& a, const EMonomial& b) {
  if (!a.is_unit() && !b.is_unit() && a.context != b.context)
    throw std::invalid_argument("e-monomial context mismatch (BO vs MO)");
}

}  // namespace

std::vector<EMonomial> mo_basis(int k, int n) { return sorted_lists(k, n, 1, Context::MO); }
std::vector<EMonomial> bo_basis(int k, int n) { return sorted_lists(k, n, 0, Context::BO); }

EMonomial merge(const EMonomial& a, const EMonomial& b) {
  check_context(a, b);
  EMonomial out;
  out.context = a.is_unit() ? b.context : a.context;
  out.indices.reserve(a.indices.size() + b.indices.size());
  std::merge(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
             std::back_inserter(out.indices));
  return out;
}

MOClass mo_product(const MOClass& a, const MOClass& b) {
  MOClass out;
  for (const auto& x : a)
    for (const auto& y : b) out.toggle(merge(x, y));
  return out;
}

MOTensor mo_coproduct(const EMonomial& m, bool reduced) {
  MOTensor out;
  if (m.is_unit()) {
    if (!reduced) out.toggle({m, m});
    return out;
  }
  const bool mo = m.context == Context::MO;
  const int lower = mo ? 1 : 0;
  const std::size_t k = m.indices.size();

  std::vector<int> left(k), right(k);
  std::function<void(std::size_t)> split = [&](std::size_t j) {
    if (j == k) {
      EMonomial l(left, m.context), r(right, m.context);
      if (!mo && reduced && (l.dimension() == 0 || r.dimension() == 0)) return;
      out.toggle({std::move(l), std::move(r)});
      return;
    }
    const int i = m.indices[j];
    for (int a = lower; a <= i - lower; ++a) {
      left[j] = a;
      right[j] = i - a;
      split(j + 1);
    }
  };
  split(0);

  if (mo && !reduced) {
    out.toggle({m, EMonomial::unit(m.context)});
    out.toggle({EMonomial::unit(m.context), m});
  }
  return out;
}

MOTensor mo_coproduct(const MOClass& c, bool reduced) {
  MOTensor out;
  for (const auto& m : c) out += mo_coproduct(m, reduced);
  return out;
}

MOClass sq_dual(int i, const EMonomial& m) {
  if (i < 0) throw std::invalid_argument("sq_dual: negative operation degree");
  MOClass out;
  if (i == 0) {
    out.toggle(m);
    return out;
  }
  if (m.is_unit()) return out;
  const bool mo = m.context == Context::MO;
  const std::size_t k = m.indices.size();
  std::vector<int> result(k);

  // Distribute i over the factors; factor j contributes C(i_j - t, t) e_{i_j - t}.
  std::function<void(std::size_t, int)> distribute = [&](std::size_t j, int remaining) {
    if (j == k) {
      if (remaining == 0) out.toggle(EMonomial(result, m.context));
      return;
    }
    const int ij = m.indices[j];
    for (int t = 0; t <= remaining && 2 * t <= ij; ++t) {
      if (!binom_mod2(ij - t, t)) continue;
      if (mo && ij - t == 0) continue;
      result[j] = ij - t;
      distribute(j + 1, remaining - t);
    }
  };
  distribute(0, i);
  return out;
}

MOClass sq_dual(int i, const MOClass& c) {
  MOClass out;
  for (const auto& m : c) out += sq_dual(i, m);
  return out;
}

bool kronecker_pair(const SymPoly& p, const EMonomial& m) {
  if (p.nvars() != m.k())
    throw std::invalid_argument("kronecker_pair: polynomial in " + std::to_string(p.nvars()) +
                                " variables paired with a " + std::to_string(m.k()) +
                                "-fold monomial");
  if (!p.is_zero() && p.degree() != m.dimension())
    throw std::invalid_argument("kronecker_pair: degree " + std::to_string(p.degree()) +
                                " paired with dimension " + std::to_string(m.dimension()));
  return p.coefficient(m.indices);
}

bool kronecker_pair(const SymPoly& p, const MOClass& c) {
  bool out = false;
  for (const auto& m : c) out ^= kronecker_pair(p, m);
  return out;
}

std::string render(const EMonomial& m) {
  if (m.is_unit()) return "1";
  std::string out = "e[";
  for (std::size_t j = 0; j < m.indices.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(m.indices[j]);
  }
  return out + "]";
}

std::string render(const MOClass& c) {
  return render_sum(c, [](const EMonomial& m) { return render(m); });
}

std::string render(const MOTensor& t) {
  return render_sum(t, [](const auto& p) { return render(p.first) + " (x) " + render(p.second); });
}

}  // namespace dblpt
