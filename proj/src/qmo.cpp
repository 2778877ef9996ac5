#include "dblpt/qmo.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "dblpt/gf2.hpp"

namespace dblpt {

int QGenerator::dimension() const {
  return base.dimension() + susp + std::accumulate(ops.begin(), ops.end(), 0);
}

int QGenerator::excess() const {
  if (ops.empty()) return 0;
  return ops.front() - std::accumulate(ops.begin() + 1, ops.end(), 0);
}

std::strong_ordering operator<=>(const QGenerator& a, const QGenerator& b) {
  if (auto c = a.ops.size() <=> b.ops.size(); c != 0) return c;
  if (auto c = a.base <=> b.base; c != 0) return c;
  if (auto c = a.susp <=> b.susp; c != 0) return c;
  return a.ops <=> b.ops;
}

bool is_admissible_sequence(const std::vector<int>& ops) {
  for (std::size_t j = 0; j + 1 < ops.size(); ++j)
    if (ops[j] > 2 * ops[j + 1]) return false;
  return true;
}

QGenerator make_generator(std::vector<int> ops, EMonomial base, int susp) {
  if (base.context != Context::MO || base.is_unit())
    throw std::invalid_argument("generator base must be an MO(k) monomial");
  QGenerator g{std::move(ops), std::move(base), susp};
  if (!is_admissible_sequence(g.ops))
    throw InadmissibleComposition("inadmissible composition " + render(g));
  if (!g.ops.empty() && g.excess() <= g.base.dimension() + g.susp)
    throw InadmissibleComposition("inadmissible composition " + render(g) + ": excess " +
                                  std::to_string(g.excess()) + " not above base dimension");
  return g;
}

QMonomial::QMonomial(std::vector<QGenerator> f) : factors(std::move(f)) {
  std::sort(factors.begin(), factors.end());
}

int QMonomial::dimension() const {
  int d = 0;
  for (const auto& g : factors) d += g.dimension();
  return d;
}

int QMonomial::height() const {
  int h = 0;
  for (const auto& g : factors) h += g.height();
  return h;
}

std::strong_ordering operator<=>(const QMonomial& a, const QMonomial& b) {
  if (auto c = a.height() <=> b.height(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.factors.begin(), a.factors.end(), b.factors.begin(),
                                                b.factors.end());
}

QMonomial operator*(const QMonomial& a, const QMonomial& b) {
  QMonomial out;
  out.factors.reserve(a.factors.size() + b.factors.size());
  std::merge(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
             std::back_inserter(out.factors));
  return out;
}

QClass q_class(const EMonomial& m) { return q_class(make_generator({}, m)); }
QClass q_class(const QGenerator& g) { return QClass(QMonomial(g)); }
QClass q_class(const QMonomial& m) { return QClass(m); }

QClass q_product(const QClass& a, const QClass& b) {
  QClass out;
  for (const auto& x : a)
    for (const auto& y : b) out.toggle(x * y);
  return out;
}

QTensor tensor(const QClass& a, const QClass& b) {
  QTensor out;
  for (const auto& x : a)
    for (const auto& y : b) out.toggle({x, y});
  return out;
}

QTensor tensor_product(const QTensor& a, const QTensor& b) {
  QTensor out;
  for (const auto& [a1, a2] : a)
    for (const auto& [b1, b2] : b) out.toggle({a1 * b1, a2 * b2});
  return out;
}

// ---------------------------------------------------------------------------

std::vector<QGenerator> qmo_generators(int k, int max_dim) {
  std::vector<QGenerator> out;
  std::function<void(const QGenerator&)> extend = [&](const QGenerator& g) {
    out.push_back(g);
    const int d = g.dimension();
    const int upper = g.ops.empty() ? max_dim - d : std::min(max_dim - d, 2 * g.ops.front());
    for (int i = d + 1; i <= upper; ++i) {
      QGenerator next = g;
      next.ops.insert(next.ops.begin(), i);
      extend(next);
    }
  };
  for (int d = k; d <= max_dim; ++d)
    for (const auto& e : mo_basis(k, d)) extend(QGenerator{{}, e, 0});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QMonomial> qmo_basis(int k, int n) {
  std::vector<QMonomial> out;
  if (k < 1 || n < 1) return out;
  // Multisets are chosen in order of non-decreasing dimension, so each loop
  // can stop at the first generator that no longer fits.
  auto gens = qmo_generators(k, n);
  std::stable_sort(gens.begin(), gens.end(),
                   [](const QGenerator& a, const QGenerator& b) { return a.dimension() < b.dimension(); });
  std::vector<int> dims;
  for (const auto& g : gens) dims.push_back(g.dimension());
  std::vector<QGenerator> current;
  std::function<void(std::size_t, int)> choose = [&](std::size_t from, int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t j = from; j < gens.size(); ++j) {
      const int d = dims[j];
      if (d > remaining) break;
      current.push_back(gens[j]);
      choose(j, remaining - d);
      current.pop_back();
    }
  };
  choose(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

QClass project_height(const QClass& c, int height) {
  QClass out;
  for (const auto& m : c)
    if (m.height() == height) out.toggle(m);
  return out;
}

QClass h2_project(const QClass& c) { return project_height(c, 2); }

// ---------------------------------------------------------------------------

namespace {

QClass q_apply_generator(int i, const QGenerator& g) {
  QGenerator next = g;
  if (!g.ops.empty() && i > 2 * g.ops.front())
    throw InadmissibleComposition("inadmissible composition Q^" + std::to_string(i) + " on " + render(g) +
                                  " (Dyer-Lashof Adem relations are not implemented)");
  next.ops.insert(next.ops.begin(), i);
  return QClass(QMonomial(std::move(next)));
}

}  // namespace

QClass q_apply(int i, const QMonomial& m) {
  if (i < 0) throw std::invalid_argument("Q^i with negative i");
  if (m.is_unit()) return i == 0 ? QClass(m) : QClass();
  const int d = m.dimension();
  if (i < d) return {};
  if (i == d) return QClass(m * m);
  if (m.factors.size() == 1) return q_apply_generator(i, m.factors.front());

  // Cartan formula: Q^i(g * rest) = sum_a Q^a g * Q^{i-a} rest.
  const QMonomial head(m.factors.front());
  const QMonomial rest(std::vector<QGenerator>(m.factors.begin() + 1, m.factors.end()));
  const int dh = head.dimension();
  const int dr = rest.dimension();
  QClass out;
  for (int a = dh; a <= i - dr; ++a) out += q_product(q_apply(a, head), q_apply(i - a, rest));
  return out;
}

QClass q_apply(int i, const QClass& c) {
  QClass out;
  for (const auto& m : c) out += q_apply(i, m);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

QTensor generator_coproduct(const QGenerator& g) {
  const QMonomial self(g);
  QTensor out;
  if (g.ops.empty()) {
    if (g.susp > 0) {
      // Suspensions are primitive.
      out.toggle({self, QMonomial::unit()});
      out.toggle({QMonomial::unit(), self});
      return out;
    }
    auto side = [](const EMonomial& e) {
      return e.is_unit() ? QMonomial::unit() : QMonomial(QGenerator{{}, e, 0});
    };
    for (const auto& [l, r] : mo_coproduct(g.base, false)) out.toggle({side(l), side(r)});
    return out;
  }

  QGenerator inner = g;
  const int n = inner.ops.front();
  inner.ops.erase(inner.ops.begin());
  for (const auto& [u, v] : generator_coproduct(inner)) {
    const int du = u.dimension();
    const int dv = v.dimension();
    for (int a = du; a <= n - dv; ++a) out += tensor(q_apply(a, u), q_apply(n - a, v));
  }
  return out;
}

}  // namespace

QTensor q_coproduct(const QMonomial& m, bool reduced) {
  QTensor out;
  out.toggle({QMonomial::unit(), QMonomial::unit()});
  for (const auto& g : m.factors) out = tensor_product(out, generator_coproduct(g));
  if (!reduced) return out;
  QTensor trimmed;
  for (const auto& t : out)
    if (!t.first.is_unit() && !t.second.is_unit()) trimmed.toggle(t);
  return trimmed;
}

QTensor q_coproduct(const QClass& c, bool reduced) {
  QTensor out;
  for (const auto& m : c) out += q_coproduct(m, reduced);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

QClass nishida_generator(int i, const QGenerator& g) {
  if (g.ops.empty()) {
    QClass out;
    for (const auto& e : sq_dual(i, g.base)) out.toggle(QMonomial(QGenerator{{}, e, g.susp}));
    return out;
  }
  QGenerator inner = g;
  const int s = inner.ops.front();
  inner.ops.erase(inner.ops.begin());
  if (s < i)
    throw DomainError("Nishida relation Sq^" + std::to_string(i) + "_* Q^" + std::to_string(s) +
                      " with i > s is outside the supported range");
  const QClass x(QMonomial(std::move(inner)));
  QClass out;
  for (int t = 0; 2 * t <= i; ++t) {
    if (!binom_mod2(s - i, i - 2 * t)) continue;
    out += q_apply(s - i + t, nishida(t, x));
  }
  return out;
}

}  // namespace

QClass nishida(int i, const QMonomial& m) {
  if (i < 0) throw std::invalid_argument("Sq^i_* with negative i");
  if (i == 0) return QClass(m);
  if (m.is_unit()) return {};
  if (m.factors.size() == 1) return nishida_generator(i, m.factors.front());

  // Dual Cartan formula over the Pontrjagin product.
  const QMonomial head(m.factors.front());
  const QMonomial rest(std::vector<QGenerator>(m.factors.begin() + 1, m.factors.end()));
  QClass out;
  for (int a = 0; a <= i; ++a) {
    QClass left = nishida(a, head);
    if (left.is_zero()) continue;
    out += q_product(left, nishida(i - a, rest));
  }
  return out;
}

QClass nishida(int i, const QClass& c) {
  QClass out;
  for (const auto& m : c) out += nishida(i, m);
  return out;
}

// ---------------------------------------------------------------------------

QClass homology_suspend(const QClass& c, int times) {
  if (times < 1) throw std::invalid_argument("homology_suspend: times must be positive");
  QClass out;
  for (const auto& m : c) {
    if (m.factors.size() != 1) continue;
    const QGenerator& g = m.factors.front();
    QClass value(QMonomial(QGenerator{{}, g.base, g.susp + times}));
    for (auto it = g.ops.rbegin(); it != g.ops.rend(); ++it) value = q_apply(*it, value);
    out += value;
  }
  return out;
}

std::vector<QClass> primitive_submodule(int k, int n) {
  return kernel_of(qmo_basis(k, n), [](const QMonomial& m) { return q_coproduct(m, true); });
}

// ---------------------------------------------------------------------------

std::string render(const QGenerator& g) {
  std::string out = render(g.base);
  if (g.susp > 0) out = "susp^" + std::to_string(g.susp) + "(" + out + ")";
  for (auto it = g.ops.rbegin(); it != g.ops.rend(); ++it) out = "Q^" + std::to_string(*it) + "(" + out + ")";
  return out;
}

std::string render(const QMonomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& g : m.factors) {
    if (!out.empty()) out += "*";
    out += render(g);
  }
  return out;
}

std::string render(const QClass& c) {
  return render_sum(c, [](const QMonomial& m) { return render(m); });
}

std::string render(const QTensor& t) {
  return render_sum(t, [](const auto& p) { return render(p.first) + " (x) " + render(p.second); });
}

}  // namespace dblpt
