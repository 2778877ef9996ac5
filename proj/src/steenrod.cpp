#include "dblpt/steenrod.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dblpt/gf2.hpp"

namespace dblpt {

SqMonomial::SqMonomial(std::vector<int> ex) {
  for (int a : ex) {
    if (a < 0) throw std::invalid_argument("Sq^a with negative a");
    if (a > 0) exponents.push_back(a);
  }
}

int SqMonomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool SqMonomial::is_admissible() const {
  for (std::size_t j = 0; j + 1 < exponents.size(); ++j)
    if (exponents[j] < 2 * exponents[j + 1]) return false;
  return true;
}

SqElement sq(std::vector<int> exponents) { return SqElement(SqMonomial(std::move(exponents))); }

namespace {

using AdemMemo = std::map<std::vector<int>, SqElement>;

const SqElement& normalize_monomial(const std::vector<int>& ex, AdemMemo& memo) {
  if (auto it = memo.find(ex); it != memo.end()) return it->second;

  std::size_t j = 0;
  while (j + 1 < ex.size() && ex[j] >= 2 * ex[j + 1]) ++j;

  SqElement out;
  if (j + 1 >= ex.size()) {
    out.toggle(SqMonomial(ex));
  } else {
    const int a = ex[j];
    const int b = ex[j + 1];
    for (int c = 0; 2 * c <= a; ++c) {
      if (!binom_mod2(b - c - 1, a - 2 * c)) continue;
      std::vector<int> next(ex.begin(), ex.begin() + static_cast<std::ptrdiff_t>(j));
      next.push_back(a + b - c);
      if (c > 0) next.push_back(c);
      next.insert(next.end(), ex.begin() + static_cast<std::ptrdiff_t>(j + 2), ex.end());
      out += normalize_monomial(next, memo);
    }
  }
  return memo.emplace(ex, std::move(out)).first->second;
}

}  // namespace

SqElement adem_normalize(const SqElement& e) {
  AdemMemo memo;
  SqElement out;
  for (const auto& m : e) out += normalize_monomial(m.exponents, memo);
  return out;
}

SymPoly sq_act(int a, const SymPoly& p) {
  if (a < 0) throw std::invalid_argument("sq_act: negative operation degree");
  if (a == 0) return p;
  const int n = p.nvars();
  SymPoly out(n);
  for (const auto& e : p.terms()) {
    // suffix[j] = total exponent of variables j..n-1; no variable can absorb
    // more than its own exponent.
    std::vector<int> suffix(static_cast<std::size_t>(n) + 1, 0);
    for (int j = n - 1; j >= 0; --j)
      suffix[static_cast<std::size_t>(j)] = suffix[static_cast<std::size_t>(j) + 1] + e[static_cast<std::size_t>(j)];
    if (suffix[0] < a) continue;

    Exponents result = e;
    std::function<void(int, int)> distribute = [&](int j, int remaining) {
      if (j == n) {
        if (remaining == 0) out.toggle(result);
        return;
      }
      const auto uj = static_cast<std::size_t>(j);
      if (suffix[uj] < remaining) return;
      for (int t = 0; t <= e[uj] && t <= remaining; ++t) {
        if (!binom_mod2(e[uj], t)) continue;
        result[uj] = e[uj] + t;
        distribute(j + 1, remaining - t);
      }
      result[uj] = e[uj];
    };
    distribute(0, a);
  }
  return out;
}

SymPoly act(const SqMonomial& m, const SymPoly& p) {
  SymPoly out = p;
  for (auto it = m.exponents.rbegin(); it != m.exponents.rend(); ++it) out = sq_act(*it, out);
  return out;
}

SymPoly act(const SqElement& e, const SymPoly& p) {
  SymPoly out(p.nvars());
  for (const auto& m : e) out += act(m, p);
  return out;
}

WPoly wu_rhs(int i, int j, int nvars) {
  WPoly out;
  for (int t = 0; t <= i; ++t) {
    if (!binom_mod2(j - i + t - 1, t)) continue;
    const int low = i - t;
    const int high = j + t;
    if (high > nvars || low > nvars) continue;
    WExponents w(static_cast<std::size_t>(high), 0);
    w[static_cast<std::size_t>(high - 1)] += 1;
    if (low > 0) w[static_cast<std::size_t>(low - 1)] += 1;
    out.toggle(w_normalize(std::move(w)));
  }
  return out;
}

bool wu_check(int i, int j, int nvars) {
  if (!(1 <= i && i <= j && j <= nvars))
    throw std::invalid_argument("wu_check: requires 1 <= i <= j <= k, got i=" + std::to_string(i) +
                                " j=" + std::to_string(j) + " k=" + std::to_string(nvars));
  return sq_act(i, SymPoly::elementary(nvars, j)) == from_w(wu_rhs(i, j, nvars), nvars);
}

SuspendedClass suspend_act(int a, const SuspendedClass& c) { return {c.susp, sq_act(a, c.payload)}; }

SuspendedClass suspend_act(const SqElement& e, const SuspendedClass& c) { return {c.susp, act(e, c.payload)}; }

bool Lemma55Report::all_hold() const {
  if (!adem_identity || !final_is_zero) return false;
  for (const auto& s : steps)
    if (!s.holds) return false;
  return true;
}

Lemma55Report lemma55_check(int r) {
  if (r < 1) throw std::invalid_argument("lemma55_check: r must be >= 1");
  Lemma55Report rep;
  rep.r = r;
  rep.k = 4 * r - 1;
  const int k = rep.k;
  const int top = 4 * r;

  const SqElement decomposed = sq({2, top}) + sq({1, top, 1});
  rep.adem_identity = adem_normalize(decomposed) == sq({top + 2});

  const auto w = [k](WExponents e) { return from_w(e, k); };
  WExponents wk(static_cast<std::size_t>(k), 0);
  wk[static_cast<std::size_t>(k - 1)] = 1;
  WExponents w1wk = wk;
  w1wk[0] = 1;
  WExponents w1wk2 = wk;
  w1wk2[0] = 1;
  w1wk2[static_cast<std::size_t>(k - 1)] = 2;
  WExponents w1sq_wk2 = w1wk2;
  w1sq_wk2[0] = 2;

  const SuspendedClass u{2, w(wk)};
  const SuspendedClass zero{2, SymPoly(k)};
  const std::string ws = "w" + std::to_string(k);
  const std::string top_s = std::to_string(top);

  auto add = [&rep](std::string label, std::string expected, SuspendedClass value, const SuspendedClass& want) {
    bool holds = value == want;
    rep.steps.push_back({std::move(label), std::move(expected), std::move(value), holds});
  };

  add("Sq^2 Sq^" + top_s + " susp^2(" + ws + ")", "0",
      suspend_act(2, suspend_act(top, u)), zero);
  add("Sq^" + top_s + " Sq^1 susp^2(" + ws + ")", "susp^2(w1^2*" + ws + "^2)",
      suspend_act(top, suspend_act(1, u)), {2, w(w1sq_wk2)});
  add("Sq^1 susp^2(w1*" + ws + "^2)", "susp^2(w1^2*" + ws + "^2)",
      suspend_act(1, {2, w(w1wk2)}), {2, w(w1sq_wk2)});
  add("Sq^1 Sq^1 susp^2(w1*" + ws + "^2)", "0",
      suspend_act(sq({1, 1}), {2, w(w1wk2)}), zero);
  // Sq^1 Sq^1 is zero in the Steenrod algebra itself.
  add("Sq^1 Sq^1 (admissible form)", "0",
      suspend_act(adem_normalize(sq({1, 1})), {2, w(w1wk2)}), zero);

  rep.final_value = suspend_act(decomposed, u);
  rep.final_is_zero = rep.final_value.payload.is_zero();
  return rep;
}

std::string render(const SqMonomial& m) {
  if (m.exponents.empty()) return "Sq^0";
  std::string out;
  for (int a : m.exponents) {
    if (!out.empty()) out += " ";
    out += "Sq^" + std::to_string(a);
  }
  return out;
}

std::string render(const SqElement& e) {
  return render_sum(e, [](const SqMonomial& m) { return render(m); });
}

std::string render(const SuspendedClass& c) {
  if (c.payload.is_zero()) return "0";
  std::string body = render_w(to_w_basis(c.payload));
  if (c.susp == 0) return body;
  return "susp^" + std::to_string(c.susp) + "(" + body + ")";
}

}  // namespace dblpt
