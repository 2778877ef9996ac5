#include "dblpt/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "dblpt/gf2.hpp"
#include "dblpt/poly.hpp"

namespace dblpt {

const std::vector<ExistenceFact>& existence_facts() {
  static const std::vector<ExistenceFact> facts{
      {"cohen-immersion", "alpha(k+2) >= 2",
       "every closed n-manifold immerses in R^{2n - alpha(n)}, so every M^{k+2} immerses in R^{2k+2}",
       "R. Cohen (1985), the immersion conjecture for differentiable manifolds"},
      {"brown-embedding", "alpha(k+2) > 2",
       "every closed M^{k+2} is bordant to a manifold that embeds in R^{2k+2}",
       "R. L. W. Brown (1971), immersions and embeddings up to cobordism"},
      {"sphere-odd-double-points", "k = 1 mod 4",
       "there is a self-transverse immersion S^{k+2} -> R^{2k+2} whose double point surface has odd Euler "
       "characteristic",
       "construction of immersed spheres with odd double point surfaces (1997)"},
      {"decomposables-embed", "k = 3 mod 4 and alpha(k+2) = 2",
       "every decomposable M^{k+2} is bordant to a manifold that embeds in R^{2k+2}",
       "R. L. W. Brown (1971), with Whitney's immersion theorem"},
      {"dold-indecomposable", "k + 1 = 2^r",
       "the Dold manifold P(1, 2^{r-1}) is indecomposable in the unoriented bordism ring, so every "
       "indecomposable M^{k+2} is bordant to it modulo decomposables",
       "A. Dold (1956)"},
      {"dold-orientable", "k + 1 = 2^r",
       "P(1, 2^{r-1}) is orientable, so its Hurewicz image lifts to H_*QMSO(k) where "
       "e1^{k-1}e2 cannot occur",
       "A. Dold (1956)"},
      {"whitney-rp-immersion", "k even",
       "RP^{2^r} immerses in R^{2^{r+1} - 1}, realizing the non-zero height-2 class for even k",
       "H. Whitney (1944)"},
  };
  return facts;
}

const ExistenceFact& existence_fact(const std::string& id) {
  for (const auto& f : existence_facts())
    if (f.id == id) return f;
  throw std::out_of_range("unknown existence fact '" + id + "'");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::ForcedEven:
      return "even";
    case Verdict::BothAchievable:
      return "both";
    case Verdict::DependsOnManifold:
      return "depends_on_M";
  }
  return "?";
}

std::string wbar_label(const std::vector<int>& indices) {
  static const char* const subscripts[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (int i : indices) {
    out += "w̄";
    for (char c : std::to_string(i)) out += subscripts[c - '0'];
  }
  return out + "[M]";
}

namespace {

/// Basis of {v in span(basis) : map(v) = 0}.
template <class F>
std::vector<QClass> restricted_kernel(const std::vector<QClass>& basis, F&& map) {
  std::vector<int> index(basis.size());
  std::iota(index.begin(), index.end(), 0);
  std::vector<QClass> out;
  for (const auto& combo : kernel_of(index, [&](int j) { return map(basis[static_cast<std::size_t>(j)]); })) {
    QClass v;
    for (int j : combo) v += basis[static_cast<std::size_t>(j)];
    out.push_back(std::move(v));
  }
  return span_basis(out);
}

/// All 2^n elements of span(basis).
std::vector<QClass> span_elements(const std::vector<QClass>& basis) {
  std::vector<QClass> out{QClass{}};
  for (const auto& b : basis) {
    const std::size_t n = out.size();
    for (std::size_t j = 0; j < n; ++j) out.push_back(out[j] + b);
  }
  return out;
}

using TaggedClass = Gf2Sum<std::pair<int, QMonomial>>;

TaggedClass dual_squares(const QClass& c, int up_to) {
  TaggedClass out;
  for (int i = 1; i <= up_to; ++i)
    for (const auto& m : nishida(i, c)) out.toggle({i, m});
  return out;
}

QMonomial height_one(const EMonomial& e) { return QMonomial(QGenerator{{}, e, 0}); }

/// sigma_2 sigma_k^2 in k variables, the class pairing with e2^{k-2}e3^2.
SymPoly w2_wk_squared(int k) {
  WExponents w(static_cast<std::size_t>(k), 0);
  w[1] += 1;
  w[static_cast<std::size_t>(k - 1)] += 2;
  return from_w(w_normalize(w), k);
}

struct DoldEvidence {
  bool sw_number_one = false;
  bool pairing_isolates = false;
  bool coefficients_linked = false;
  bool wbar1_vanishes = false;
  std::optional<QClass> selected;
};

DoldEvidence dold_evidence(int k, const CandidateModule& cand) {
  DoldEvidence ev;
  const int r = binary_digit_count(static_cast<unsigned>(k));  // k = 2^r - 1 has r binary ones
  const ManifoldSpec dold{ManifoldSpec::Kind::Dold, {r}};
  ev.sw_number_one = sw_number(dold, {2, k});
  ev.wbar1_vanishes = dold.ring().component(total_normal_sw(dold), 1).is_zero();

  const EMonomial target = e_pow({{2, k - 2}, {3, 2}});
  const SymPoly dual = w2_wk_squared(k);
  ev.pairing_isolates = true;
  for (const auto& e : mo_basis(k, 2 * k + 2))
    if (kronecker_pair(dual, e) != (e == target)) ev.pairing_isolates = false;

  const auto el = d2_elements(k);
  ev.coefficients_linked = true;
  for (const auto& p : cand.primitives)
    if (p.contains(height_one(target)) != p.contains(el.e22)) ev.coefficients_linked = false;

  std::vector<QClass> matches;
  for (const auto& c : span_elements(cand.basis))
    if (c.contains(el.e22) && !c.contains(el.square)) matches.push_back(c);
  if (matches.size() == 1) ev.selected = matches.front();
  return ev;
}

}  // namespace

CandidateModule candidate_submodule(int k) {
  if (k < 1) throw std::invalid_argument("candidate_submodule: requires k >= 1");
  CandidateModule out;
  out.k = k;
  out.primitives = primitive_submodule(k, 2 * k + 2);

  std::vector<QClass> projected;
  for (const auto& p : out.primitives)
    if (auto h = h2_project(p); !h.is_zero()) projected.push_back(std::move(h));
  out.primitive_projection = span_basis(projected);

  out.basis = restricted_kernel(out.primitive_projection, [](const QClass& c) { return dual_squares(c, 2); });
  try {
    out.higher_kernel_dimension =
        restricted_kernel(out.basis, [](const QClass& c) { return dual_squares(c, 4); }).size();
  } catch (const DomainError&) {
    // Sq^i_* Q^s with i > s is not implemented; the extra check is skipped.
    out.higher_squares_evaluated = false;
    out.higher_kernel_dimension = out.basis.size();
  }
  out.primitive_candidates =
      restricted_kernel(out.basis, [](const QClass& c) { return q_coproduct(c, true); });

  if (k % 4 == 3 && k >= 3) {
    out.lemma55 = lemma55_check((k + 1) / 4);
    // The exclusion applies to a primitive candidate whose double suspension
    // is the square of sigma^2 e1^k: that square would need a non-zero
    // Sq^{k+3} on sigma^2 w_k.
    const QClass u(QMonomial(QGenerator{{}, e_pow({{1, k}}), 2}));
    const QClass u_squared = q_product(u, u);
    if (out.lemma55->all_hold() && out.primitive_candidates.size() == 1 &&
        homology_suspend(out.primitive_candidates.front(), 2) == u_squared)
      out.lemma55_excluded = out.primitive_candidates.front();
  }
  return out;
}

ClassificationReport classify(int k) {
  if (k < 1) throw std::invalid_argument("classify: requires k >= 1");
  ClassificationReport rep;
  rep.k = k;
  rep.residue = k % 4;
  rep.alpha_k2 = binary_digit_count(static_cast<unsigned>(k + 2));

  const CandidateModule cand = candidate_submodule(k);
  rep.candidate_basis = cand.basis;
  rep.lemma55_excluded = cand.lemma55_excluded;
  rep.higher_squares_shrink = cand.higher_kernel_dimension < cand.basis.size();

  auto log = [&](std::string line) { rep.derivation.push_back(std::move(line)); };
  auto use = [&](const char* id) { rep.existence_facts_used.emplace_back(id); };

  log("primitives of H_" + std::to_string(2 * k + 2) + "QMO(" + std::to_string(k) + "): dimension " +
      std::to_string(cand.primitives.size()));
  log("height-2 projection of the primitives: dimension " + std::to_string(cand.primitive_projection.size()));
  log("annihilated by Sq^1_* and Sq^2_*: dimension " + std::to_string(cand.basis.size()));
  if (cand.higher_squares_evaluated)
    log("also annihilated by Sq^3_* and Sq^4_*: dimension " + std::to_string(cand.higher_kernel_dimension));
  else
    log("Sq^3_* and Sq^4_* check skipped: needs Sq^i_* Q^s with i > s");

  for (const auto& c : cand.basis) {
    rep.xi_images.push_back(xi_push(c, k));
    if (parity_decision(c, k) == Parity::Odd) rep.constraints_allow_odd = true;
    log("xi(" + render(c) + ") = " + render(rep.xi_images.back()) + " [" + to_string(parity_decision(c, k)) + "]");
  }

  std::vector<QClass> ambiguous;
  for (const auto& p : cand.primitive_candidates)
    if (!(cand.lemma55_excluded && p == *cand.lemma55_excluded)) ambiguous.push_back(p);
  if (cand.lemma55_excluded)
    log("excluded by the vanishing of Sq^" + std::to_string(k + 3) + " on susp^2(w" + std::to_string(k) +
        "): " + render(*cand.lemma55_excluded));
  rep.determined_by_bordism = ambiguous.empty();

  const bool odd_ambiguity = std::any_of(ambiguous.begin(), ambiguous.end(),
                                         [&](const QClass& c) { return parity_decision(c, k) == Parity::Odd; });

  if (odd_ambiguity) {
    log("a primitive candidate with odd xi-image can be added to any immersion's class");
    if (k % 4 != 1 || rep.alpha_k2 < 2)
      throw std::logic_error("classify: odd primitive candidate without a realization fact at k=" +
                             std::to_string(k));
    use("cohen-immersion");
    use("sphere-odd-double-points");
    rep.forced_parity = Verdict::BothAchievable;
    rep.odd_achievable = true;
  } else if (!rep.constraints_allow_odd) {
    log("no candidate has an odd xi-image");
    rep.forced_parity = Verdict::ForcedEven;
  } else if (rep.alpha_k2 > 2) {
    log("the height-2 class depends only on the bordism class of M, and M is bordant to an embedded manifold");
    use("brown-embedding");
    rep.forced_parity = Verdict::ForcedEven;
  } else {
    if (!is_power_of_two(static_cast<unsigned>(k + 1)) || k < 3)
      throw std::logic_error("classify: unexpected residue at k=" + std::to_string(k));
    const DoldEvidence ev = dold_evidence(k, cand);
    const std::string label = wbar_label({2, k});
    log(std::string("Dold manifold: ") + label + " = " + (ev.sw_number_one ? "1" : "0"));
    log(std::string("Dold manifold: w̄₁ = ") + (ev.wbar1_vanishes ? "0" : "non-zero"));
    log(std::string("w2*w") + std::to_string(k) + "^2 pairs only with e2^" + std::to_string(k - 2) +
        "e3^2: " + (ev.pairing_isolates ? "yes" : "no"));
    log(std::string("primitives link the e2^") + std::to_string(k - 2) + "e3^2 and e1^k*e1^" +
        std::to_string(k - 2) + "e2^2 coefficients: " + (ev.coefficients_linked ? "yes" : "no"));
    if (!ev.sw_number_one || !ev.pairing_isolates || !ev.coefficients_linked || !ev.wbar1_vanishes || !ev.selected ||
        parity_decision(*ev.selected, k) != Parity::Odd)
      throw std::logic_error("classify: Dold manifold analysis failed at k=" + std::to_string(k));
    log("oriented indecomposable class: " + render(*ev.selected) + " [odd]");
    use("cohen-immersion");
    use("decomposables-embed");
    use("dold-indecomposable");
    use("dold-orientable");
    rep.forced_parity = Verdict::DependsOnManifold;
    rep.odd_achievable = true;
    rep.criterion = label;
  }

  rep.matches_closed_form = rep.odd_achievable == (k % 4 == 1 || is_power_of_two(static_cast<unsigned>(k + 1)));
  return rep;
}

HurewiczProfile hurewicz_profile(int k, const ManifoldSpec& manifold) {
  if (k < 1) throw std::invalid_argument("hurewicz_profile: requires k >= 1");
  if (manifold.dimension() != k + 2)
    throw std::invalid_argument("hurewicz_profile: " + manifold.render() + " has dimension " +
                                std::to_string(manifold.dimension()) + ", expected k + 2 = " +
                                std::to_string(k + 2));
  HurewiczProfile out;
  out.k = k;
  out.manifold = manifold.render();
  out.sw_label = wbar_label({2, k});
  out.sw_value = sw_number(manifold, {2, k});

  const QClass e1k = q_class(e_pow({{1, k}}));
  if (k == 1) {
    out.correction = q_apply(3, e1k) + q_product(q_product(e1k, e1k), q_product(e1k, e1k));
    out.formula = "h(alpha) = h^S(alpha) + lambda (" + render(out.correction) + ")";
    out.annotations.push_back("lambda is the parity of the double point surface, set by the immersion");
    out.annotations.push_back("the height-4 term records an odd number of quadruple points");
    return out;
  }

  const auto el = d2_elements(k);
  if (k % 2 == 0) {
    out.parity = Parity::Even;
    if (out.sw_value) {
      out.correction = QClass{el.e22, el.square};
      if (k == 2) {
        out.correction.toggle(QMonomial(std::vector<QGenerator>(3, QGenerator{{}, e_pow({{1, 2}}), 0})));
        out.annotations.push_back("the height-3 term records an odd number of triple points");
      } else {
        out.annotations.push_back("height-2 part shown");
      }
    }
  } else if (k % 4 == 1) {
    out.correction = QClass{el.q_top};
    out.formula = "h(alpha) = h^S(alpha) + lambda " + render(out.correction);
    out.annotations.push_back("lambda is the parity of the double point surface, set by the immersion");
    return out;
  } else if (binary_digit_count(static_cast<unsigned>(k + 2)) > 2) {
    out.parity = Parity::Even;
  } else {
    out.parity = out.sw_value ? Parity::Odd : Parity::Even;
    if (out.sw_value) out.correction = QClass{el.e22, el.q_top};
  }
  out.formula = out.correction.is_zero() ? "h(alpha) = h^S(alpha)"
                                         : "h(alpha) = h^S(alpha) + " + render(out.correction);
  return out;
}

}  // namespace dblpt
