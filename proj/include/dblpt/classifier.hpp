#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dblpt/dpoint.hpp"
#include "dblpt/manifolds.hpp"
#include "dblpt/qmo.hpp"
#include "dblpt/steenrod.hpp"

namespace dblpt {

/// A theorem the classifier imports rather than computes. Facts are data:
/// every report lists the ids of the facts it relied on.
struct ExistenceFact {
  std::string id;
  std::string condition;
  std::string statement;
  std::string citation;
};

const std::vector<ExistenceFact>& existence_facts();
/// Throws std::out_of_range for an unknown id.
const ExistenceFact& existence_fact(const std::string& id);

/// The height-2 classes a spherical class of H_{2k+2}QMO(k) can project to.
struct CandidateModule {
  int k = 0;
  /// Basis of the primitives of H_{2k+2}QMO(k).
  std::vector<QClass> primitives;
  /// Basis of h2_project(primitive_submodule(k, 2k+2)).
  std::vector<D2Class> primitive_projection;
  /// Sub-basis annihilated by Sq^1_* and Sq^2_*.
  std::vector<D2Class> basis;
  /// Primitive elements of H_{2k+2}QMO(k) inside span(basis).
  std::vector<D2Class> primitive_candidates;
  /// For k = 3 mod 4: the primitive candidate ruled out by the vanishing of
  /// Sq^{k+3} on sigma^2 w_k. Recorded, not removed from `basis`.
  std::optional<D2Class> lemma55_excluded;
  std::optional<Lemma55Report> lemma55;
  /// Dimension after additionally imposing Sq^3_* and Sq^4_*; reported only.
  std::size_t higher_kernel_dimension = 0;
  /// False when that check needs Sq^i_* Q^s with i > s.
  bool higher_squares_evaluated = true;
};

CandidateModule candidate_submodule(int k);

enum class Verdict {
  ForcedEven,         // every immersion has a boundary double point surface
  BothAchievable,     // every M^{k+2} has immersions of either parity
  DependsOnManifold,  // parity equals wbar_2 wbar_k[M]
};

const char* to_string(Verdict v);

struct ClassificationReport {
  int k = 0;
  int residue = 0;   // k mod 4
  int alpha_k2 = 0;  // binary digit count of k + 2
  std::vector<D2Class> candidate_basis;
  std::optional<D2Class> lemma55_excluded;
  std::vector<MOClass> xi_images;
  /// Some candidate has an odd xi-image: the obstruction computation alone
  /// does not rule out odd surfaces.
  bool constraints_allow_odd = false;
  /// The height-2 part of the Hurewicz image is fixed by the bordism class
  /// of M (no primitive candidates survive).
  bool determined_by_bordism = false;
  bool odd_achievable = false;
  Verdict forced_parity = Verdict::ForcedEven;
  std::optional<std::string> criterion;
  std::vector<std::string> existence_facts_used;
  /// Derivation log, one line per step.
  std::vector<std::string> derivation;
  bool higher_squares_shrink = false;
  /// odd_achievable == (k = 1 mod 4 or k + 1 a power of 2).
  bool matches_closed_form = false;
};

/// Throws std::invalid_argument for k < 1.
ClassificationReport classify(int k);

/// h(alpha) = h^S(alpha) + correction for an immersion of M^{k+2} in
/// R^{2k+2}, with the correction resolved through the normal
/// Stiefel-Whitney number that selects it.
struct HurewiczProfile {
  int k = 0;
  std::string manifold;
  std::string sw_label;
  bool sw_value = false;
  /// Height >= 2 correction. For k = 1 mod 4 this is the odd-parity option.
  QClass correction;
  /// Empty when the parity depends on the immersion rather than on M.
  std::optional<Parity> parity;
  std::string formula;
  std::vector<std::string> annotations;
};

/// Throws std::invalid_argument if dim M != k + 2.
HurewiczProfile hurewicz_profile(int k, const ManifoldSpec& manifold);

/// `w̄₂w̄₇[M]` (UTF-8) for the given indices.
std::string wbar_label(const std::vector<int>& indices);

}  // namespace dblpt
