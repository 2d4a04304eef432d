#pragma once

#include <string>
#include <vector>

#include "vkmap/conditions.hpp"
#include "vkmap/enumerate.hpp"
#include "vkmap/map.hpp"

namespace vkmap {

enum class TheoremId { kMain, kC7, kC4T4 };
const char* theorem_name(TheoremId t);

enum class VerdictStatus {
  kPass,
  kVacuousThin,          // the decomposition is thin, nothing to check
  kVacuousNoCandidates,  // no proper boundary region exists, nothing can witness
  kCounterexample,
};
const char* verdict_status_name(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::kPass;
  std::vector<CutCornerReport> cut_corners;      // main theorem witnesses
  std::vector<RegionId> witnesses;               // C(7) witnesses
  std::vector<ThickConfigReport> thick_configs;  // C(4)&T(4) witnesses
};

/// On a proper V(6) map: a non-thin decomposition must have a cut corner on
/// mu or on sigma. Throws kNotInClass when the map is not proper V(6).
///
/// All three verifiers evaluate thinness as closed intersection (vertex
/// contact counts); the edge-only reading misclassifies junction-touching
/// ladders as non-thin and would contradict the theorems.
Verdict verify_main_theorem(const CombinatorialMap& m, const BoundaryDecomposition& d);

/// On a proper C(7) map: a non-thin decomposition must have a proper
/// boundary region with at most three neighbors whose outer boundary lies
/// in mu or sigma.
Verdict verify_c7_corollary(const CombinatorialMap& m, const BoundaryDecomposition& d);

/// On a proper C(4)&T(4) map: a non-thin decomposition must have a thick
/// configuration along mu or sigma.
Verdict verify_c4t4_corollary(const CombinatorialMap& m, const BoundaryDecomposition& d);

/// A reproduction bundle: the canonical map document and the decomposition
/// parameters (basepoint dart plus component lengths).
struct Counterexample {
  std::string map_text;
  DartId base = 0;
  int xi = 0;
  int mu = 0;
  int tau = 0;
};

struct CampaignReport {
  TheoremId theorem = TheoremId::kMain;
  long maps_generated = 0;
  long maps_in_class = 0;
  long decompositions_tested = 0;
  long pass_count = 0;
  long vacuous_count = 0;
  long vacuous_thin_count = 0;
  long vacuous_no_candidate_count = 0;
  std::vector<Counterexample> counterexamples;
};

/// Exhausts enumerate_maps x enumerate_decompositions under the theorem's
/// class and aggregates verdicts. The config's class filter is overridden
/// by the theorem's class. Deterministic for a fixed config.
CampaignReport run_campaign(const EnumConfig& cfg, TheoremId theorem);

}  // namespace vkmap
