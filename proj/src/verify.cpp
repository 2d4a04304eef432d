#include "vkmap/verify.hpp"

#include "vkmap/io.hpp"

namespace vkmap {

const char* theorem_name(TheoremId t) {
  switch (t) {
    case TheoremId::kMain: return "main";
    case TheoremId::kC7: return "c7";
    case TheoremId::kC4T4: return "c4t4";
  }
  return "?";
}

const char* verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kPass: return "pass";
    case VerdictStatus::kVacuousThin: return "vacuous_thin";
    case VerdictStatus::kVacuousNoCandidates: return "vacuous_no_candidates";
    case VerdictStatus::kCounterexample: return "counterexample";
  }
  return "?";
}

namespace {

bool has_proper_boundary_region(const CombinatorialMap& m) {
  for (RegionId r = 0; r < m.region_count(); ++r)
    if (m.region_profile(r).is_proper_boundary) return true;
  return false;
}

void require_class(bool ok, const char* cls) {
  if (!ok) throw Error(Errc::kNotInClass, std::string("map is not ") + cls);
}

// The theorems hold for thinness as closed intersection: a region meeting a
// side only at a vertex (for instance at the junction of the two sides)
// still counts as touching it. Under the edge-only reading, a region
// hanging off one side of a two-region ladder already produces spurious
// counterexamples.
ThinOptions theorem_thinness() {
  ThinOptions opts;
  opts.vertex_contact_counts = true;
  return opts;
}

}  // namespace

Verdict verify_main_theorem(const CombinatorialMap& m, const BoundaryDecomposition& d) {
  require_class(classify_map(m).is_proper_v6, "a proper V(6) map");
  Verdict v;
  if (is_thin(m, d, theorem_thinness())) {
    v.status = VerdictStatus::kVacuousThin;
    return v;
  }
  v.cut_corners = find_cut_corners(m, d, Side::kMu);
  auto sigma_side = find_cut_corners(m, d, Side::kSigma);
  v.cut_corners.insert(v.cut_corners.end(), sigma_side.begin(), sigma_side.end());
  if (!v.cut_corners.empty())
    v.status = VerdictStatus::kPass;
  else if (!has_proper_boundary_region(m))
    v.status = VerdictStatus::kVacuousNoCandidates;
  else
    v.status = VerdictStatus::kCounterexample;
  return v;
}

Verdict verify_c7_corollary(const CombinatorialMap& m, const BoundaryDecomposition& d) {
  require_class(classify_map(m).is_proper_c7, "a proper C(7) map");
  Verdict v;
  if (is_thin(m, d, theorem_thinness())) {
    v.status = VerdictStatus::kVacuousThin;
    return v;
  }
  v.witnesses = c7_witnesses(m, d);
  if (!v.witnesses.empty())
    v.status = VerdictStatus::kPass;
  else if (!has_proper_boundary_region(m))
    v.status = VerdictStatus::kVacuousNoCandidates;
  else
    v.status = VerdictStatus::kCounterexample;
  return v;
}

Verdict verify_c4t4_corollary(const CombinatorialMap& m, const BoundaryDecomposition& d) {
  require_class(classify_map(m).is_proper_c4t4, "a proper C(4)&T(4) map");
  Verdict v;
  if (is_thin(m, d, theorem_thinness())) {
    v.status = VerdictStatus::kVacuousThin;
    return v;
  }
  v.thick_configs = find_thick_configurations(m, d.mu);
  auto on_sigma = find_thick_configurations(m, d.sigma);
  v.thick_configs.insert(v.thick_configs.end(), on_sigma.begin(), on_sigma.end());
  v.status = v.thick_configs.empty() ? VerdictStatus::kCounterexample : VerdictStatus::kPass;
  return v;
}

CampaignReport run_campaign(const EnumConfig& cfg, TheoremId theorem) {
  cfg.validate();
  EnumConfig effective = cfg;
  switch (theorem) {
    case TheoremId::kMain: effective.filter = ClassFilter::kProperV6; break;
    case TheoremId::kC7: effective.filter = ClassFilter::kProperC7; break;
    case TheoremId::kC4T4: effective.filter = ClassFilter::kProperC4T4; break;
  }

  CampaignReport report;
  report.theorem = theorem;

  EnumStats stats = enumerate_maps(effective, [&](const CombinatorialMap& m) {
    for (const BoundaryDecomposition& d : enumerate_decompositions(m)) {
      ++report.decompositions_tested;
      Verdict v;
      switch (theorem) {
        case TheoremId::kMain: v = verify_main_theorem(m, d); break;
        case TheoremId::kC7: v = verify_c7_corollary(m, d); break;
        case TheoremId::kC4T4: v = verify_c4t4_corollary(m, d); break;
      }
      switch (v.status) {
        case VerdictStatus::kPass: ++report.pass_count; break;
        case VerdictStatus::kVacuousThin:
          ++report.vacuous_thin_count;
          ++report.vacuous_count;
          break;
        case VerdictStatus::kVacuousNoCandidates:
          ++report.vacuous_no_candidate_count;
          ++report.vacuous_count;
          break;
        case VerdictStatus::kCounterexample: {
          Counterexample cex;
          cex.map_text = serialize_map(m);
          cex.base = d.base;
          cex.xi = static_cast<int>(d.xi.size());
          cex.mu = static_cast<int>(d.mu.size());
          cex.tau = static_cast<int>(d.tau.size());
          report.counterexamples.push_back(std::move(cex));
          break;
        }
      }
    }
  });
  report.maps_generated = stats.generated;
  report.maps_in_class = stats.emitted;
  return report;
}

}  // namespace vkmap
