#pragma once

#include <optional>
#include <vector>

#include "vkmap/map.hpp"

namespace vkmap {

struct Classification {
  bool is_v6 = false;
  bool is_proper_v6 = false;
  bool is_proper_c7 = false;
  bool is_proper_c4t4 = false;
};

/// - V(6): every inner region has >= 4 neighbors, and >= 6 when its boundary
///   contains a vertex of valence three.
/// - proper V(6): V(6), no inner vertex of valence two, and every boundary
///   region has >= 4 boundary edges (>= 6 when its boundary contains an
///   inner vertex of valence three).
/// - proper C(7): every region has >= 7 edges and no inner vertex of
///   valence two.
/// - proper C(4)&T(4): no inner vertex of valence < 4 and every region has
///   >= 4 boundary edges.
Classification classify_map(const CombinatorialMap& m);

struct ThinOptions {
  /// The default requires each region to share an edge with both sides.
  /// The alternative counts vertex contact (including the endpoint vertex
  /// of a zero-length side).
  bool vertex_contact_counts = false;
};

/// (xi mu, sigma tau)-thinness: every region has at most two neighbors and
/// meets both sides of the decomposition.
bool is_thin(const CombinatorialMap& m, const BoundaryDecomposition& d,
             const ThinOptions& opts = {});

enum class Side { kMu, kSigma };
enum class CutCornerKind { kT1, kT2, kT3, kT4 };

const char* side_name(Side s);
const char* cut_corner_kind_name(CutCornerKind k);

struct CutCornerReport {
  RegionId region = 0;
  Side side = Side::kMu;
  CutCornerKind kind = CutCornerKind::kT1;
  int ell = 0;           // 1-based index of the region's first outer edge in the host path
  int outer_edges = 0;   // r
  int inner_edges = 0;   // s
  std::optional<RegionId> aux_region;      // the adjacent region E of T3/T4
  std::optional<VertexId> corner_vertex;   // i(mu_D); defined when ell > 1
};

/// Cut corners along an arbitrary boundary path. A proper boundary region
/// counts when its entire outer boundary is a contiguous subpath of the
/// host (in either orientation); each satisfied kind is reported.
std::vector<CutCornerReport> find_cut_corners_on_path(const CombinatorialMap& m,
                                                      std::span<const DartId> host, Side tag);

/// Cut corners hosted by the mu or sigma component of a decomposition.
std::vector<CutCornerReport> find_cut_corners(const CombinatorialMap& m,
                                              const BoundaryDecomposition& d, Side side);

enum class ThickKind { kSingleRegion, kTwoRegion };

struct ThickConfigReport {
  ThickKind kind = ThickKind::kSingleRegion;
  RegionId region = 0;                  // D (single) or D2 (two-region)
  std::optional<RegionId> companion;    // D1 of the two-region configuration
  std::vector<DartId> mu;               // subpath of the host path
  std::vector<DartId> sigma;            // rest of the region's boundary, as a path
  std::optional<DartId> leading_edge;   // the outer edge e of D1
};

/// Thick configurations along a boundary path: a region whose overlap with
/// the path is longer than the rest of its boundary, or a two-region step
/// configuration. Throws kPathNotOnBoundary when the host is not a
/// boundary path.
std::vector<ThickConfigReport> find_thick_configurations(const CombinatorialMap& m,
                                                         std::span<const DartId> host);

/// Proper boundary regions with at most three neighbors whose outer
/// boundary is a contiguous subpath of mu or of sigma.
std::vector<RegionId> c7_witnesses(const CombinatorialMap& m, const BoundaryDecomposition& d);

}  // namespace vkmap
