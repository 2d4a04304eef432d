#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vkmap/errors.hpp"

namespace vkmap {

/// Darts are the oriented edges of a map. Ids are dense positive integers;
/// an unoriented edge owns exactly two darts that are swapped by the
/// reversal involution.
using DartId = int;

/// Vertices, edges and regions are identified by dense 0-based indices,
/// ordered by the minimal dart of the corresponding orbit.
using VertexId = int;
using EdgeId = int;
using RegionId = int;

struct VertexProfile {
  int valence = 0;
  bool is_inner = false;
};

struct RegionProfileOptions {
  /// Properness removes a region's interior plus its boundary edges. The
  /// default removes only the outer-boundary edges; the alternative reading
  /// removes every edge of the region's boundary.
  bool remove_all_boundary_edges = false;
};

struct RegionProfile {
  int edge_count = 0;                        // |boundary cycle|, with multiplicity
  std::vector<RegionId> neighbors;           // regions sharing >= 1 edge, sorted
  std::vector<std::vector<DartId>> outer_arcs;  // maximal outer runs of the boundary cycle
  int outer_edge_count = 0;                  // outer instances, with multiplicity
  std::vector<DartId> inner_boundary;        // boundary darts on inner edges
  bool is_inner = false;
  bool is_proper_boundary = false;
  bool has_repeated_edge = false;            // boundary cycle traverses some edge twice
};

/// A finite planar connected simply connected 2-complex, encoded as a
/// rotation system: a fixed-point-free involution pairing the two darts of
/// each edge, and a permutation whose orbits list the darts leaving each
/// vertex in counterclockwise order. Bounded face orbits are the regions;
/// the orbit of the distinguished outer dart is the complement of the map.
///
/// Construction validates connectivity and the Euler relation
/// V - E + R = 1 over the bounded regions, which together characterize the
/// class. Built maps are immutable and all queries are pure, so values can
/// be shared freely across threads.
class CombinatorialMap {
 public:
  /// Builds and validates a map.
  ///
  /// `reversal_pairs` must cover every dart exactly once; `rotation_cycles`
  /// must partition the darts. Throws Error with kNotInvolution,
  /// kNotConnected, kNotPlanar or kBadOuterDart on invalid input.
  static CombinatorialMap build(int dart_count,
                                const std::vector<std::pair<DartId, DartId>>& reversal_pairs,
                                const std::vector<std::vector<DartId>>& rotation_cycles,
                                DartId outer_dart);

  int dart_count() const { return dart_count_; }
  DartId reversal(DartId d) const { return rev_[check_dart(d)]; }
  DartId rotation_next(DartId d) const { return rot_[check_dart(d)]; }
  DartId rotation_prev(DartId d) const { return rot_inv_[check_dart(d)]; }

  /// Face successor: the next dart along the face lying on d's side.
  DartId face_next(DartId d) const { return rot_[rev_[check_dart(d)]]; }

  int vertex_count() const { return static_cast<int>(vertex_cycles_.size()); }
  int edge_count() const { return dart_count_ / 2; }
  int region_count() const { return static_cast<int>(region_faces_.size()); }

  VertexId vertex_of(DartId d) const { return vertex_of_[check_dart(d)]; }
  EdgeId edge_of(DartId d) const { return edge_of_[check_dart(d)]; }

  /// Initial and terminal vertices of the oriented edge d.
  VertexId initial_vertex(DartId d) const { return vertex_of(d); }
  VertexId terminal_vertex(DartId d) const { return vertex_of(reversal(d)); }

  /// Region on d's side, or nullopt when d lies on the outer face.
  std::optional<RegionId> region_of(DartId d) const;
  bool on_outer_face(DartId d) const { return face_of_[check_dart(d)] == outer_face_; }

  std::span<const DartId> vertex_darts(VertexId v) const;
  int vertex_valence(VertexId v) const;
  bool vertex_is_inner(VertexId v) const;
  VertexProfile vertex_profile(VertexId v) const;

  /// Boundary cycle of region r, starting at its minimal dart.
  std::span<const DartId> region_boundary(RegionId r) const;

  /// Outer-face cycle starting at the stored outer dart. Edges incident to
  /// the outer face on both sides appear twice.
  std::span<const DartId> outer_cycle() const;
  DartId outer_dart() const { return outer_dart_; }
  int boundary_length() const { return static_cast<int>(outer_cycle().size()); }

  /// Outer-face cycle re-rooted at `basepoint`; throws
  /// kBasepointNotOnBoundary when the dart is not on the outer face.
  std::vector<DartId> boundary_cycle(DartId basepoint) const;

  bool edge_on_boundary(EdgeId e) const { return edge_on_boundary_[e]; }

  const RegionProfile& region_profile(RegionId r) const;
  RegionProfile region_profile(RegionId r, const RegionProfileOptions& opts) const;

  /// True when every rotation orbit already starts at the dart that the
  /// canonical text format would use (reversal pairs (2k-1, 2k)).
  bool has_paired_reversal() const;

  const std::vector<std::vector<DartId>>& vertex_cycles() const { return vertex_cycles_; }

 private:
  CombinatorialMap() = default;

  DartId check_dart(DartId d) const;
  RegionProfile compute_region_profile(RegionId r, const RegionProfileOptions& opts) const;

  int dart_count_ = 0;
  std::vector<DartId> rev_;      // 1-based tables; index 0 unused
  std::vector<DartId> rot_;
  std::vector<DartId> rot_inv_;
  std::vector<VertexId> vertex_of_;
  std::vector<EdgeId> edge_of_;
  std::vector<int> face_of_;
  int outer_face_ = -1;
  DartId outer_dart_ = 0;

  std::vector<std::vector<DartId>> vertex_cycles_;
  std::vector<std::vector<DartId>> face_cycles_;   // all faces, by minimal dart
  std::vector<int> region_faces_;                  // face index of each region
  std::vector<RegionId> region_of_face_;           // face index -> region id or -1
  std::vector<bool> edge_on_boundary_;
  std::vector<RegionProfile> profiles_;            // default-option profiles
};

/// Splits a boundary cycle as xi mu tau^-1 sigma^-1. The four components
/// are stored as paths (tau and sigma run from the basepoint side), with
/// |xi| <= 1 and |tau| <= 1; any component may be empty.
struct BoundaryDecomposition {
  DartId base = 0;  // first dart of the cycle at the basepoint
  std::vector<DartId> xi;
  std::vector<DartId> mu;
  std::vector<DartId> tau;
  std::vector<DartId> sigma;
};

/// Reverses a path: darts are reversed and listed in the opposite order.
std::vector<DartId> inverse_path(const CombinatorialMap& m, std::span<const DartId> path);

/// Builds the decomposition with |xi| = xi_len and |tau| = tau_len whose
/// cycle starts at `base`; sigma takes the remaining darts.
BoundaryDecomposition make_decomposition(const CombinatorialMap& m, DartId base, int xi_len,
                                         int mu_len, int tau_len);

bool is_valid_decomposition(const CombinatorialMap& m, const BoundaryDecomposition& d);
void require_valid_decomposition(const CombinatorialMap& m, const BoundaryDecomposition& d);

/// The two sides of the decomposition: xi+mu and sigma+tau, as paths.
std::vector<DartId> mu_side_path(const BoundaryDecomposition& d);
std::vector<DartId> sigma_side_path(const BoundaryDecomposition& d);

}  // namespace vkmap
