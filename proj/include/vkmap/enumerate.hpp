#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vkmap/conditions.hpp"
#include "vkmap/map.hpp"

namespace vkmap {

enum class ClassFilter { kNone, kProperV6, kProperC7, kProperC4T4 };

const char* class_filter_name(ClassFilter f);

struct EnumConfig {
  int max_regions = 1;
  int min_region_edges = 4;
  int max_region_edges = 4;
  int max_boundary_length = 16;
  ClassFilter filter = ClassFilter::kNone;
  bool dedup = true;

  void validate() const;  // throws kConfigInvalid
};

/// Single k-gon.
CombinatorialMap polygon_map(int k);

/// Glues a fresh k-gon onto the map along the contiguous boundary path of
/// length `glue_len` starting at position `pos` of the outer cycle
/// (0-based, from the stored outer dart). Requires 1 <= glue_len <=
/// min(k - 1, boundary length).
CombinatorialMap glue_polygon(const CombinatorialMap& m, int pos, int glue_len, int k);

/// Canonical key of the map up to isomorphism preserving the outer face,
/// with reflections identified.
std::string canonical_form(const CombinatorialMap& m);

struct EnumStats {
  long generated = 0;  // maps emitted before the class filter
  long emitted = 0;    // maps handed to the callback
};

/// Generates maps by polygon shelling: starting from a single polygon and
/// repeatedly gluing a fresh polygon along a contiguous non-empty boundary
/// path shorter than its edge count. With dedup on, one representative per
/// isomorphism class is emitted; the class filter applies at emission.
/// Deterministic for a fixed config.
EnumStats enumerate_maps(const EnumConfig& cfg,
                         const std::function<void(const CombinatorialMap&)>& emit);

std::vector<CombinatorialMap> enumerate_maps(const EnumConfig& cfg);

/// All boundary decompositions over all basepoints with |xi|, |tau| <= 1.
std::vector<BoundaryDecomposition> enumerate_decompositions(const CombinatorialMap& m);

}  // namespace vkmap
