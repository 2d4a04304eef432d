#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vkmap/conditions.hpp"
#include "vkmap/map.hpp"
#include "vkmap/presentation.hpp"

namespace vkmap {

struct ParsedMap {
  CombinatorialMap map;
  std::optional<DiagramLabelling> labelling;
  std::vector<char> label_generators;  // letters seen in label lines, sorted
};

/// kmap documents:
///   kmap 1
///   darts N            darts are 1..N, reversal pairs (2i-1, 2i)
///   vertex d1 d2 ...   one counterclockwise rotation cycle per line
///   outer d
///   label d x          optional; x labels d's reading direction
ParsedMap parse_map(std::string_view text);

/// Canonical serialization: vertex lines sorted by minimal dart, each cycle
/// rotated to start at it; label lines for odd darts in order. Requires the
/// paired reversal convention.
std::string serialize_map(const CombinatorialMap& m, const DiagramLabelling* labelling = nullptr,
                          const std::vector<char>* label_generators = nullptr);

/// pres documents:
///   pres 1
///   gens a b ...
///   rel word           uppercase letters are inverses
Presentation parse_presentation(std::string_view text, bool auto_close = false);
std::string serialize_presentation(const Presentation& p);

/// Deterministic DOT rendering: vertex nodes, labelled edges, one cluster
/// per region. Regions named in the reports are highlighted.
std::string export_dot(const CombinatorialMap& m,
                       const std::vector<CutCornerReport>* cut_corners = nullptr,
                       const std::vector<ThickConfigReport>* thick_configs = nullptr,
                       const DiagramLabelling* labelling = nullptr,
                       const std::vector<char>* label_generators = nullptr);

}  // namespace vkmap
