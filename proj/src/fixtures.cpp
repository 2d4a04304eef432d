#include "vkmap/fixtures.hpp"

namespace vkmap::fixtures {

namespace {

std::vector<std::pair<DartId, DartId>> paired(int dart_count) {
  std::vector<std::pair<DartId, DartId>> pairs;
  for (DartId d = 1; d <= dart_count; d += 2) pairs.emplace_back(d, d + 1);
  return pairs;
}

}  // namespace

CombinatorialMap sq1() {
  // Edges 1..4 around the square; dart 2k-1 runs forward.
  return CombinatorialMap::build(8, paired(8),
                                 {{1, 8}, {3, 2}, {5, 4}, {7, 6}},
                                 /*outer_dart=*/2);
}

CombinatorialMap lad2() {
  // Bottom v1 v2 v5, top v4 v3 v6; edge 2 (darts 3,4) is shared.
  return CombinatorialMap::build(14, paired(14),
                                 {{1, 8},           // v1
                                  {9, 3, 2},        // v2
                                  {14, 5, 4},       // v3
                                  {6, 7},           // v4
                                  {11, 10},         // v5
                                  {13, 12}},        // v6
                                 /*outer_dart=*/1);
}

CombinatorialMap lad3() {
  // Bottom v1..v4, top v5..v8; verticals are edges 4..7.
  return CombinatorialMap::build(20, paired(20),
                                 {{1, 7},           // v1
                                  {3, 9, 2},        // v2
                                  {5, 11, 4},       // v3
                                  {13, 6},          // v4
                                  {15, 8},          // v5
                                  {17, 16, 10},     // v6
                                  {19, 18, 12},     // v7
                                  {20, 14}},        // v8
                                 /*outer_dart=*/1);
}

CombinatorialMap grid4() {
  // Vertices v(i,j) on a 3x3 lattice; horizontal edges 1..6, vertical 7..12.
  return CombinatorialMap::build(24, paired(24),
                                 {{1, 13},          // (0,0)
                                  {3, 15, 2},       // (1,0)
                                  {17, 4},          // (2,0)
                                  {5, 19, 14},      // (0,1)
                                  {7, 21, 6, 16},   // (1,1) inner, valence 4
                                  {23, 8, 18},      // (2,1)
                                  {9, 20},          // (0,2)
                                  {11, 10, 22},     // (1,2)
                                  {12, 24}},        // (2,2)
                                 /*outer_dart=*/1);
}

CombinatorialMap tri_wheel() {
  // Triangle v1 v2 v3 (edges 1..3), spokes to u1 u2 u3 (edges 4..6),
  // outer arcs u1-u2, u2-u3, u3-u1 (edges 7..9).
  return CombinatorialMap::build(18, paired(18),
                                 {{1, 6, 7},        // v1
                                  {3, 2, 9},        // v2
                                  {11, 5, 4},       // v3
                                  {8, 18, 13},      // u1
                                  {15, 10, 14},     // u2
                                  {17, 12, 16}},    // u3
                                 /*outer_dart=*/13);
}

}  // namespace vkmap::fixtures
