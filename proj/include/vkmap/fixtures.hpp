#pragma once

#include "vkmap/map.hpp"

namespace vkmap::fixtures {

/// One 4-gon: 4 vertices, 4 edges, boundary length 4.
CombinatorialMap sq1();

/// Two 4-gons sharing one edge; boundary length 6.
CombinatorialMap lad2();

/// Three 4-gons in a row; boundary length 8.
CombinatorialMap lad3();

/// Four 4-gons in a 2x2 arrangement; one inner vertex of valence 4,
/// boundary length 8.
CombinatorialMap grid4();

/// A central triangle whose three edges are each shared with one of three
/// mutually-neighboring outer regions; the central region is inner with 3
/// neighbors.
CombinatorialMap tri_wheel();

}  // namespace vkmap::fixtures
