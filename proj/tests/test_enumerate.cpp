#include <doctest.h>

#include <algorithm>
#include <set>

#include "vkmap/enumerate.hpp"
#include "vkmap/fixtures.hpp"

using namespace vkmap;

namespace {

EnumConfig cfg(int max_regions, int min_edges, int max_edges, ClassFilter filter = ClassFilter::kNone,
               bool dedup = true, int max_boundary = 16) {
  EnumConfig c;
  c.max_regions = max_regions;
  c.min_region_edges = min_edges;
  c.max_region_edges = max_edges;
  c.max_boundary_length = max_boundary;
  c.filter = filter;
  c.dedup = dedup;
  return c;
}

long count_with_regions(const std::vector<CombinatorialMap>& maps, int regions) {
  return std::count_if(maps.begin(), maps.end(),
                       [&](const CombinatorialMap& m) { return m.region_count() == regions; });
}

}  // namespace

TEST_CASE("polygon maps") {
  for (int k : {1, 2, 3, 4, 7}) {
    auto m = polygon_map(k);
    CHECK(m.region_count() == 1);
    CHECK(m.edge_count() == k);
    CHECK(m.boundary_length() == k);
    CHECK(m.vertex_count() - m.edge_count() + m.region_count() == 1);
  }
}

TEST_CASE("gluing produces the expected fixtures") {
  auto lad2 = glue_polygon(polygon_map(4), 0, 1, 4);
  CHECK(lad2.region_count() == 2);
  CHECK(lad2.boundary_length() == 6);
  CHECK(canonical_form(lad2) == canonical_form(fixtures::lad2()));

  SUBCASE("gluing along the whole boundary caps the map") {
    auto capped = glue_polygon(polygon_map(3), 0, 3, 4);
    CHECK(capped.region_count() == 2);
    CHECK(capped.boundary_length() == 1);
  }

  SUBCASE("invalid gluing arguments") {
    CHECK_THROWS_AS(glue_polygon(polygon_map(4), 0, 4, 4), Error);  // path not shorter than k
    CHECK_THROWS_AS(glue_polygon(polygon_map(4), 9, 1, 4), Error);
  }
}

TEST_CASE("single square enumeration") {
  auto maps = enumerate_maps(cfg(1, 4, 4));
  REQUIRE(maps.size() == 1);
  CHECK(canonical_form(maps[0]) == canonical_form(fixtures::sq1()));
}

TEST_CASE("two-square gluings collapse to three classes") {
  auto maps = enumerate_maps(cfg(2, 4, 4));
  CHECK(maps.size() == 4);  // the lone square plus one class per glue length
  CHECK(count_with_regions(maps, 2) == 3);

  SUBCASE("the proper V(6) filter keeps the edge-sharing ladder only") {
    auto filtered = enumerate_maps(cfg(2, 4, 4, ClassFilter::kProperV6));
    REQUIRE(filtered.size() == 2);  // SQ1 and LAD2
    CHECK(count_with_regions(filtered, 2) == 1);
    auto ladder = std::find_if(filtered.begin(), filtered.end(),
                               [](const CombinatorialMap& m) { return m.region_count() == 2; });
    CHECK(canonical_form(*ladder) == canonical_form(fixtures::lad2()));
  }

  SUBCASE("without dedup every raw gluing appears") {
    auto raw = enumerate_maps(cfg(2, 4, 4, ClassFilter::kNone, /*dedup=*/false));
    CHECK(raw.size() == 1 + 12);  // 4 positions x glue lengths 1..3
    std::set<std::string> forms;
    for (const auto& m : raw) forms.insert(canonical_form(m));
    CHECK(forms.size() == 4);  // dedup never invents or loses classes
  }
}

TEST_CASE("the generator reaches the handmade fixtures") {
  auto grid_family = enumerate_maps(cfg(4, 4, 4, ClassFilter::kNone, true, 8));
  std::set<std::string> forms;
  for (const auto& m : grid_family) forms.insert(canonical_form(m));
  CHECK(forms.count(canonical_form(fixtures::grid4())));
  CHECK(forms.count(canonical_form(fixtures::lad3())));

  auto wheel_family = enumerate_maps(cfg(4, 3, 4, ClassFilter::kNone, true, 8));
  std::set<std::string> wheel_forms;
  for (const auto& m : wheel_family) wheel_forms.insert(canonical_form(m));
  CHECK(wheel_forms.count(canonical_form(fixtures::tri_wheel())));
}

TEST_CASE("canonical form identifies relabellings and reflections") {
  // LAD2 with its rotation cycles reversed is the mirror image.
  // Reversing the rotation cycles reverses the outer orbit too, so the
  // outer dart moves to the reversal of the original one.
  auto mirrored = CombinatorialMap::build(14,
                                          {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}, {11, 12},
                                           {13, 14}},
                                          {{8, 1}, {2, 3, 9}, {4, 5, 14}, {7, 6}, {10, 11},
                                           {12, 13}},
                                          /*outer_dart=*/2);
  CHECK(canonical_form(mirrored) == canonical_form(fixtures::lad2()));

  CHECK(canonical_form(fixtures::lad2()) != canonical_form(fixtures::lad3()));
  CHECK(canonical_form(polygon_map(4)) != canonical_form(polygon_map(5)));
}

TEST_CASE("every emitted map is in range and valid") {
  for (const auto& m : enumerate_maps(cfg(3, 4, 5, ClassFilter::kNone, true, 12))) {
    CHECK(m.vertex_count() - m.edge_count() + m.region_count() == 1);
    CHECK(m.boundary_length() <= 12);
    CHECK(m.region_count() <= 3);
    for (RegionId r = 0; r < m.region_count(); ++r) {
      CHECK(m.region_profile(r).edge_count >= 4);
      CHECK(m.region_profile(r).edge_count <= 5);
    }
  }
}

TEST_CASE("config validation") {
  CHECK_THROWS_WITH_AS(enumerate_maps(cfg(0, 4, 4)), doctest::Contains("ConfigInvalid"), Error);
  CHECK_THROWS_AS(enumerate_maps(cfg(1, 4, 17)), Error);
  CHECK_THROWS_AS(enumerate_maps(cfg(1, 5, 4)), Error);
}

TEST_CASE("decomposition enumeration") {
  SUBCASE("square count matches the closed-form sum") {
    auto decomps = enumerate_decompositions(fixtures::sq1());
    CHECK(decomps.size() == 64);
    for (const auto& d : decomps) CHECK(is_valid_decomposition(fixtures::sq1(), d));
  }

  SUBCASE("boundary length one admits empty-side splits") {
    auto loop = polygon_map(1);
    auto decomps = enumerate_decompositions(loop);
    CHECK(decomps.size() == 4);
    bool mu_empty = false, sigma_empty = false;
    for (const auto& d : decomps) {
      if (d.mu.empty()) mu_empty = true;
      if (d.sigma.empty()) sigma_empty = true;
    }
    CHECK(mu_empty);
    CHECK(sigma_empty);
  }

  SUBCASE("general count formula") {
    for (const auto& m : {fixtures::lad2(), fixtures::grid4()}) {
      long n = m.boundary_length();
      long expected = 0;
      for (int x = 0; x <= 1; ++x)
        for (int t = 0; t <= 1; ++t)
          if (x + t <= n) expected += n - x - t + 1;
      expected *= n;  // one bundle per basepoint
      CHECK(static_cast<long>(enumerate_decompositions(m).size()) == expected);
    }
  }
}
