#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "test_util.hpp"
#include "vkmap/enumerate.hpp"
#include "vkmap/fixtures.hpp"
#include "vkmap/presentation.hpp"

using namespace vkmap;
using testutil::for_each_labelling;

namespace {

const std::vector<char> kAB{'a', 'b'};
Word w(const std::string& text) { return parse_word(text, kAB); }

Presentation commutator() { return make_presentation(kAB, {w("abAB")}, /*auto_close=*/true); }

Presentation a4() {
  return make_presentation({'a'}, {parse_word("aaaa", {'a'})}, /*auto_close=*/true);
}

Presentation aab_family() {
  return make_presentation(kAB, {w("aab"), w("aaB")}, /*auto_close=*/true);
}

}  // namespace

TEST_CASE("symmetric closure") {
  auto closure = symmetric_closure({w("abAB")});
  CHECK(closure.size() == 8);  // 4 shifts of the commutator, 4 of its inverse
  std::set<Word> set(closure.begin(), closure.end());
  CHECK(set.count(w("abAB")));
  CHECK(set.count(w("baBA")));

  auto single = symmetric_closure({parse_word("a", {'a'})});
  CHECK(single.size() == 2);  // a and A

  CHECK(symmetric_closure({}).empty());

  CHECK_THROWS_WITH_AS(symmetric_closure({w("abA")}), doctest::Contains("NotCyclicallyReduced"),
                       Error);

  SUBCASE("idempotent") {
    CHECK(symmetric_closure(closure) == closure);
    CHECK(is_symmetrically_closed(closure));
    CHECK_FALSE(is_symmetrically_closed({w("abAB")}));
  }
}

TEST_CASE("pieces") {
  auto pieces_comm = pieces(commutator());
  std::set<Word> expected{w("a"), w("b"), w("A"), w("B")};
  CHECK(std::set<Word>(pieces_comm.begin(), pieces_comm.end()) == expected);
  CHECK(pieces_comm.size() == 4);

  CHECK(pieces(a4()).empty());  // each prefix occurs in only one relator

  CHECK(pieces(make_presentation(kAB, {}, false)).empty());

  CHECK_THROWS_WITH_AS(pieces(Presentation{kAB, {w("abAB")}}),
                       doctest::Contains("NotSymmetricallyClosed"), Error);

  SUBCASE("prefix closure") {
    for (const Presentation& p : {commutator(), aab_family()}) {
      auto ps = pieces(p);
      std::set<Word> set(ps.begin(), ps.end());
      for (const Word& u : ps)
        for (size_t len = 1; len < u.size(); ++len)
          CHECK(set.count(Word(u.begin(), u.begin() + static_cast<long>(len))));
    }
  }

  SUBCASE("aab family has the two-letter piece aa") {
    auto ps = pieces(aab_family());
    std::set<Word> set(ps.begin(), ps.end());
    CHECK(set.count(w("aa")));
    CHECK(set.count(w("a")));
    CHECK(set.count(w("b")));
  }
}

TEST_CASE("min piece decomposition") {
  auto pieces_comm = pieces(commutator());
  CHECK(min_piece_decomposition(w("abAB"), pieces_comm) == 4);

  CHECK_FALSE(min_piece_decomposition(parse_word("aaaa", {'a'}), {}).has_value());

  auto ps = pieces(aab_family());
  CHECK(min_piece_decomposition(w("aab"), ps) == 2);  // aa . b

  SUBCASE("dynamic program equals exhaustive search on every closed relator") {
    for (const Presentation& p : {commutator(), a4(), aab_family()}) {
      auto ps2 = pieces(p);
      for (const Word& r : p.relators) {
        REQUIRE(r.size() <= 8);
        CHECK(min_piece_decomposition(r, ps2) == oracle::min_pieces_exhaustive(r, ps2));
      }
    }
  }
}

TEST_CASE("presentation classification") {
  SUBCASE("commutator presentation") {
    auto c = classify_presentation(commutator());
    CHECK(c.v6);
    CHECK(c.vprime6);
    CHECK(c.max_piece_length == 1);
    for (const auto& rc : c.per_relator) {
      CHECK(rc.clause == RelatorClause::kClause1);
      CHECK(rc.min_pieces == 4);
      CHECK_FALSE(rc.vacuous);
    }
  }

  SUBCASE("aab family fails V(6)") {
    auto c = classify_presentation(aab_family());
    CHECK_FALSE(c.v6);
    CHECK_FALSE(c.vprime6);
    bool some_fail = false;
    for (const auto& rc : c.per_relator)
      if (rc.clause == RelatorClause::kFail) some_fail = true;
    CHECK(some_fail);
  }

  SUBCASE("a^4 is vacuously V'(6)") {
    auto c = classify_presentation(a4());
    CHECK(c.v6);
    CHECK(c.vprime6);
    CHECK(c.max_piece_length == 0);
    for (const auto& rc : c.per_relator) {
      CHECK(rc.vacuous);
      CHECK(rc.clause == RelatorClause::kClause1);
    }
  }

  CHECK_THROWS_AS(classify_presentation(Presentation{kAB, {w("abAB")}}), Error);
}

TEST_CASE("diagram validation on the square") {
  auto sq1 = fixtures::sq1();
  auto p = commutator();

  // The region cycle from its minimal dart is [1 3 5 7]; label it to read
  // the commutator.
  DiagramLabelling good = DiagramLabelling::empty(sq1);
  good.set(sq1, 1, w("a")[0]);
  good.set(sq1, 3, w("b")[0]);
  good.set(sq1, 5, inverse(w("a")[0]));
  good.set(sq1, 7, inverse(w("b")[0]));

  auto verdict = validate_diagram(sq1, good, p);
  CHECK(verdict.valid);
  CHECK(verdict.regions_ok);
  REQUIRE(verdict.regions.size() == 1);
  CHECK(verdict.regions[0].matches_relator);

  SUBCASE("boundary word matching traces the outer cycle") {
    auto with_boundary = validate_diagram(sq1, good, p, w("abAB"));
    CHECK(with_boundary.valid);
    CHECK(with_boundary.boundary_matched == true);

    auto mismatch = validate_diagram(sq1, good, p, w("abab"));
    CHECK_FALSE(mismatch.valid);
    CHECK(mismatch.boundary_matched == false);
  }

  SUBCASE("a region reading a non-relator is rejected") {
    DiagramLabelling bad = DiagramLabelling::empty(sq1);
    for (DartId d : {1, 3, 5, 7}) bad.set(sq1, d, w("a")[0]);
    auto v = validate_diagram(sq1, bad, p);
    CHECK_FALSE(v.valid);
    CHECK_FALSE(v.regions[0].matches_relator);
  }

  SUBCASE("unlabelled edges are an error") {
    DiagramLabelling partial = DiagramLabelling::empty(sq1);
    partial.set(sq1, 1, w("a")[0]);
    CHECK_THROWS_WITH_AS(validate_diagram(sq1, partial, p), doctest::Contains("UnlabelledEdge"),
                         Error);
  }
}

TEST_CASE("mirror pairs across a shared edge are detected") {
  // Two squares glued along one edge admit valid labellings both with and
  // without a mirror pair.
  auto lad2 = glue_polygon(polygon_map(4), 0, 1, 4);
  auto p = commutator();

  int valid_reduced = 0, valid_unreduced = 0;
  for_each_labelling(lad2, 2, [&](const DiagramLabelling& l) {
    auto v = validate_diagram(lad2, l, p);
    if (!v.regions_ok) return;
    if (v.reduced)
      ++valid_reduced;
    else
      ++valid_unreduced;
  });
  CHECK(valid_reduced > 0);
  CHECK(valid_unreduced > 0);
}

TEST_CASE("a valid non-reduced diagram can break the inner-valence rule") {
  // Two squares glued along a path of length two: the middle vertex of the
  // glued path is an inner vertex of valence two. Over the commutator
  // presentation (all pieces of length one) this map still carries valid
  // labellings, and every one of them contains a mirror pair. This pins
  // down why the cross-layer check quantifies over reduced diagrams only.
  auto bifold = glue_polygon(polygon_map(4), 0, 2, 4);
  bool inner_valence2 = false;
  for (VertexId v = 0; v < bifold.vertex_count(); ++v)
    if (bifold.vertex_is_inner(v) && bifold.vertex_valence(v) == 2) inner_valence2 = true;
  REQUIRE(inner_valence2);

  auto p = commutator();
  int valid = 0, valid_reduced = 0;
  for_each_labelling(bifold, 2, [&](const DiagramLabelling& l) {
    auto v = validate_diagram(bifold, l, p);
    if (!v.regions_ok) return;
    ++valid;
    if (v.reduced) ++valid_reduced;
  });
  CHECK(valid > 0);
  CHECK(valid_reduced == 0);
}
