#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <tuple>

#include "vkmap/cli.hpp"
#include "vkmap/enumerate.hpp"
#include "vkmap/fixtures.hpp"
#include "vkmap/io.hpp"

#include <json.hpp>

using namespace vkmap;

namespace {

int count_lines_with(const std::string& text, const std::string& needle) {
  int count = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.find(needle) != std::string::npos) ++count;
  return count;
}

}  // namespace

TEST_CASE("map documents round-trip") {
  for (const auto& m : {fixtures::sq1(), fixtures::lad2(), fixtures::lad3(), fixtures::grid4(),
                        fixtures::tri_wheel()}) {
    std::string text = serialize_map(m);
    ParsedMap back = parse_map(text);
    CHECK(back.map.dart_count() == m.dart_count());
    for (DartId d = 1; d <= m.dart_count(); ++d) {
      CHECK(back.map.reversal(d) == m.reversal(d));
      CHECK(back.map.rotation_next(d) == m.rotation_next(d));
    }
    CHECK(back.map.outer_dart() == m.outer_dart());
    // Canonical form is idempotent byte for byte.
    CHECK(serialize_map(back.map) == text);
  }
}

TEST_CASE("hand-written document parses to the square") {
  std::string doc = R"(kmap 1
darts 8
vertex 1 8
vertex 2 3
vertex 4 5
vertex 6 7
outer 2
)";
  ParsedMap parsed = parse_map(doc);
  CHECK(canonical_form(parsed.map) == canonical_form(fixtures::sq1()));
  CHECK(serialize_map(parsed.map) == doc);
}

TEST_CASE("map document errors") {
  CHECK_THROWS_WITH_AS(parse_map("kmap 1\ndarts 8\nvertex 1 8\nvertex 3 2\nvertex 5 4\nvertex 7 6\n"),
                       doctest::Contains("SyntaxError"), Error);  // missing outer
  CHECK_THROWS_WITH_AS(parse_map("darts 4\n"), doctest::Contains("SyntaxError"), Error);
  CHECK_THROWS_AS(parse_map("kmap 1\ndarts 8\nvertex 1 8\nvertex 3 2\nvertex 5 4\nvertex 7 6 6\nouter 2\n"),
                  Error);  // duplicate dart
  // Validation errors pass through.
  CHECK_THROWS_WITH_AS(parse_map("kmap 1\ndarts 4\nvertex 1 3 2 4\nouter 1\n"),
                       doctest::Contains("NotPlanar"), Error);
}

TEST_CASE("labelled documents carry the labelling both ways") {
  auto sq1 = fixtures::sq1();
  DiagramLabelling l = DiagramLabelling::empty(sq1);
  const std::vector<char> gens{'a', 'b'};
  l.set(sq1, 1, 1);                      // a
  l.set(sq1, 3, 2);                      // b
  l.set(sq1, 5, static_cast<Letter>(-1));  // A
  l.set(sq1, 7, static_cast<Letter>(-2));  // B

  std::string text = serialize_map(sq1, &l, &gens);
  CHECK(count_lines_with(text, "label") == 4);
  ParsedMap back = parse_map(text);
  REQUIRE(back.labelling.has_value());
  CHECK(back.label_generators == gens);
  for (DartId d = 1; d <= sq1.dart_count(); ++d) CHECK(back.labelling->at(d) == l.at(d));
  CHECK(serialize_map(back.map, &*back.labelling, &back.label_generators) == text);
}

TEST_CASE("presentation documents") {
  Presentation p = parse_presentation("pres 1\ngens a b\nrel abAB\n", /*auto_close=*/true);
  CHECK(p.generators == std::vector<char>{'a', 'b'});
  CHECK(p.relators.size() == 8);

  CHECK_THROWS_WITH_AS(parse_presentation("pres 1\ngens a\nrel aA\n"),
                       doctest::Contains("NotFreelyReduced"), Error);
  CHECK_THROWS_WITH_AS(parse_presentation("pres 1\ngens a b\nrel abc\n"),
                       doctest::Contains("UnknownGenerator"), Error);
  CHECK_THROWS_WITH_AS(parse_presentation("gens a\n"), doctest::Contains("SyntaxError"), Error);

  SUBCASE("round-trip") {
    std::string text = serialize_presentation(p);
    Presentation back = parse_presentation(text);
    CHECK(back.generators == p.generators);
    CHECK(back.relators == p.relators);
    CHECK(serialize_presentation(back) == text);
  }
}

TEST_CASE("DOT export") {
  auto sq1 = fixtures::sq1();
  std::string dot = export_dot(sq1);
  CHECK(count_lines_with(dot, "v") >= 4);
  CHECK(count_lines_with(dot, " -- ") == 4);
  CHECK(count_lines_with(dot, "subgraph cluster_r") == 1);
  CHECK(export_dot(sq1) == dot);  // deterministic

  auto lad2 = fixtures::lad2();
  CHECK(count_lines_with(export_dot(lad2), " -- ") == 7);

  SUBCASE("cut-corner highlight marks the region's cluster") {
    auto grid4 = fixtures::grid4();
    auto d = make_decomposition(grid4, 1, 0, 4, 0);
    auto reports = find_cut_corners(grid4, d, Side::kMu);
    REQUIRE_FALSE(reports.empty());
    std::string marked = export_dot(grid4, &reports);
    CHECK(count_lines_with(marked, "color=red") > 0);
    std::string plain = export_dot(grid4);
    CHECK(count_lines_with(plain, "color=red") == 0);
  }
}

TEST_CASE("CLI subcommands") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "vkmap_cli_test";
  fs::create_directories(dir);

  auto write = [&](const std::string& name, const std::string& contents) {
    std::ofstream out(dir / name);
    out << contents;
    return (dir / name).string();
  };

  auto run = [&](std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return std::tuple<int, std::string, std::string>{code, out.str(), err.str()};
  };

  std::string grid_path = write("grid.kmap", serialize_map(fixtures::grid4()));
  std::string pres_path = write("comm.pres", "pres 1\ngens a b\nrel abAB\n");
  std::string broken_path = write("broken.kmap", "kmap 1\ndarts 3\nouter 1\n");

  SUBCASE("check-map") {
    auto [code, out, err] = run({"check-map", grid_path});
    CHECK(code == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["ok"] == true);
    CHECK(j["regions"] == 4);

    auto [bad_code, bad_out, bad_err] = run({"check-map", broken_path});
    CHECK(bad_code == 2);
    CHECK_FALSE(bad_err.empty());
  }

  SUBCASE("classify-map") {
    auto [code, out, err] = run({"classify-map", grid_path});
    CHECK(code == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["is_proper_v6"] == true);
    CHECK(j["is_proper_c7"] == false);
  }

  SUBCASE("classify-pres") {
    auto [code, out, err] = run({"classify-pres", pres_path, "--symmetrize"});
    CHECK(code == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["v6"] == true);
    CHECK(j["vprime6"] == true);
  }

  SUBCASE("cut-corners and thick-configs") {
    auto [code, out, err] =
        run({"cut-corners", grid_path, "--base", "1", "--mu", "4", "--side", "mu"});
    CHECK(code == 0);
    auto j = nlohmann::json::parse(out);
    REQUIRE(j["reports"].size() == 1);
    CHECK(j["reports"][0]["kind"] == "T2");
    CHECK(j["reports"][0]["ell"] == 2);

    auto [tcode, tout, terr] =
        run({"thick-configs", grid_path, "--base", "1", "--mu", "4", "--side", "mu"});
    CHECK(tcode == 0);
    auto tj = nlohmann::json::parse(tout);
    REQUIRE(tj["reports"].size() == 1);
    CHECK(tj["reports"][0]["kind"] == "two-region");
  }

  SUBCASE("validate-diagram") {
    auto sq1 = fixtures::sq1();
    DiagramLabelling l = DiagramLabelling::empty(sq1);
    const std::vector<char> gens{'a', 'b'};
    l.set(sq1, 1, 1);
    l.set(sq1, 3, 2);
    l.set(sq1, 5, static_cast<Letter>(-1));
    l.set(sq1, 7, static_cast<Letter>(-2));
    std::string labelled_path = write("sq1.kmap", serialize_map(sq1, &l, &gens));

    auto [code, out, err] = run({"validate-diagram", labelled_path, "--pres", pres_path,
                                 "--boundary-word", "abAB"});
    CHECK(code == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["valid"] == true);
    CHECK(j["boundary_matched"] == true);

    DiagramLabelling bad = DiagramLabelling::empty(sq1);
    for (DartId d : {1, 3, 5, 7}) bad.set(sq1, d, 1);
    std::string bad_path = write("sq1_bad.kmap", serialize_map(sq1, &bad, &gens));
    auto [bad_code, bad_out, bad_err] = run({"validate-diagram", bad_path, "--pres", pres_path});
    CHECK(bad_code == 1);
  }

  SUBCASE("verify and enumerate") {
    auto [code, out, err] =
        run({"verify", "--theorem", "main", "--max-regions", "2", "--gon", "4"});
    CHECK(code == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["counterexamples"].empty());
    CHECK(j["decompositions_tested"].get<long>() > 0);

    auto [ecode, eout, eerr] = run({"enumerate", "--max-regions", "2", "--gon", "4"});
    CHECK(ecode == 0);
    auto ej = nlohmann::json::parse(eout);
    CHECK(ej["count"] == 4);
    for (const auto& text : ej["maps"])
      CHECK_NOTHROW(parse_map(text.get<std::string>()));
  }

  SUBCASE("export-dot") {
    auto [code, out, err] = run({"export-dot", grid_path, "--highlight", "--base", "1", "--mu",
                                 "4"});
    CHECK(code == 0);
    CHECK(out.find("graph map {") != std::string::npos);
    CHECK(out.find("color=red") != std::string::npos);
  }

  SUBCASE("usage errors exit 2") {
    auto [code, out, err] = run({"no-such-command"});
    CHECK(code == 2);
    auto [code2, out2, err2] = run({"cut-corners", grid_path});
    CHECK(code2 == 2);  // missing required decomposition options
  }
}
