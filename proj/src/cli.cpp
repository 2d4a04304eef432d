#include "vkmap/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "vkmap/enumerate.hpp"
#include "vkmap/io.hpp"
#include "vkmap/verify.hpp"

namespace vkmap {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kSyntaxError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json to_json(const Classification& c) {
  return json{{"is_v6", c.is_v6},
              {"is_proper_v6", c.is_proper_v6},
              {"is_proper_c7", c.is_proper_c7},
              {"is_proper_c4t4", c.is_proper_c4t4}};
}

json to_json(const CutCornerReport& r) {
  json out{{"region", r.region},
           {"side", side_name(r.side)},
           {"kind", cut_corner_kind_name(r.kind)},
           {"ell", r.ell},
           {"outer_edges", r.outer_edges},
           {"inner_edges", r.inner_edges}};
  out["aux_region"] = r.aux_region ? json(*r.aux_region) : json(nullptr);
  out["corner_vertex"] = r.corner_vertex ? json(*r.corner_vertex) : json(nullptr);
  return out;
}

json to_json(const ThickConfigReport& r) {
  json out{{"kind", r.kind == ThickKind::kSingleRegion ? "single-region" : "two-region"},
           {"region", r.region}};
  out["companion"] = r.companion ? json(*r.companion) : json(nullptr);
  out["mu"] = r.mu;
  out["sigma"] = r.sigma;
  out["leading_edge"] = r.leading_edge ? json(*r.leading_edge) : json(nullptr);
  return out;
}

json to_json(const CampaignReport& r) {
  json cex = json::array();
  for (const auto& c : r.counterexamples)
    cex.push_back(json{{"map", c.map_text}, {"base", c.base}, {"xi", c.xi}, {"mu", c.mu},
                       {"tau", c.tau}});
  return json{{"theorem", theorem_name(r.theorem)},
              {"maps_generated", r.maps_generated},
              {"maps_in_class", r.maps_in_class},
              {"decompositions_tested", r.decompositions_tested},
              {"pass_count", r.pass_count},
              {"vacuous_count", r.vacuous_count},
              {"vacuous_thin_count", r.vacuous_thin_count},
              {"vacuous_no_candidate_count", r.vacuous_no_candidate_count},
              {"counterexamples", cex}};
}

struct DecompositionArgs {
  int base = 0;
  int xi = 0;
  int mu = 0;
  int tau = 0;
};

void add_decomposition_options(CLI::App* cmd, DecompositionArgs& a, bool required) {
  auto* base = cmd->add_option("--base", a.base, "basepoint dart on the outer face");
  cmd->add_option("--xi", a.xi, "length of xi (0 or 1)")->check(CLI::Range(0, 1));
  auto* mu = cmd->add_option("--mu", a.mu, "length of mu");
  cmd->add_option("--tau", a.tau, "length of tau (0 or 1)")->check(CLI::Range(0, 1));
  if (required) {
    base->required();
    mu->required();
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"van Kampen map toolkit"};
  app.require_subcommand(1);

  // check-map
  std::string map_path;
  auto* check = app.add_subcommand("check-map", "validate a map document");
  check->add_option("file", map_path)->required();

  // classify-map
  std::string classify_path;
  auto* classify = app.add_subcommand("classify-map", "map condition classes");
  classify->add_option("file", classify_path)->required();

  // classify-pres
  std::string pres_path;
  bool symmetrize = false;
  auto* cpres = app.add_subcommand("classify-pres", "presentation classes");
  cpres->add_option("file", pres_path)->required();
  cpres->add_flag("--symmetrize", symmetrize, "apply the symmetric closure before classifying");

  // cut-corners
  std::string cc_path, cc_side = "mu";
  DecompositionArgs cc_args;
  auto* cc = app.add_subcommand("cut-corners", "cut corners along mu or sigma");
  cc->add_option("file", cc_path)->required();
  add_decomposition_options(cc, cc_args, true);
  cc->add_option("--side", cc_side)->check(CLI::IsMember({"mu", "sigma"}));

  // thick-configs
  std::string tc_path, tc_side = "mu";
  DecompositionArgs tc_args;
  auto* tc = app.add_subcommand("thick-configs", "thick configurations along mu or sigma");
  tc->add_option("file", tc_path)->required();
  add_decomposition_options(tc, tc_args, true);
  tc->add_option("--side", tc_side)->check(CLI::IsMember({"mu", "sigma"}));

  // validate-diagram
  std::string vd_map, vd_pres, vd_boundary;
  auto* vd = app.add_subcommand("validate-diagram", "check a labelled map against a presentation");
  vd->add_option("file", vd_map)->required();
  vd->add_option("--pres", vd_pres, "presentation document")->required();
  vd->add_option("--boundary-word", vd_boundary, "expected boundary word");

  // verify
  std::string theorem = "main";
  EnumConfig cfg;
  int gon = 0;
  auto* verify = app.add_subcommand("verify", "run a theorem campaign");
  verify->add_option("--theorem", theorem)->check(CLI::IsMember({"main", "c7", "c4t4"}));
  verify->add_option("--max-regions", cfg.max_regions);
  verify->add_option("--gon", gon, "regions have exactly this many edges");
  verify->add_option("--min-edges", cfg.min_region_edges);
  verify->add_option("--max-edges", cfg.max_region_edges);
  verify->add_option("--max-boundary", cfg.max_boundary_length);
  bool dedup_off = false;
  verify->add_flag("--no-dedup", dedup_off, "emit every raw gluing");

  // enumerate
  EnumConfig ecfg;
  int egon = 0;
  std::string filter = "none";
  bool ededup_off = false;
  auto* enumerate = app.add_subcommand("enumerate", "list shellable maps");
  enumerate->add_option("--max-regions", ecfg.max_regions);
  enumerate->add_option("--gon", egon);
  enumerate->add_option("--min-edges", ecfg.min_region_edges);
  enumerate->add_option("--max-edges", ecfg.max_region_edges);
  enumerate->add_option("--max-boundary", ecfg.max_boundary_length);
  enumerate->add_option("--filter", filter)
      ->check(CLI::IsMember({"none", "proper_v6", "proper_c7", "proper_c4t4"}));
  enumerate->add_flag("--no-dedup", ededup_off);

  // export-dot
  std::string dot_path;
  DecompositionArgs dot_args;
  bool dot_decomp = false;
  auto* dot = app.add_subcommand("export-dot", "DOT rendering, optionally with highlights");
  dot->add_option("file", dot_path)->required();
  add_decomposition_options(dot, dot_args, false);
  dot->add_flag("--highlight", dot_decomp, "highlight cut corners of the given decomposition");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      ParsedMap parsed = parse_map(read_file(map_path));
      const auto& m = parsed.map;
      out << json{{"ok", true},
                  {"vertices", m.vertex_count()},
                  {"edges", m.edge_count()},
                  {"regions", m.region_count()},
                  {"boundary_length", m.boundary_length()},
                  {"labelled", parsed.labelling.has_value()}}
                 .dump(2)
          << "\n";
      return 0;
    }

    if (*classify) {
      ParsedMap parsed = parse_map(read_file(classify_path));
      out << to_json(classify_map(parsed.map)).dump(2) << "\n";
      return 0;
    }

    if (*cpres) {
      Presentation p = parse_presentation(read_file(pres_path), symmetrize);
      auto c = classify_presentation(p);
      json per = json::array();
      for (const auto& rc : c.per_relator) {
        json item{{"relator", format_word(rc.relator, p.generators)}};
        item["clause"] = rc.clause == RelatorClause::kClause1   ? "clause-1"
                         : rc.clause == RelatorClause::kClause2 ? "clause-2"
                                                                : "fail";
        item["min_pieces"] = rc.min_pieces ? json(*rc.min_pieces) : json(nullptr);
        item["vacuous"] = rc.vacuous;
        item["pair_condition"] = rc.pair_condition;
        per.push_back(std::move(item));
      }
      json pieces_json = json::array();
      for (const auto& u : c.piece_set) pieces_json.push_back(format_word(u, p.generators));
      out << json{{"v6", c.v6},
                  {"vprime6", c.vprime6},
                  {"max_piece_length", c.max_piece_length},
                  {"pieces", pieces_json},
                  {"per_relator", per}}
                 .dump(2)
          << "\n";
      return 0;
    }

    if (*cc || *tc) {
      bool corners = static_cast<bool>(*cc);
      const std::string& path = corners ? cc_path : tc_path;
      const DecompositionArgs& a = corners ? cc_args : tc_args;
      const std::string& side_str = corners ? cc_side : tc_side;
      ParsedMap parsed = parse_map(read_file(path));
      auto d = make_decomposition(parsed.map, a.base, a.xi, a.mu, a.tau);
      Side side = side_str == "mu" ? Side::kMu : Side::kSigma;
      json reports = json::array();
      if (corners) {
        for (const auto& r : find_cut_corners(parsed.map, d, side)) reports.push_back(to_json(r));
      } else {
        const auto& host = side == Side::kMu ? d.mu : d.sigma;
        for (const auto& r : find_thick_configurations(parsed.map, host))
          reports.push_back(to_json(r));
      }
      out << json{{"side", side_str}, {"reports", reports}}.dump(2) << "\n";
      return 0;
    }

    if (*vd) {
      ParsedMap parsed = parse_map(read_file(vd_map));
      if (!parsed.labelling) throw Error(Errc::kUnlabelledEdge, "map document has no labels");
      Presentation p = parse_presentation(read_file(vd_pres), /*auto_close=*/true);
      std::optional<Word> boundary;
      if (!vd_boundary.empty()) boundary = parse_word(vd_boundary, p.generators);
      // Re-key the parsed labels against the presentation's generators.
      DiagramLabelling l = DiagramLabelling::empty(parsed.map);
      for (DartId dart = 1; dart <= parsed.map.dart_count(); ++dart) {
        Letter x = parsed.labelling->at(dart);
        if (x == 0 || x < 0) continue;
        char c = parsed.label_generators.at(static_cast<size_t>(x - 1));
        Word one = parse_word(std::string(1, c), p.generators);
        l.set(parsed.map, dart, one.at(0));
      }
      auto v = validate_diagram(parsed.map, l, p, boundary);
      json regions = json::array();
      for (const auto& diag : v.regions)
        regions.push_back(json{{"region", diag.region},
                               {"word", format_word(diag.word, p.generators)},
                               {"matches_relator", diag.matches_relator}});
      out << json{{"valid", v.valid},
                  {"reduced", v.reduced},
                  {"boundary_matched",
                   v.boundary_matched ? json(*v.boundary_matched) : json(nullptr)},
                  {"regions", regions}}
                 .dump(2)
          << "\n";
      return v.valid ? 0 : 1;
    }

    if (*verify) {
      if (gon > 0) {
        cfg.min_region_edges = gon;
        cfg.max_region_edges = gon;
      }
      cfg.dedup = !dedup_off;
      TheoremId t = theorem == "main" ? TheoremId::kMain
                    : theorem == "c7" ? TheoremId::kC7
                                      : TheoremId::kC4T4;
      CampaignReport report = run_campaign(cfg, t);
      out << to_json(report).dump(2) << "\n";
      return report.counterexamples.empty() ? 0 : 1;
    }

    if (*enumerate) {
      if (egon > 0) {
        ecfg.min_region_edges = egon;
        ecfg.max_region_edges = egon;
      }
      ecfg.dedup = !ededup_off;
      if (filter == "proper_v6") ecfg.filter = ClassFilter::kProperV6;
      if (filter == "proper_c7") ecfg.filter = ClassFilter::kProperC7;
      if (filter == "proper_c4t4") ecfg.filter = ClassFilter::kProperC4T4;
      json maps = json::array();
      EnumStats stats = enumerate_maps(ecfg, [&](const CombinatorialMap& m) {
        maps.push_back(serialize_map(m));
      });
      out << json{{"generated", stats.generated}, {"count", stats.emitted}, {"maps", maps}}.dump(2)
          << "\n";
      return 0;
    }

    if (*dot) {
      ParsedMap parsed = parse_map(read_file(dot_path));
      std::vector<CutCornerReport> reports;
      if (dot_decomp) {
        auto d = make_decomposition(parsed.map, dot_args.base, dot_args.xi, dot_args.mu,
                                    dot_args.tau);
        reports = find_cut_corners(parsed.map, d, Side::kMu);
        auto sigma = find_cut_corners(parsed.map, d, Side::kSigma);
        reports.insert(reports.end(), sigma.begin(), sigma.end());
      }
      const DiagramLabelling* l = parsed.labelling ? &*parsed.labelling : nullptr;
      const std::vector<char>* gens = parsed.labelling ? &parsed.label_generators : nullptr;
      out << export_dot(parsed.map, dot_decomp ? &reports : nullptr, nullptr, l, gens);
      return 0;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << app.help() << "\n";
  return 2;
}

}  // namespace vkmap
