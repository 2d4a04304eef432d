#include "vkmap/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace vkmap {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void syntax_error(int line_no, const std::string& what) {
  throw Error(Errc::kSyntaxError, "line " + std::to_string(line_no) + ": " + what);
}

int parse_int(const std::string& tok, int line_no) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) syntax_error(line_no, "bad number '" + tok + "'");
    return v;
  } catch (const std::exception&) {
    syntax_error(line_no, "bad number '" + tok + "'");
  }
}

}  // namespace

ParsedMap parse_map(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;

  int dart_count = -1;
  std::vector<std::vector<DartId>> cycles;
  std::optional<DartId> outer;
  std::vector<std::pair<DartId, char>> labels;
  bool saw_header = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (!saw_header) {
      if (toks.size() != 2 || toks[0] != "kmap" || toks[1] != "1")
        syntax_error(line_no, "expected 'kmap 1' header");
      saw_header = true;
      continue;
    }
    if (toks[0] == "darts") {
      if (toks.size() != 2) syntax_error(line_no, "expected 'darts N'");
      dart_count = parse_int(toks[1], line_no);
    } else if (toks[0] == "vertex") {
      if (toks.size() < 2) syntax_error(line_no, "empty vertex line");
      std::vector<DartId> cycle;
      for (size_t i = 1; i < toks.size(); ++i) cycle.push_back(parse_int(toks[i], line_no));
      cycles.push_back(std::move(cycle));
    } else if (toks[0] == "outer") {
      if (toks.size() != 2) syntax_error(line_no, "expected 'outer d'");
      outer = parse_int(toks[1], line_no);
    } else if (toks[0] == "label") {
      if (toks.size() != 3 || toks[2].size() != 1) syntax_error(line_no, "expected 'label d x'");
      labels.emplace_back(parse_int(toks[1], line_no), toks[2][0]);
    } else {
      syntax_error(line_no, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!saw_header) syntax_error(line_no, "missing 'kmap 1' header");
  if (dart_count < 0) syntax_error(line_no, "missing 'darts' line");
  if (!outer) syntax_error(line_no, "missing 'outer' line");

  std::vector<std::pair<DartId, DartId>> pairs;
  for (DartId d = 1; d + 1 <= dart_count; d += 2) pairs.emplace_back(d, d + 1);

  ParsedMap out{CombinatorialMap::build(dart_count, pairs, cycles, *outer), std::nullopt, {}};

  if (!labels.empty()) {
    std::vector<char> gens;
    for (auto [d, c] : labels) {
      char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      if (low < 'a' || low > 'z')
        throw Error(Errc::kSyntaxError, "label letters must be latin letters");
      gens.push_back(low);
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    DiagramLabelling l = DiagramLabelling::empty(out.map);
    for (auto [d, c] : labels) {
      if (d < 1 || d > dart_count) throw Error(Errc::kDanglingDart, "label on unknown dart");
      char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      auto idx = std::find(gens.begin(), gens.end(), low) - gens.begin();
      Letter x = static_cast<Letter>(idx + 1);
      if (std::isupper(static_cast<unsigned char>(c))) x = inverse(x);
      l.set(out.map, d, x);
    }
    out.labelling = std::move(l);
    out.label_generators = std::move(gens);
  }
  return out;
}

std::string serialize_map(const CombinatorialMap& m, const DiagramLabelling* labelling,
                          const std::vector<char>* label_generators) {
  if (!m.has_paired_reversal())
    throw Error(Errc::kNotSerializable, "text format requires reversal pairs (2k-1, 2k)");

  std::ostringstream out;
  out << "kmap 1\n";
  out << "darts " << m.dart_count() << "\n";

  std::vector<std::vector<DartId>> cycles = m.vertex_cycles();
  for (auto& cycle : cycles) {
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (const auto& cycle : cycles) {
    out << "vertex";
    for (DartId d : cycle) out << ' ' << d;
    out << "\n";
  }
  out << "outer " << m.outer_dart() << "\n";

  if (labelling) {
    if (!label_generators)
      throw Error(Errc::kNotSerializable, "labelled maps need the generator letters");
    for (DartId d = 1; d <= m.dart_count(); d += 2) {
      Letter x = labelling->at(d);
      if (x == 0) continue;
      int idx = std::abs(static_cast<int>(x)) - 1;
      char c = label_generators->at(static_cast<size_t>(idx));
      if (x < 0) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      out << "label " << d << ' ' << c << "\n";
    }
  }
  return out.str();
}

Presentation parse_presentation(std::string_view text, bool auto_close) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  std::vector<char> gens;
  std::vector<std::string> relator_texts;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (!saw_header) {
      if (toks.size() != 2 || toks[0] != "pres" || toks[1] != "1")
        syntax_error(line_no, "expected 'pres 1' header");
      saw_header = true;
      continue;
    }
    if (toks[0] == "gens") {
      for (size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].size() != 1) syntax_error(line_no, "generators are single letters");
        gens.push_back(toks[i][0]);
      }
    } else if (toks[0] == "rel") {
      if (toks.size() != 2) syntax_error(line_no, "expected 'rel word'");
      relator_texts.push_back(toks[1]);
    } else {
      syntax_error(line_no, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!saw_header) syntax_error(line_no, "missing 'pres 1' header");

  std::vector<Word> relators;
  for (const std::string& t : relator_texts) {
    Word w = parse_word(t, gens);
    if (!is_freely_reduced(w))
      throw Error(Errc::kNotFreelyReduced, "relator '" + t + "' is not freely reduced");
    relators.push_back(std::move(w));
  }
  return make_presentation(gens, relators, auto_close);
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "pres 1\n";
  out << "gens";
  for (char g : p.generators) out << ' ' << g;
  out << "\n";
  for (const Word& r : p.relators) out << "rel " << format_word(r, p.generators) << "\n";
  return out.str();
}

std::string export_dot(const CombinatorialMap& m, const std::vector<CutCornerReport>* cut_corners,
                       const std::vector<ThickConfigReport>* thick_configs,
                       const DiagramLabelling* labelling,
                       const std::vector<char>* label_generators) {
  std::set<RegionId> highlighted;
  if (cut_corners)
    for (const auto& r : *cut_corners) highlighted.insert(r.region);
  if (thick_configs)
    for (const auto& r : *thick_configs) {
      highlighted.insert(r.region);
      if (r.companion) highlighted.insert(*r.companion);
    }

  std::set<EdgeId> highlighted_edges;
  for (RegionId r : highlighted)
    for (DartId d : m.region_boundary(r)) highlighted_edges.insert(m.edge_of(d));

  std::ostringstream out;
  out << "graph map {\n";
  out << "  // vertices " << m.vertex_count() << ", edges " << m.edge_count() << ", regions "
      << m.region_count() << "\n";
  for (VertexId v = 0; v < m.vertex_count(); ++v) out << "  v" << v + 1 << ";\n";

  for (DartId d = 1; d <= m.dart_count(); ++d) {
    if (d > m.reversal(d)) continue;
    out << "  v" << m.vertex_of(d) + 1 << " -- v" << m.vertex_of(m.reversal(d)) + 1;
    out << " [label=\"e" << m.edge_of(d) + 1;
    if (labelling && label_generators && labelling->at(d) != 0) {
      Letter x = labelling->at(d);
      int idx = std::abs(static_cast<int>(x)) - 1;
      char c = label_generators->at(static_cast<size_t>(idx));
      if (x < 0) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      out << ' ' << c;
    }
    out << "\"";
    if (highlighted_edges.count(m.edge_of(d))) out << ",color=red,penwidth=2";
    out << "];\n";
  }

  for (RegionId r = 0; r < m.region_count(); ++r) {
    out << "  subgraph cluster_r" << r + 1 << " { label=\"R" << r + 1 << "\";";
    if (highlighted.count(r)) out << " color=red;";
    out << " }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace vkmap
