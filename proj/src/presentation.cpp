#include "vkmap/presentation.hpp"

#include <algorithm>
#include <set>

namespace vkmap {

Presentation make_presentation(std::vector<char> generators, std::vector<Word> relators,
                               bool auto_close) {
  for (char g : generators)
    if (g < 'a' || g > 'z')
      throw Error(Errc::kSyntaxError, "generators must be lowercase letters");
  {
    std::set<char> unique(generators.begin(), generators.end());
    if (unique.size() != generators.size())
      throw Error(Errc::kSyntaxError, "duplicate generator");
  }
  for (const Word& r : relators) {
    if (r.empty()) throw Error(Errc::kSyntaxError, "empty relator");
    if (!is_freely_reduced(r)) throw Error(Errc::kNotFreelyReduced, "relator is not freely reduced");
    for (Letter x : r)
      if (std::abs(static_cast<int>(x)) > static_cast<int>(generators.size()))
        throw Error(Errc::kUnknownGenerator, "relator uses an unknown generator");
  }
  if (auto_close) relators = symmetric_closure(relators);
  std::sort(relators.begin(), relators.end());
  relators.erase(std::unique(relators.begin(), relators.end()), relators.end());
  return Presentation{std::move(generators), std::move(relators)};
}

std::vector<Word> symmetric_closure(const std::vector<Word>& relators) {
  std::set<Word> out;
  for (const Word& r : relators) {
    if (!is_cyclically_reduced(r))
      throw Error(Errc::kNotCyclicallyReduced, "relator is not cyclically reduced");
    const Word inv = inverse(r);
    for (int k = 0; k < static_cast<int>(r.size()); ++k) {
      out.insert(cyclic_shift(r, k));
      out.insert(cyclic_shift(inv, k));
    }
    if (r.empty()) out.insert(r);
  }
  return {out.begin(), out.end()};
}

bool is_symmetrically_closed(const std::vector<Word>& relators) {
  std::set<Word> set(relators.begin(), relators.end());
  for (const Word& r : relators) {
    if (!is_cyclically_reduced(r)) return false;
    if (!set.count(inverse(r))) return false;
    if (!r.empty() && !set.count(cyclic_shift(r, 1))) return false;
  }
  return true;
}

std::vector<Word> pieces(const Presentation& p) {
  if (!is_symmetrically_closed(p.relators))
    throw Error(Errc::kNotSymmetricallyClosed, "pieces need a symmetrically closed relator set");
  std::set<Word> out;
  for (size_t i = 0; i < p.relators.size(); ++i) {
    for (size_t j = i + 1; j < p.relators.size(); ++j) {
      const Word& a = p.relators[i];
      const Word& b = p.relators[j];
      size_t lcp = 0;
      while (lcp < a.size() && lcp < b.size() && a[lcp] == b[lcp]) ++lcp;
      for (size_t len = 1; len <= lcp; ++len) out.insert(Word(a.begin(), a.begin() + len));
    }
  }
  return {out.begin(), out.end()};
}

std::optional<int> min_piece_decomposition(const Word& w, const std::vector<Word>& piece_set) {
  const int n = static_cast<int>(w.size());
  if (n == 0) return 0;
  std::set<Word> set(piece_set.begin(), piece_set.end());
  constexpr int kInf = 1 << 29;
  std::vector<int> dp(n + 1, kInf);
  dp[0] = 0;
  for (int j = 1; j <= n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (dp[i] == kInf) continue;
      if (set.count(Word(w.begin() + i, w.begin() + j))) dp[j] = std::min(dp[j], dp[i] + 1);
    }
  }
  if (dp[n] == kInf) return std::nullopt;
  return dp[n];
}

PresentationClassification classify_presentation(const Presentation& p,
                                                 const ClassifyPresentationOptions& opts) {
  if (!is_symmetrically_closed(p.relators))
    throw Error(Errc::kNotSymmetricallyClosed, "classification needs a closed relator set");

  PresentationClassification out;
  out.piece_set = pieces(p);
  for (const Word& u : out.piece_set)
    out.max_piece_length = std::max(out.max_piece_length, static_cast<int>(u.size()));

  const auto& rs = p.relators;
  out.v6 = true;
  for (const Word& r : rs) {
    RelatorClassification rc;
    rc.relator = r;
    rc.min_pieces = min_piece_decomposition(r, out.piece_set);
    rc.vacuous = !rc.min_pieces.has_value();

    rc.pair_condition = true;
    for (const Word& r1 : rs) {
      for (const Word& r2 : rs) {
        if (opts.pair_scope == ClassifyPresentationOptions::PairScope::kDistinctOnly &&
            (r1 == r || r2 == r || r1 == r2))
          continue;
        if (!concatenation_freely_reduced(r, r1) && !concatenation_freely_reduced(r1, r2) &&
            !concatenation_freely_reduced(r2, r))
          rc.pair_condition = false;
        if (!rc.pair_condition) break;
      }
      if (!rc.pair_condition) break;
    }

    const bool pieces_ge4 = rc.vacuous || *rc.min_pieces >= 4;
    const bool pieces_ge6 = rc.vacuous || *rc.min_pieces >= 6;
    if (pieces_ge4 && rc.pair_condition)
      rc.clause = RelatorClause::kClause1;
    else if (pieces_ge6)
      rc.clause = RelatorClause::kClause2;
    else
      rc.clause = RelatorClause::kFail;
    if (rc.clause == RelatorClause::kFail) out.v6 = false;
    out.per_relator.push_back(std::move(rc));
  }
  out.vprime6 = out.v6 && out.max_piece_length <= 1;
  return out;
}

DiagramLabelling DiagramLabelling::empty(const CombinatorialMap& m) {
  DiagramLabelling l;
  l.letter_of_dart.assign(static_cast<size_t>(m.dart_count()) + 1, 0);
  return l;
}

void DiagramLabelling::set(const CombinatorialMap& m, DartId d, Letter x) {
  letter_of_dart.at(static_cast<size_t>(d)) = x;
  letter_of_dart.at(static_cast<size_t>(m.reversal(d))) = inverse(x);
}

bool DiagramLabelling::complete(const CombinatorialMap& m) const {
  for (DartId d = 1; d <= m.dart_count(); ++d)
    if (at(d) == 0) return false;
  return true;
}

Word read_path(const CombinatorialMap& m, const DiagramLabelling& l, std::span<const DartId> path) {
  Word out;
  out.reserve(path.size());
  for (DartId d : path) {
    Letter x = l.at(d);
    if (x == 0) throw Error(Errc::kUnlabelledEdge, "dart " + std::to_string(d) + " is unlabelled");
    (void)m;
    out.push_back(x);
  }
  return out;
}

namespace {

Word read_cycle_from(const CombinatorialMap& m, const DiagramLabelling& l,
                     std::span<const DartId> cycle, size_t start) {
  Word out;
  out.reserve(cycle.size());
  for (size_t i = 0; i < cycle.size(); ++i) out.push_back(l.at(cycle[(start + i) % cycle.size()]));
  return out;
}

}  // namespace

DiagramVerdict validate_diagram(const CombinatorialMap& m, const DiagramLabelling& l,
                                const Presentation& p, const std::optional<Word>& boundary_word) {
  if (!l.complete(m)) throw Error(Errc::kUnlabelledEdge, "labelling does not cover every edge");

  const std::vector<Word> closure = symmetric_closure(p.relators);
  const std::set<Word> closure_set(closure.begin(), closure.end());

  DiagramVerdict v;
  v.regions_ok = true;
  for (RegionId r = 0; r < m.region_count(); ++r) {
    RegionDiagnostic diag;
    diag.region = r;
    diag.word = read_path(m, l, m.region_boundary(r));
    diag.matches_relator = closure_set.count(diag.word) > 0;
    if (!diag.matches_relator) v.regions_ok = false;
    v.regions.push_back(std::move(diag));
  }

  if (boundary_word) {
    const auto cycle = m.outer_cycle();
    bool matched = false;
    for (size_t s = 0; s < cycle.size() && !matched; ++s) {
      Word w = read_cycle_from(m, l, cycle, s);
      if (w == *boundary_word || inverse(w) == *boundary_word) matched = true;
    }
    if (cycle.empty() && boundary_word->empty()) matched = true;
    v.boundary_matched = matched;
  }

  v.reduced = is_reduced_diagram(m, l);
  v.valid = v.regions_ok && (!v.boundary_matched.has_value() || *v.boundary_matched);
  return v;
}

bool is_reduced_diagram(const CombinatorialMap& m, const DiagramLabelling& l) {
  if (!l.complete(m)) throw Error(Errc::kUnlabelledEdge, "labelling does not cover every edge");
  for (DartId d = 1; d <= m.dart_count(); ++d) {
    DartId rd = m.reversal(d);
    if (d > rd) continue;
    auto r1 = m.region_of(d);
    auto r2 = m.region_of(rd);
    if (!r1 || !r2) continue;  // boundary edge

    // Read both incident regions starting at the shared edge; the pair is a
    // mirror pair when the words agree after the shared letter up to
    // inversion, which is exactly when the two regions fold onto each other.
    auto word_from = [&](RegionId r, DartId start) {
      auto cycle = m.region_boundary(r);
      size_t pos = 0;
      while (cycle[pos] != start) ++pos;
      return read_cycle_from(m, l, cycle, pos);
    };
    Word w1 = word_from(*r1, d);
    Word w2 = word_from(*r2, rd);
    Word tail1(w1.begin() + 1, w1.end());
    Word tail2(w2.begin() + 1, w2.end());
    if (tail1 == inverse(tail2)) return false;
  }
  return true;
}

}  // namespace vkmap
