#pragma once

#include <optional>
#include <vector>

#include "vkmap/map.hpp"
#include "vkmap/words.hpp"

namespace vkmap {

/// A finite presentation. Relators are kept sorted and deduplicated;
/// whether the set is symmetrically closed is up to the caller (pieces()
/// and classify_presentation() insist on it).
struct Presentation {
  std::vector<char> generators;
  std::vector<Word> relators;
};

Presentation make_presentation(std::vector<char> generators, std::vector<Word> relators,
                               bool auto_close = false);

/// Smallest superset closed under inversion and cyclic permutation.
/// Throws kNotCyclicallyReduced unless every input word is freely and
/// cyclically reduced.
std::vector<Word> symmetric_closure(const std::vector<Word>& relators);

bool is_symmetrically_closed(const std::vector<Word>& relators);

/// The non-empty words that are a common prefix of two distinct relators.
/// Throws kNotSymmetricallyClosed when the relator set is not closed.
std::vector<Word> pieces(const Presentation& p);

/// Minimum number of pieces whose concatenation is w, or nullopt when no
/// decomposition into pieces exists.
std::optional<int> min_piece_decomposition(const Word& w, const std::vector<Word>& piece_set);

enum class RelatorClause { kClause1, kClause2, kFail };

struct RelatorClassification {
  Word relator;
  RelatorClause clause = RelatorClause::kFail;
  std::optional<int> min_pieces;  // nullopt: no decomposition exists
  bool vacuous = false;           // piece clauses held for lack of a decomposition
  bool pair_condition = false;    // for all R',R'': one of RR', R'R'', R''R freely reduced
};

struct PresentationClassification {
  bool v6 = false;
  bool vprime6 = false;
  int max_piece_length = 0;  // 0 when there are no pieces
  std::vector<Word> piece_set;
  std::vector<RelatorClassification> per_relator;
};

struct ClassifyPresentationOptions {
  /// Quantifier scope for the clause-1 pair condition. The default ranges
  /// over all ordered pairs (R', R'') including repeats and R itself; the
  /// alternative restricts to pairs of relators distinct from R and from
  /// each other.
  enum class PairScope { kAllOrderedPairs, kDistinctOnly };
  PairScope pair_scope = PairScope::kAllOrderedPairs;
};

PresentationClassification classify_presentation(const Presentation& p,
                                                 const ClassifyPresentationOptions& opts = {});

/// One generator letter per unoriented edge, attached to a chosen dart; the
/// reversed dart reads the inverse letter. Index 0 of the table is unused
/// and 0 entries mean "unlabelled".
struct DiagramLabelling {
  std::vector<Letter> letter_of_dart;

  static DiagramLabelling empty(const CombinatorialMap& m);
  void set(const CombinatorialMap& m, DartId d, Letter x);
  Letter at(DartId d) const { return letter_of_dart.at(static_cast<size_t>(d)); }
  bool complete(const CombinatorialMap& m) const;
};

/// Word read along a dart path.
Word read_path(const CombinatorialMap& m, const DiagramLabelling& l, std::span<const DartId> path);

struct RegionDiagnostic {
  RegionId region = 0;
  Word word;                   // boundary cycle word from the minimal dart
  bool matches_relator = false;
};

struct DiagramVerdict {
  bool valid = false;          // every region reads a relator (+ boundary match if requested)
  bool regions_ok = false;
  std::optional<bool> boundary_matched;  // set when a boundary word was supplied
  bool reduced = false;        // no mirror pair of regions across a shared edge
  std::vector<RegionDiagnostic> regions;
};

/// Checks that every region's boundary cycle reads a word of the symmetric
/// closure of p's relators, and optionally that some boundary cycle of the
/// map (any basepoint, either direction) reads `boundary_word` verbatim.
/// Throws kUnlabelledEdge when the labelling is incomplete.
DiagramVerdict validate_diagram(const CombinatorialMap& m, const DiagramLabelling& l,
                                const Presentation& p,
                                const std::optional<Word>& boundary_word = std::nullopt);

/// A labelled diagram is reduced when no two regions form a mirror pair
/// across a shared edge: for a dart d with bounded faces on both sides,
/// reading one region from d and the other from the reversed dart never
/// gives words whose tails after the shared letter are mutually inverse.
bool is_reduced_diagram(const CombinatorialMap& m, const DiagramLabelling& l);

}  // namespace vkmap
