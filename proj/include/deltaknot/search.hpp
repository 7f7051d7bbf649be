#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deltaknot/fraction.hpp"
#include "deltaknot/word.hpp"

namespace dk {

/// Bounds on the move search. The representative bounds trade completeness
/// for termination; they are reported alongside results.
struct SearchOptions {
  Entry budget = 16;
  std::size_t max_representatives = 64;
  /// Representatives keep |entry| <= entry_factor * p (at least min_entry_bound).
  Entry entry_factor = 2;
  Entry min_entry_bound = 8;
  std::size_t max_word_length = 16;
  /// Guard on the number of classes created; hitting it marks the search
  /// truncated.
  std::size_t max_classes = 200000;
  /// A* with |a2(X) - a2(target)| as the heuristic. Off gives plain
  /// uniform-cost search.
  bool use_heuristic = true;
};

enum class End { Front, Back };

/// What a certificate step does.
///
/// Technique: the crossing-exchange move. The end entry (anchor, even and
/// nonzero) stays; its neighbour moves by delta = +-2. Costs |anchor| / 2.
/// Rewrite: a class-preserving change of representative, cost 0.
struct Move {
  enum class Kind { Technique, Rewrite };
  Kind kind = Kind::Rewrite;
  End end = End::Front;
  Entry anchor = 0;
  Entry delta = 0;
  std::string rule;

  friend bool operator==(const Move&, const Move&) = default;
};

std::string describe(const Move& move);

struct MoveStep {
  ConwayWord before;
  Move move;
  Entry cost = 0;
  ConwayWord after;

  friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

struct MoveSequence {
  std::vector<MoveStep> steps;
  Entry total_cost = 0;

  friend bool operator==(const MoveSequence&, const MoveSequence&) = default;
};

struct SearchStats {
  std::size_t classes_created = 0;
  std::size_t expansions = 0;
  bool truncated = false;
};

struct SearchResult {
  Entry cost = 0;
  MoveSequence certificate;
  SearchStats stats;
};

/// The technique move applied at one end; nullopt when the end entry is odd or
/// zero, or the word is shorter than 2.
std::optional<ConwayWord> apply_technique(const ConwayWord& word, End end, Entry delta);

struct TechniqueEdge {
  ConwayWord after;
  Move move;
  Entry cost;
};

/// All technique moves available on a literal word.
std::vector<TechniqueEdge> technique_moves(const ConwayWord& word);

/// Words of the class of `pair` used as move sources: continued-fraction
/// expansions (floor, ceiling, nearest-even) of p/r for r in the q-orbit and
/// r - p, their last-entry unit splits and half-turns. The unknot gets C()
/// and C(2k, 0).
std::vector<ConwayWord> class_representatives(const SchubertPair& pair, const SearchOptions& options);

/// Cheapest move sequence from `word` to the unknot within options.budget.
std::optional<SearchResult> search_upper_bound(const ConwayWord& word, const SearchOptions& options,
                                               SearchStats* stats = nullptr);

/// Cheapest move sequence from `from` to the class of `to`.
std::optional<SearchResult> search_distance(const ConwayWord& from, const ConwayWord& to,
                                            const SearchOptions& options,
                                            SearchStats* stats = nullptr);

struct ReplayReport {
  bool ok = false;
  Entry total_cost = 0;
  std::string failure;
};

/// Re-applies every step: technique steps must reproduce `after` with the
/// stated cost, rewrite steps must stay in the same class at cost 0, steps
/// must chain, and the last word must lie in `target`'s class.
ReplayReport replay(const MoveSequence& sequence, const ConwayWord& start, const SchubertPair& target);

}  // namespace dk
