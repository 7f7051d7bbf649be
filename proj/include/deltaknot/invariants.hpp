#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "deltaknot/rewrite.hpp"
#include "deltaknot/word.hpp"

namespace dk {

/// Second coefficient of the Conway polynomial.
struct A2Value {
  Entry value = 0;
  friend bool operator==(const A2Value&, const A2Value&) = default;
};

/// One skein step: a crossing of `band` in `before` is exchanged, giving
/// `after` (that band's entry moves two toward zero). crossing_sign is the
/// sign of the exchanged crossing in `before`; lk is the linking number of the
/// oriented smoothing there. a2(before) - a2(after) = crossing_sign * lk.
struct SkeinStep {
  ConwayWord before;
  std::size_t band = 0;
  int crossing_sign = 0;
  Entry lk = 0;
  ConwayWord after;
};

struct SkeinTrace {
  /// Identity rewrites and skein steps in the order they were applied.
  std::vector<std::variant<RewriteStep, SkeinStep>> steps;
  /// Terminal word: C() or C(m) with m odd.
  ConwayWord base;
  Entry base_value = 0;
  A2Value a2;
};

/// a2 by the skein recursion a2(k+) - a2(k-) = lk(k0) on twist regions.
///
/// The word is normalized (no 0 or +-1 entries), then a crossing of the second
/// band is exchanged, repeatedly, until only C() or C(m) remain. For positive
/// even words this is exactly the chain that reduces a2, then a4 after merging
/// a1+a3, and so on. Throws std::invalid_argument for 2-component links.
A2Value a2_skein(const ConwayWord& word);
SkeinTrace a2_skein_trace(const ConwayWord& word);

/// (m^2 - 1) / 8 for odd m; throws for even m.
A2Value a2_torus2(Entry m);

enum class ClosedShape {
  EvenTwist,       // all entries positive even, n even
  EvenTwistOddEnd, // positive even entries, last positive odd (any n >= 1)
  EvenOddOdd,      // (positive even, positive odd, positive odd)
};

std::string to_string(ClosedShape shape);

struct ClosedA2 {
  A2Value a2;
  ClosedShape shape;
};

/// Closed-form a2 for the three shapes above, evaluated on the literal word.
/// nullopt when the word has none of those shapes.
std::optional<ClosedA2> a2_closed(const ConwayWord& word);

/// sum_{j=1}^{m} sum_{i<=j} a_{2i-1} a_{2j}, with m = floor(n/2) pairs taken
/// from the word (1-based indices). Exposed for the distance formulas.
Entry nested_pair_sum(const ConwayWord& word, std::size_t pairs);

}  // namespace dk
