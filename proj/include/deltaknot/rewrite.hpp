#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaknot/word.hpp"

namespace dk {

/// Class-preserving word identities. Each returns nullopt when the identity
/// does not apply at the requested place.
namespace rewrite {

/// C(..., x, 0, y, ...) -> C(..., x+y, ...) for an interior zero at index i.
std::optional<ConwayWord> merge_zero(const ConwayWord& w, std::size_t i);
/// C(0, y, rest) -> C(rest).
std::optional<ConwayWord> drop_leading_zero(const ConwayWord& w);
/// C(rest, y, 0) -> C(rest).
std::optional<ConwayWord> drop_trailing_zero(const ConwayWord& w);
/// C(..., x, +-1) -> C(..., x+-1).
std::optional<ConwayWord> absorb_trailing_unit(const ConwayWord& w);
/// Trailing-unit absorption applied through the 4-plat half-turn.
std::optional<ConwayWord> absorb_leading_unit(const ConwayWord& w);
/// C(..., x, 1, y, r...) -> C(..., x+1, -(y+1), -r...) and
/// C(..., x, -1, y, r...) -> C(..., x-1, 1-y, -r...) for an interior unit at i.
std::optional<ConwayWord> expand_unit(const ConwayWord& w, std::size_t i);
/// C(+-1) -> C().
std::optional<ConwayWord> drop_single_unit(const ConwayWord& w);

}  // namespace rewrite

struct RewriteStep {
  ConwayWord before;
  ConwayWord after;
  std::string rule;
};

/// Applies the identities above until no entry is 0 or +-1, except for the
/// terminal forms C(), C(0) and C(m). Every step shortens the word.
ConwayWord normalize(const ConwayWord& word, std::vector<RewriteStep>* trace = nullptr);

}  // namespace dk
