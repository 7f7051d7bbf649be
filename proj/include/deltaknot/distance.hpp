#pragma once

#include "deltaknot/bounds.hpp"
#include "deltaknot/search.hpp"
#include "deltaknot/word.hpp"

namespace dk {

/// |a1 a2 - a1' a2'| / 4 for C(a1, a2), C(a1', a2') with positive even entries
/// and a1 >= a1', a2 >= a2' (or the reverse). Throws std::invalid_argument
/// for other shapes and for incomparable pairs.
Entry dg_closed_c2(const ConwayWord& w1, const ConwayWord& w2);

/// Bounds on the Delta-Gordian distance between two knots. The pair is put in
/// a fixed order first, so the result does not depend on argument order.
/// Parity is that of a2(K) - a2(K').
DeltaBoundReport dg_bounds(const ConwayWord& w1, const ConwayWord& w2, const SearchOptions& options = {});

}  // namespace dk
