#include "deltaknot/distance.hpp"

#include <algorithm>
#include <stdexcept>

#include "deltaknot/invariants.hpp"

namespace dk {

namespace {

bool positive_even(Entry a) { return a > 0 && a % 2 == 0; }
bool positive_odd(Entry a) { return a > 0 && a % 2 != 0; }
Entry abs_entry(Entry a) { return a < 0 ? -a : a; }

bool two_twist_even(const ConwayWord& w) {
  return w.size() == 2 && positive_even(w[0]) && positive_even(w[1]);
}

bool comparable(const ConwayWord& a, const ConwayWord& b) {
  return (a[0] >= b[0] && a[1] >= b[1]) || (a[0] <= b[0] && a[1] <= b[1]);
}

/// m for C(2, m, 5), m positive odd, read on the word or its half-turn.
std::optional<Entry> two_m_five(const ConwayWord& w) {
  for (const auto& v : {w, reverse(w)}) {
    if (v.size() == 3 && v[0] == 2 && positive_odd(v[1]) && v[2] == 5) return v[1];
  }
  return std::nullopt;
}

/// Same-chirality match of C(3, m, 2, 1, 2).
bool three_m_same_chirality(const ConwayWord& w) {
  for (const auto& v : {w, reverse(w)}) {
    if (v.size() == 5 && v[0] == 3 && positive_even(v[1]) && v[2] == 2 && v[3] == 1 && v[4] == 2) return true;
  }
  return false;
}

Entry a2_of(const SchubertPair& pair, const ConwayWord& w) { return pair.is_unknot() ? 0 : a2_skein(w).value; }

bool only_asserted(const DeltaBoundReport& r) {
  return std::find(r.upper_provenance.begin(), r.upper_provenance.end(), "asserted") != r.upper_provenance.end() &&
         r.upper_provenance.size() == 1;
}

}  // namespace

Entry dg_closed_c2(const ConwayWord& w1, const ConwayWord& w2) {
  if (!two_twist_even(w1) || !two_twist_even(w2)) {
    throw std::invalid_argument("dg_closed_c2: expected C(even, even) with positive entries, got " +
                                to_string(w1) + " and " + to_string(w2));
  }
  if (!comparable(w1, w2)) {
    throw std::invalid_argument("dg_closed_c2: " + to_string(w1) + " and " + to_string(w2) +
                                " are not componentwise comparable");
  }
  return abs_entry(checked_mul(w1[0], w1[1]) - checked_mul(w2[0], w2[1])) / 4;
}

DeltaBoundReport dg_bounds(const ConwayWord& first, const ConwayWord& second, const SearchOptions& options) {
  SchubertPair p1 = evaluate_fraction(first);
  SchubertPair p2 = evaluate_fraction(second);
  if (!p1.is_knot() || !p2.is_knot()) {
    throw std::invalid_argument("dg_bounds: both words must be knots");
  }
  ConwayWord w1 = first;
  ConwayWord w2 = second;
  if (std::pair(canonical(p2), w2) < std::pair(canonical(p1), w1)) {
    std::swap(w1, w2);
    std::swap(p1, p2);
  }

  BoundCollector bounds;
  if (canonical(p1) == canonical(p2)) {
    bounds.lower(0, "same-class");
    bounds.upper(0, "same-class", MoveSequence{});
    return bounds.finish(0);
  }

  const Entry a2_1 = a2_of(p1, w1);
  const Entry a2_2 = a2_of(p2, w2);
  const Entry diff = abs_entry(a2_1 - a2_2);
  bounds.lower(std::max<Entry>(diff, 1), "a2-parity");
  Entry lower = std::max<Entry>(diff, 1);
  if ((lower - diff) % 2 != 0) ++lower;
  std::optional<Entry> upper;
  const auto offer = [&](Entry v, const std::string& tag) {
    bounds.upper(v, tag);
    upper = upper ? std::min(*upper, v) : v;
  };

  if (two_twist_even(w1) && two_twist_even(w2)) {
    if (comparable(w1, w2)) {
      const Entry d = dg_closed_c2(w1, w2);
      bounds.lower(d, "closed-form:two-twist-distance");
      lower = std::max(lower, d);
      offer(d, "closed-form:two-twist-distance");
    } else {
      const ConwayWord meet{std::min(w1[0], w2[0]), std::min(w1[1], w2[1])};
      offer(dg_closed_c2(w1, meet) + dg_closed_c2(meet, w2), "triangle:two-twist-meet");
    }
  }
  if (auto m1 = two_m_five(w1)) {
    if (auto m2 = two_m_five(w2)) offer(abs_entry(*m1 - *m2) / 2, "closed-form:C(2,m,5)");
  }
  {
    const bool t1 = three_m_same_chirality(w1);
    const bool t2 = three_m_same_chirality(w2);
    const bool trefoil1 = canonical(p1) == canonical(evaluate_fraction(ConwayWord{3}));
    const bool trefoil2 = canonical(p2) == canonical(evaluate_fraction(ConwayWord{3}));
    if (t1 && t2) offer(2, "asserted:via-3_1");
    if ((t1 && trefoil2) || (t2 && trefoil1)) offer(1, "asserted:one-move-to-3_1");
  }

  // Already exact: the unknot triangle and the search cannot improve on it.
  if (!upper || *upper > lower) {
    const DeltaBoundReport u1 = bound_report(w1, options);
    const DeltaBoundReport u2 = bound_report(w2, options);
    if (u1.upper && u2.upper) {
      offer(*u1.upper + *u2.upper,
            only_asserted(u1) || only_asserted(u2) ? "triangle:unknot(asserted)" : "triangle:unknot");
    }
  }

  if (options.budget > 0 && (!upper || lower < *upper)) {
    SearchOptions o = options;
    if (upper) o.budget = std::min(o.budget, *upper - 1);
    if (o.budget >= lower) {
      if (auto found = search_distance(w1, w2, o)) bounds.upper(found->cost, "search", found->certificate);
    }
  }
  return bounds.finish(a2_1 - a2_2);
}

}  // namespace dk
