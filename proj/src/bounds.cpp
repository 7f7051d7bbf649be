#include "deltaknot/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "deltaknot/family.hpp"
#include "deltaknot/invariants.hpp"
#include "deltaknot/rewrite.hpp"

namespace dk {

namespace {

bool positive_even(Entry a) { return a > 0 && a % 2 == 0; }
bool positive_odd(Entry a) { return a > 0 && a % 2 != 0; }
Entry abs_entry(Entry a) { return a < 0 ? -a : a; }

Entry exact_div(Entry numerator, Entry denominator) {
  if (numerator % denominator != 0) throw std::logic_error("closed form is not an integer");
  return numerator / denominator;
}

/// The word, its mirror, its half-turn and the mirrored half-turn, in that order.
std::vector<ConwayWord> symmetric_variants(const ConwayWord& w) {
  return {w, mirror(w), reverse(w), mirror(reverse(w))};
}

std::optional<ClosedUDelta> closed_on_literal(const ConwayWord& w) {
  const std::size_t n = w.size();
  if (n == 0) return ClosedUDelta{0, "trivial", w};
  if (n == 1) {
    if (w[0] % 2 == 0) return std::nullopt;
    return ClosedUDelta{a2_torus2(w[0]).value, "torus-2", w};
  }
  if (n == 2 && positive_even(w[0]) && w[1] > 0) {
    const Entry v = w[1] % 2 == 0 ? exact_div(checked_mul(w[0], w[1]), 4)
                                  : exact_div(checked_mul(w[0], w[0] + 2 * w[1]), 8);
    return ClosedUDelta{v, "two-twist", w};
  }
  if (auto a2 = a2_closed(w)) {
    if (a2->shape == ClosedShape::EvenTwist) return ClosedUDelta{-a2->a2.value, "even-twist", w};
    if (a2->shape == ClosedShape::EvenTwistOddEnd) {
      return ClosedUDelta{a2->a2.value, "even-twist-odd-end", w};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ClosedUDelta> u_delta_closed(const ConwayWord& word) {
  for (const auto& source : {word, normalize(word)}) {
    for (const auto& v : symmetric_variants(source)) {
      if (auto c = closed_on_literal(v)) return c;
    }
  }
  return std::nullopt;
}

Entry torus_u_delta(Entry p, Entry q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) {
    throw std::invalid_argument("torus_u_delta: need coprime p, q >= 1, got (" + std::to_string(p) +
                                "," + std::to_string(q) + ")");
  }
  return exact_div(checked_mul(checked_mul(p, p) - 1, checked_mul(q, q) - 1), 24);
}

Entry v_delta_upper(const ConwayWord& w) {
  if (w.size() != 3 || !positive_even(w[0]) || !positive_odd(w[1]) || !positive_odd(w[2])) {
    throw std::invalid_argument("v_delta_upper: expected C(even, odd, odd) with positive entries, got " +
                                to_string(w));
  }
  const Entry num = checked_add(checked_mul(2 * w[0], w[1] + w[2]), checked_mul(w[2], w[2]) - 8 * w[2] + 7);
  return exact_div(num, 8);
}

std::optional<Entry> v_delta_any(const ConwayWord& word) {
  for (const auto& v : symmetric_variants(word)) {
    if (v.size() == 3 && positive_even(v[0]) && positive_odd(v[1]) && positive_odd(v[2])) {
      return v_delta_upper(v);
    }
  }
  return std::nullopt;
}

Entry lower_bound(const ConwayWord& word) {
  const SchubertPair pair = evaluate_fraction(word);
  if (!pair.is_knot()) throw std::invalid_argument("lower_bound: " + to_string(word) + " is a link");
  if (pair.is_unknot()) return 0;
  const Entry a2 = abs_entry(a2_skein(word).value);
  return a2 >= 1 ? a2 : 2;
}

void BoundCollector::lower(Entry value, std::string tag) { lowers_.push_back({value, std::move(tag), {}}); }

void BoundCollector::upper(Entry value, std::string tag, std::optional<MoveSequence> certificate) {
  uppers_.push_back({value, std::move(tag), std::move(certificate)});
}

DeltaBoundReport BoundCollector::finish(Entry parity_reference) {
  DeltaBoundReport r;
  const auto odd = [&](Entry v) { return (v - parity_reference) % 2 != 0; };
  for (const auto& c : lowers_) r.lower = std::max(r.lower, c.value);
  for (const auto& c : lowers_) {
    if (c.value == r.lower) r.lower_provenance.push_back(c.tag);
  }
  if (odd(r.lower)) {
    ++r.lower;
    r.lower_provenance.push_back("parity");
  }
  if (!uppers_.empty()) {
    Entry best = uppers_.front().value;
    for (const auto& c : uppers_) best = std::min(best, c.value);
    for (const auto& c : uppers_) {
      if (c.value != best) continue;
      if (std::find(r.upper_provenance.begin(), r.upper_provenance.end(), c.tag) == r.upper_provenance.end()) {
        r.upper_provenance.push_back(c.tag);
      }
      if (!r.certificate && c.certificate) r.certificate = c.certificate;
    }
    if (odd(best)) {
      --best;
      r.upper_provenance.push_back("parity");
    }
    r.upper = best;
  }
  if (r.upper && r.lower > *r.upper) {
    r.conflicts.push_back("lower bound " + std::to_string(r.lower) + " exceeds upper bound " +
                          std::to_string(*r.upper));
  }
  r.exact = r.upper && r.lower == *r.upper;
  return r;
}

std::optional<Entry> three_m_parameter(const ConwayWord& word) {
  for (const auto& v : symmetric_variants(word)) {
    if (v.size() == 5 && v[0] == 3 && positive_even(v[1]) && v[2] == 2 && v[3] == 1 && v[4] == 2) {
      return v[1];
    }
  }
  return std::nullopt;
}

std::optional<AssertedValue> asserted_u_delta(const ConwayWord& word) {
  const SchubertPair pair = evaluate_fraction(word);
  if (!pair.is_knot() || pair.is_unknot()) return std::nullopt;
  const CatalogMatch match = catalog_lookup(pair);
  if (match.status == CatalogMatch::Status::Found &&
      match.identity->asserted_u_delta.kind != AssertedValue::Kind::Unknown) {
    AssertedValue v = match.identity->asserted_u_delta;
    v.citation = match.identity->name + ": " + v.citation;
    return v;
  }
  if (three_m_parameter(word)) {
    return AssertedValue{AssertedValue::Kind::Exact, {2},
                         "published worked example: C(3,m,2,1,2), m positive even, is one Delta-move from 3_1"};
  }
  for (const auto& v : symmetric_variants(word)) {
    if (match_family(v)) {
      return AssertedValue{AssertedValue::Kind::Exact, {1},
                           "published theorem: nontrivial members of the Delta-one family"};
    }
  }
  return std::nullopt;
}

DeltaBoundReport bound_report(const ConwayWord& word, const SearchOptions& options) {
  const SchubertPair pair = evaluate_fraction(word);
  if (!pair.is_knot()) throw std::invalid_argument("bound_report: " + to_string(word) + " is a link");
  BoundCollector bounds;
  if (pair.is_unknot()) {
    bounds.lower(0, "trivial");
    bounds.upper(0, "trivial", MoveSequence{});
    return bounds.finish(0);
  }
  const Entry a2 = a2_skein(word).value;
  Entry computed_lower = lower_bound(word);
  std::optional<Entry> computed_upper;
  const auto note_upper = [&](Entry v) { computed_upper = computed_upper ? std::min(*computed_upper, v) : v; };
  bounds.lower(computed_lower, "a2-parity");

  if (auto closed = u_delta_closed(word)) {
    bounds.lower(closed->value, "closed-form:" + closed->tag);
    bounds.upper(closed->value, "closed-form:" + closed->tag);
    computed_lower = std::max(computed_lower, closed->value);
    note_upper(closed->value);
  }
  if (auto v = v_delta_any(word)) {
    bounds.upper(*v, "v-delta");
    note_upper(*v);
  }
  if (options.budget > 0) {
    SearchOptions o = options;
    if (computed_upper) o.budget = std::min(o.budget, *computed_upper);
    if (auto found = search_upper_bound(word, o)) {
      bounds.upper(found->cost, "search", found->certificate);
      note_upper(found->cost);
    }
  }

  const auto asserted = asserted_u_delta(word);
  if (asserted) {
    bounds.lower(asserted->low(), "asserted");
    bounds.upper(asserted->high(), "asserted");
  }
  DeltaBoundReport report = bounds.finish(a2);
  report.asserted = asserted;
  if (asserted) {
    if (computed_lower > asserted->high()) {
      report.conflicts.push_back("computed lower bound " + std::to_string(computed_lower) +
                                 " exceeds published value " + std::to_string(asserted->high()));
    }
    if (computed_upper && *computed_upper < asserted->low()) {
      report.conflicts.push_back("computed upper bound " + std::to_string(*computed_upper) +
                                 " is below published value " + std::to_string(asserted->low()));
    }
  }
  return report;
}

}  // namespace dk
