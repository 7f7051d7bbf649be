#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaknot/catalog.hpp"
#include "deltaknot/search.hpp"
#include "deltaknot/word.hpp"

namespace dk {

struct ClosedUDelta {
  Entry value = 0;
  /// "even-twist", "even-twist-odd-end", "two-twist", "torus-2".
  std::string tag;
  /// The word variant (mirror / half-turn / normalized) the formula was read on.
  ConwayWord matched;
};

/// Exact u^Delta when the word, its mirror, its half-turn or its normal form
/// has one of the closed-form shapes. nullopt otherwise.
std::optional<ClosedUDelta> u_delta_closed(const ConwayWord& word);

/// (p^2 - 1)(q^2 - 1) / 24 for the torus knot T(p, q). Throws
/// std::invalid_argument unless p, q >= 1 and gcd(p, q) = 1.
Entry torus_u_delta(Entry p, Entry q);

/// alpha1 (alpha2 + alpha3) / 4 + (alpha3^2 - 8 alpha3 + 7) / 8 for
/// C(even, odd, odd) with positive entries; throws std::invalid_argument on
/// any other literal shape.
Entry v_delta_upper(const ConwayWord& word);

/// v_delta_upper of the first variant (literal, mirror, half-turn, mirrored
/// half-turn) that has the shape.
std::optional<Entry> v_delta_any(const ConwayWord& word);

/// 0 for the unknot, |a2| when nonzero, 2 when a2 = 0. Throws for links.
Entry lower_bound(const ConwayWord& word);

struct DeltaBoundReport {
  Entry lower = 0;
  std::optional<Entry> upper;
  /// Present when a search certificate achieves `upper`.
  std::optional<MoveSequence> certificate;
  bool exact = false;
  /// Sources attaining each bound, e.g. "a2-parity", "closed-form:two-twist",
  /// "search", "parity", "asserted".
  std::vector<std::string> lower_provenance;
  std::vector<std::string> upper_provenance;
  /// Published value consulted, kept verbatim.
  std::optional<AssertedValue> asserted;
  /// Computed bounds that disagree with the published value.
  std::vector<std::string> conflicts;

  friend bool operator==(const DeltaBoundReport&, const DeltaBoundReport&) = default;
};

/// Collects lower and upper candidates and keeps the best of each.
class BoundCollector {
 public:
  void lower(Entry value, std::string tag);
  void upper(Entry value, std::string tag, std::optional<MoveSequence> certificate = std::nullopt);
  /// Rounds the upper bound down and the lower bound up to the parity of a2.
  DeltaBoundReport finish(Entry parity_reference);

 private:
  struct Candidate {
    Entry value;
    std::string tag;
    std::optional<MoveSequence> certificate;
  };
  std::vector<Candidate> lowers_;
  std::vector<Candidate> uppers_;
};

/// Published u^Delta for the class of a word: catalog entries up to mirror,
/// and the two published families.
std::optional<AssertedValue> asserted_u_delta(const ConwayWord& word);

/// m when some mirror/half-turn variant of the word is C(3, m, 2, 1, 2) with m
/// positive even.
std::optional<Entry> three_m_parameter(const ConwayWord& word);

/// All bounds on u^Delta: lower bound, closed forms, v^Delta, the published
/// store (tagged "asserted") and the move search. Throws for links.
DeltaBoundReport bound_report(const ConwayWord& word, const SearchOptions& options = {});

}  // namespace dk
