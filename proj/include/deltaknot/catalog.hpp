#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deltaknot/fraction.hpp"
#include "deltaknot/word.hpp"

namespace dk {

/// A published value of the Delta-unknotting number.
struct AssertedValue {
  enum class Kind { Exact, Interval, Unknown };
  Kind kind = Kind::Unknown;
  /// One value for Exact, the candidates (same parity, ascending) for Interval.
  std::vector<Entry> values;
  std::string citation;

  Entry low() const { return values.front(); }
  Entry high() const { return values.back(); }

  friend bool operator==(const AssertedValue&, const AssertedValue&) = default;
};

std::string to_string(AssertedValue::Kind kind);

struct KnotIdentity {
  std::string name;
  /// Word as printed (or the standard table notation when none is printed).
  /// Absent for knots that are not two-bridge.
  std::optional<ConwayWord> source_word;
  std::optional<SchubertPair> fraction;
  AssertedValue asserted_u_delta;
  /// Groups the entry belongs to, e.g. "delta-one", "two-twist", "open".
  std::vector<std::string> groups;
};

/// The built-in catalog of named knots, in a fixed order.
std::span<const KnotIdentity> catalog();

const KnotIdentity* find_by_name(std::string_view name);

struct CatalogMatch {
  enum class Status { Found, NotFound, NotAKnot };
  Status status = Status::NotFound;
  const KnotIdentity* identity = nullptr;
  /// Same when the pair is the listed chirality, Mirror for its mirror image.
  Verdict chirality = Verdict::Distinct;
};

CatalogMatch catalog_lookup(const SchubertPair& pair);

/// Calibration of the fraction convention: C(3), C(2,2), C(5,1,2) and every
/// catalog word resolve to their own names, and the identities C(x,0) = O,
/// C(x,1) = C(x+1), C(a,-1,b) = C(a-1,1-b) hold. Returns the failures.
std::vector<std::string> check_convention();

}  // namespace dk
