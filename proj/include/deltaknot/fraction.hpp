#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "deltaknot/word.hpp"

namespace dk {

/// Overflow-checked integer helpers; all throw std::overflow_error.
Entry checked_add(Entry a, Entry b);
Entry checked_mul(Entry a, Entry b);

/// Positive representative of a modulo m (m > 0).
Entry mod_floor(Entry a, Entry m);

/// Inverse of a modulo m; requires gcd(a, m) = 1 and m >= 2.
Entry inverse_mod(Entry a, Entry m);

/// Exact value numerator/denominator of the continued fraction
/// a1 + 1/(a2 + 1/(... + 1/an)). denominator == 0 encodes infinity.
struct RawFraction {
  Entry numerator = 1;
  Entry denominator = 0;
};

RawFraction continued_fraction(const ConwayWord& word);

/// Schubert's normalized pair S(p, q).
///
/// (1, 0) is the unknot, (0, 1) the two-component unlink; otherwise
/// 0 <= q < p and gcd(p, q) = 1. Odd p is a knot, even p a 2-component link.
struct SchubertPair {
  Entry p = 1;
  Entry q = 0;

  bool is_knot() const noexcept { return p % 2 == 1; }
  bool is_unknot() const noexcept { return p == 1; }

  friend bool operator==(const SchubertPair&, const SchubertPair&) = default;
  friend auto operator<=>(const SchubertPair&, const SchubertPair&) = default;
};

SchubertPair normalize_fraction(Entry numerator, Entry denominator);
SchubertPair evaluate_fraction(const ConwayWord& word);

/// {q, q^-1 mod p} in ascending order.
std::array<Entry, 2> q_orbit(const SchubertPair& pair);

/// Canonical representative of the equivalence class: (p, min(q, q^-1)).
SchubertPair canonical(const SchubertPair& pair);
/// Canonical representative up to mirror image: minimum over {±q, ±q^-1}.
SchubertPair canonical_up_to_mirror(const SchubertPair& pair);
SchubertPair mirror_pair(const SchubertPair& pair);
bool is_amphichiral(const SchubertPair& pair);

enum class Verdict { Same, Mirror, Distinct };

std::string to_string(Verdict v);

Verdict equivalent(const SchubertPair& a, const SchubertPair& b);
Verdict equivalent(const ConwayWord& a, const ConwayWord& b);

/// Negates every entry.
ConwayWord mirror(const ConwayWord& word);

/// Half-turn of the 4-plat. Odd length: entries reversed. Even length:
/// reversed and negated, because the handedness convention is indexed by
/// position parity and a half-turn swaps the parity of every band when n is
/// even. Always lands in the same class.
ConwayWord reverse(const ConwayWord& word);

/// Plain order reversal. Same class for odd n; for even n the class is
/// mirrored (q q' = -1 mod p).
ConwayWord reverse_entries(const ConwayWord& word);

}  // namespace dk
