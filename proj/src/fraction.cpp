#include "deltaknot/fraction.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>

namespace dk {

Entry checked_add(Entry a, Entry b) {
  Entry r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

Entry checked_mul(Entry a, Entry b) {
  Entry r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Entry mod_floor(Entry a, Entry m) {
  Entry r = a % m;
  return r < 0 ? r + m : r;
}

Entry inverse_mod(Entry a, Entry m) {
  if (m < 2) throw std::invalid_argument("inverse_mod: modulus must be at least 2");
  // Extended Euclid on (a mod m, m).
  Entry r0 = m, r1 = mod_floor(a, m);
  Entry t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Entry quot = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - quot * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - quot * t1};
  }
  if (r0 != 1) throw std::invalid_argument("inverse_mod: arguments are not coprime");
  return mod_floor(t0, m);
}

RawFraction continued_fraction(const ConwayWord& word) {
  // Product of [[a_i, 1], [1, 0]]; the value is M00 / M10.
  Entry m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (Entry a : word) {
    const Entry n00 = checked_add(checked_mul(m00, a), m01);
    const Entry n10 = checked_add(checked_mul(m10, a), m11);
    m01 = m00;
    m11 = m10;
    m00 = n00;
    m10 = n10;
  }
  return {m00, m10};
}

SchubertPair normalize_fraction(Entry numerator, Entry denominator) {
  if (numerator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (numerator == 0) return {0, 1};
  if (numerator == 1) return {1, 0};
  if (std::gcd(numerator, denominator) != 1) {
    throw std::invalid_argument("normalize_fraction: numerator and denominator are not coprime");
  }
  return {numerator, mod_floor(denominator, numerator)};
}

SchubertPair evaluate_fraction(const ConwayWord& word) {
  const RawFraction f = continued_fraction(word);
  return normalize_fraction(f.numerator, f.denominator);
}

std::array<Entry, 2> q_orbit(const SchubertPair& pair) {
  if (pair.p < 2) return {pair.q, pair.q};
  const Entry inv = inverse_mod(pair.q, pair.p);
  return {std::min(pair.q, inv), std::max(pair.q, inv)};
}

SchubertPair canonical(const SchubertPair& pair) {
  return {pair.p, q_orbit(pair)[0]};
}

SchubertPair mirror_pair(const SchubertPair& pair) {
  if (pair.p < 2) return pair;
  return {pair.p, mod_floor(-pair.q, pair.p)};
}

SchubertPair canonical_up_to_mirror(const SchubertPair& pair) {
  return std::min(canonical(pair), canonical(mirror_pair(pair)));
}

bool is_amphichiral(const SchubertPair& pair) {
  return canonical(pair) == canonical(mirror_pair(pair));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Same: return "same";
    case Verdict::Mirror: return "mirror";
    case Verdict::Distinct: return "distinct";
  }
  return "?";
}

Verdict equivalent(const SchubertPair& a, const SchubertPair& b) {
  if (a.p != b.p) return Verdict::Distinct;
  if (canonical(a) == canonical(b)) return Verdict::Same;
  if (canonical(a) == canonical(mirror_pair(b))) return Verdict::Mirror;
  return Verdict::Distinct;
}

Verdict equivalent(const ConwayWord& a, const ConwayWord& b) {
  return equivalent(evaluate_fraction(a), evaluate_fraction(b));
}

ConwayWord mirror(const ConwayWord& word) {
  std::vector<Entry> out(word.begin(), word.end());
  for (Entry& a : out) a = -a;
  return ConwayWord(std::move(out));
}

ConwayWord reverse_entries(const ConwayWord& word) {
  return ConwayWord(std::vector<Entry>(word.entries().rbegin(), word.entries().rend()));
}

ConwayWord reverse(const ConwayWord& word) {
  ConwayWord out = reverse_entries(word);
  return word.size() % 2 == 0 ? mirror(out) : out;
}

}  // namespace dk
