#pragma once

// Test-only oracles. Each is an independent route to a quantity the library
// computes another way; none of them calls into the code path it checks.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "deltaknot/diagram.hpp"
#include "deltaknot/word.hpp"

namespace dk::oracle {

/// Exact rational evaluated right-to-left: x = a_n, x = a_i + 1/x, with an
/// explicit infinity state. Returns (numerator, denominator), reduced.
struct Rational {
  std::int64_t num;
  std::int64_t den;
};

inline Rational evaluate_right_to_left(const ConwayWord& w) {
  if (w.empty()) return {1, 0};
  std::int64_t num = w.back(), den = 1;
  for (std::size_t k = w.size() - 1; k-- > 0;) {
    // a + 1/(num/den) = (a*num + den)/num; infinity (den=0 -> num/0) gives a.
    if (num == 0) {  // x = 0 -> a + 1/0 = infinity
      num = 1;
      den = 0;
      continue;
    }
    if (den == 0) {  // x = infinity -> a + 0
      num = w[k];
      den = 1;
      continue;
    }
    const std::int64_t n2 = w[k] * num + den;
    den = num;
    num = n2;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

/// Brute-force class test: q' lies in {q, q^-1} mod p, with inverses found by
/// scanning residues.
inline bool brute_same_class(std::int64_t p, std::int64_t q, std::int64_t q2) {
  if (p < 2) return true;
  auto m = [p](std::int64_t x) { return ((x % p) + p) % p; };
  if (m(q) == m(q2)) return true;
  for (std::int64_t r = 1; r < p; ++r) {
    if (m(r * q) == 1) return m(r) == m(q2);
  }
  return false;
}

/// Degree-2 Vassiliev invariant from the based Gauss diagram: the signed count
/// of interlaced crossing pairs (c, d) met along the knot as c-under, d-over,
/// c-over, d-under.
inline std::int64_t a2_gauss_diagram(const ConwayWord& w) {
  const PlatDiagram d(w);
  if (d.component_count() != 1) throw std::invalid_argument("a2_gauss_diagram: not a knot");
  const auto& seq = d.components().front();
  std::vector<int> first(d.crossing_count(), -1), second(d.crossing_count(), -1);
  std::vector<bool> first_over(d.crossing_count(), false);
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const auto c = seq[t].crossing;
    if (first[c] < 0) {
      first[c] = static_cast<int>(t);
      first_over[c] = seq[t].over;
    } else {
      second[c] = static_cast<int>(t);
    }
  }
  std::int64_t total = 0;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    if (first_over[c]) continue;
    for (std::size_t e = 0; e < d.crossing_count(); ++e) {
      if (!first_over[e]) continue;
      if (first[c] < first[e] && first[e] < second[c] && second[c] < second[e]) {
        total += d.sign(c) * d.sign(e);
      }
    }
  }
  return total;
}

/// (1/4) sum_{j} sum_{i<=j} a_{2i-1} a_{2j} for an even-length word, as a
/// plain double loop over 1-based indices. Returns 4x the value so callers can
/// check divisibility.
inline std::int64_t even_twist_sum_times4(const ConwayWord& w) {
  std::int64_t total = 0;
  const std::size_t m = w.size() / 2;
  for (std::size_t j = 1; j <= m; ++j) {
    for (std::size_t i = 1; i <= j; ++i) total += w[2 * i - 2] * w[2 * j - 1];
  }
  return total;
}

/// a2 of a positive-even word ending in a positive odd entry, straight from
/// the closed form: (1/4) T + (1/8)((sum of odd-position entries)^2 - 1) for
/// odd n, (1/4) T + (1/8) S^2 for even n, where T is the double sum over the
/// complete pairs. Returns 8x the value.
inline std::int64_t odd_end_a2_times8(const ConwayWord& w) {
  std::int64_t t = 0;
  const std::size_t m = w.size() / 2;
  for (std::size_t j = 1; j <= m; ++j) {
    for (std::size_t i = 1; i <= j; ++i) t += w[2 * i - 2] * w[2 * j - 1];
  }
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); i += 2) s += w[i];
  return 2 * t + s * s - (w.size() % 2 == 1 ? 1 : 0);
}

/// (p^2-1)(q^2-1)/24 by plain arithmetic.
inline std::int64_t torus_value(std::int64_t p, std::int64_t q) { return (p * p - 1) * (q * q - 1) / 24; }

}  // namespace dk::oracle
