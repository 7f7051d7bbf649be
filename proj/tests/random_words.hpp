#pragma once

#include <random>
#include <vector>

#include "deltaknot/word.hpp"

namespace dk::testing {

/// Fixed-seed words with n in [0, max_len] and entries in [lo, hi].
inline std::vector<ConwayWord> random_words(std::size_t count, std::size_t max_len, Entry lo, Entry hi,
                                            unsigned seed = 20240611) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Entry> entry(lo, hi);
  std::vector<ConwayWord> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Entry> v(len(rng));
    for (auto& a : v) a = entry(rng);
    out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace dk::testing
