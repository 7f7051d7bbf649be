#include "deltaknot/parallel.hpp"

#include "deltaknot/fraction.hpp"
#include "deltaknot/invariants.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dk {

namespace {

std::optional<Entry> a2_or_none(const ConwayWord& w) {
  const SchubertPair pair = evaluate_fraction(w);
  if (!pair.is_knot()) return std::nullopt;
  return pair.is_unknot() ? 0 : a2_skein(w).value;
}

std::optional<SearchResult> search_or_none(const ConwayWord& w, const SearchOptions& options) {
  if (!evaluate_fraction(w).is_knot()) return std::nullopt;
  return search_upper_bound(w, options);
}

}  // namespace

std::vector<std::optional<Entry>> a2_batch_serial(const std::vector<ConwayWord>& words) {
  std::vector<std::optional<Entry>> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(a2_or_none(w));
  return out;
}

std::vector<std::optional<Entry>> a2_batch(const std::vector<ConwayWord>& words) {
  std::vector<std::optional<Entry>> out(words.size());
  const auto n = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a2_or_none(words[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<std::optional<SearchResult>> search_batch_serial(const std::vector<ConwayWord>& words,
                                                             const SearchOptions& options) {
  std::vector<std::optional<SearchResult>> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(search_or_none(w, options));
  return out;
}

std::vector<std::optional<SearchResult>> search_batch(const std::vector<ConwayWord>& words,
                                                      const SearchOptions& options) {
  std::vector<std::optional<SearchResult>> out(words.size());
  const auto n = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = search_or_none(words[static_cast<std::size_t>(i)], options);
  }
  return out;
}

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace dk
