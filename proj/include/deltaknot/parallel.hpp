#pragma once

#include <optional>
#include <vector>

#include "deltaknot/search.hpp"
#include "deltaknot/word.hpp"

namespace dk {

/// a2 of each word (nullopt for links), computed in parallel when OpenMP is
/// available. Order matches the input.
std::vector<std::optional<Entry>> a2_batch(const std::vector<ConwayWord>& words);
std::vector<std::optional<Entry>> a2_batch_serial(const std::vector<ConwayWord>& words);

/// search_upper_bound on each word (nullopt for links); each query owns its
/// search state.
std::vector<std::optional<SearchResult>> search_batch(const std::vector<ConwayWord>& words,
                                                      const SearchOptions& options);
std::vector<std::optional<SearchResult>> search_batch_serial(const std::vector<ConwayWord>& words,
                                                             const SearchOptions& options);

/// Thread count the parallel kernels will use (1 without OpenMP).
int parallel_threads();

}  // namespace dk
