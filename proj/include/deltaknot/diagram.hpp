#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "deltaknot/word.hpp"

namespace dk {

/// Explicit 4-plat diagram of a Conway word, traced into oriented components.
///
/// Band i (0-based) twists positions 1-2 when i is even and positions 0-1 when
/// i is odd; the plat is capped (0,1),(2,3) on top and cupped (0,1),(2,3) below
/// for odd length, (1,2),(0,3) for even length. Each component is oriented by
/// walking from its lowest port; the first component starts leaving the left
/// top cap downward at position 1, which doubles as the knot's base point.
class PlatDiagram {
 public:
  struct Visit {
    std::size_t crossing;
    bool over;
  };

  explicit PlatDiagram(const ConwayWord& word);

  const ConwayWord& word() const noexcept { return word_; }
  std::size_t crossing_count() const noexcept { return band_of_.size(); }
  std::size_t component_count() const noexcept { return components_.size(); }

  /// Crossing visits of each component in traversal order. Components made of
  /// caps only have no visits.
  const std::vector<std::vector<Visit>>& components() const noexcept { return components_; }

  /// Crossing index of the k-th crossing of band i.
  std::size_t crossing_id(std::size_t band, std::size_t k) const;
  std::size_t band_of(std::size_t crossing) const { return band_of_[crossing]; }

  /// Writhe sign of the crossing under the traced orientation.
  int sign(std::size_t crossing) const { return sign_[crossing]; }
  /// Component index of the over and under strand at a crossing.
  std::size_t over_component(std::size_t crossing) const { return over_comp_[crossing]; }
  std::size_t under_component(std::size_t crossing) const { return under_comp_[crossing]; }

 private:
  ConwayWord word_;
  std::vector<std::size_t> band_start_;
  std::vector<std::size_t> band_of_;
  std::vector<int> sign_;
  std::vector<std::size_t> over_comp_;
  std::vector<std::size_t> under_comp_;
  std::vector<std::vector<Visit>> components_;
};

/// A 2-component diagram together with how it was obtained.
///
/// Either the oriented smoothing of one crossing of a knot diagram (components
/// and orientations inherited from the knot), or a 2-component link word
/// traced directly.
struct LinkDiagram {
  ConwayWord word;
  std::optional<std::size_t> smoothed_band;
  std::optional<std::size_t> smoothed_position;
  std::size_t component_count = 0;
  /// Signs of the crossings whose two strands lie on different components.
  std::vector<int> inter_component_signs;
};

/// Oriented smoothing of the k-th crossing of band `band` in the knot word.
/// Throws std::invalid_argument if the word is not a knot or the crossing
/// does not exist.
LinkDiagram smooth(const ConwayWord& knot_word, std::size_t band, std::size_t k);
LinkDiagram smooth(const PlatDiagram& knot_diagram, std::size_t band, std::size_t k);

/// Traces a link word directly. component_count may be anything; lk rejects
/// anything but 2.
LinkDiagram trace_link(const ConwayWord& word);

/// Half the signed count of crossings between the two components.
Entry lk(const LinkDiagram& diagram);

}  // namespace dk
