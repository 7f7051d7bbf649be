#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dk {

using Entry = std::int64_t;

/// A Conway normal-form word C(a1, ..., an).
///
/// Entries may be any integer, including zero and negatives; the empty word is
/// the trivial diagram. Odd positions (1-based) count right-handed half-twists
/// as positive, even positions count left-handed half-twists as positive.
class ConwayWord {
 public:
  ConwayWord() = default;
  ConwayWord(std::initializer_list<Entry> entries) : entries_(entries) {}
  explicit ConwayWord(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  Entry operator[](std::size_t i) const { return entries_[i]; }
  Entry& operator[](std::size_t i) { return entries_[i]; }

  Entry front() const { return entries_.front(); }
  Entry back() const { return entries_.back(); }

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::vector<Entry>& mutable_entries() noexcept { return entries_; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  /// Sum of |a_i|, the number of crossings in the diagram.
  Entry crossing_count() const;
  /// Largest |a_i|, zero for the empty word.
  Entry max_magnitude() const;

  friend bool operator==(const ConwayWord&, const ConwayWord&) = default;
  friend auto operator<=>(const ConwayWord& a, const ConwayWord& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<Entry> entries_;
};

/// Renders as C(a1,a2,...,an); the empty word renders as C().
std::string to_string(const ConwayWord& word);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses `C(a1,...,an)` or a bare comma list `a1,...,an`. Whitespace is
/// ignored. Throws ParseError carrying the 0-based offset of the offending
/// character.
ConwayWord parse_word(std::string_view text);

/// Formats a ParseError against its input with a caret under the position.
std::string annotate_parse_error(std::string_view text, const ParseError& error);

}  // namespace dk
