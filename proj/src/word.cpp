#include "deltaknot/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>

namespace dk {

Entry ConwayWord::crossing_count() const {
  Entry total = 0;
  for (Entry a : entries_) total += a < 0 ? -a : a;
  return total;
}

Entry ConwayWord::max_magnitude() const {
  Entry best = 0;
  for (Entry a : entries_) best = std::max(best, a < 0 ? -a : a);
  return best;
}

std::string to_string(const ConwayWord& word) {
  std::string out = "C(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  out += ')';
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  Entry integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      advance();
      skip_space();
    }
    const std::size_t digits = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    if (digits == pos_) {
      throw ParseError(done() ? "expected an integer, found end of input"
                              : std::string("expected an integer, found '") + peek() + "'",
                       done() ? text_.size() : pos_);
    }
    std::uint64_t magnitude = 0;
    const auto* first = text_.data() + digits;
    const auto* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, magnitude);
    const std::uint64_t limit = static_cast<std::uint64_t>(std::numeric_limits<Entry>::max());
    if (ec != std::errc{} || ptr != last || magnitude > limit) {
      throw ParseError("integer out of range", start);
    }
    const auto value = static_cast<Entry>(magnitude);
    return negative ? -value : value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ConwayWord parse_word(std::string_view text) {
  Cursor cur(text);
  cur.skip_space();
  bool wrapped = false;
  if (cur.peek() == 'C') {
    cur.advance();
    cur.skip_space();
    if (cur.peek() != '(') throw ParseError("expected '(' after 'C'", cur.done() ? text.size() : cur.pos());
    cur.advance();
    wrapped = true;
  }
  std::vector<Entry> entries;
  cur.skip_space();
  const bool empty_list = wrapped ? cur.peek() == ')' : cur.done();
  if (empty_list && !wrapped) throw ParseError("empty word; write C() for the trivial diagram", 0);
  if (!empty_list) {
    for (;;) {
      entries.push_back(cur.integer());
      cur.skip_space();
      if (cur.peek() == ',') {
        cur.advance();
        continue;
      }
      break;
    }
  }
  cur.skip_space();
  if (wrapped) {
    if (cur.peek() != ')') {
      throw ParseError(cur.done() ? "missing ')'" : std::string("expected ',' or ')', found '") + cur.peek() + "'",
                       cur.done() ? text.size() : cur.pos());
    }
    cur.advance();
    cur.skip_space();
  }
  if (!cur.done()) {
    throw ParseError(std::string("unexpected '") + cur.peek() + "'", cur.pos());
  }
  return ConwayWord(std::move(entries));
}

std::string annotate_parse_error(std::string_view text, const ParseError& error) {
  std::string out = "error: ";
  out += error.what();
  out += " at position ";
  out += std::to_string(error.position());
  out += "\n  ";
  out += text;
  out += "\n  ";
  out.append(std::min(error.position(), text.size()), ' ');
  out += "^\n";
  return out;
}

}  // namespace dk
