#include "deltaknot/invariants.hpp"

#include <stdexcept>

#include "deltaknot/diagram.hpp"
#include "deltaknot/fraction.hpp"

namespace dk {

namespace {

bool positive_even(Entry a) { return a > 0 && a % 2 == 0; }
bool positive_odd(Entry a) { return a > 0 && a % 2 != 0; }

Entry exact_div(Entry numerator, Entry denominator, const char* what) {
  if (numerator % denominator != 0) {
    throw std::logic_error(std::string(what) + ": closed form is not an integer");
  }
  return numerator / denominator;
}

}  // namespace

A2Value a2_torus2(Entry m) {
  if (m % 2 == 0) throw std::invalid_argument("a2_torus2: m must be odd, got " + std::to_string(m));
  return {exact_div(checked_mul(m, m) - 1, 8, "a2_torus2")};
}

SkeinTrace a2_skein_trace(const ConwayWord& word) {
  if (!evaluate_fraction(word).is_knot()) {
    throw std::invalid_argument("a2_skein: " + to_string(word) + " is a 2-component link");
  }
  SkeinTrace trace;
  Entry accumulated = 0;
  ConwayWord w = word;
  for (;;) {
    std::vector<RewriteStep> rewrites;
    w = normalize(w, &rewrites);
    for (auto& r : rewrites) trace.steps.emplace_back(std::move(r));
    if (w.size() <= 1) break;

    // After normalization every entry has |a| >= 2, so the second band can
    // always lose two crossings.
    const PlatDiagram diagram(w);
    const std::size_t crossing = diagram.crossing_id(1, 0);
    SkeinStep step;
    step.before = w;
    step.band = 1;
    step.crossing_sign = diagram.sign(crossing);
    step.lk = lk(smooth(diagram, 1, 0));
    w[1] += w[1] > 0 ? -2 : 2;
    step.after = w;
    accumulated += step.crossing_sign * step.lk;
    trace.steps.emplace_back(std::move(step));
  }
  trace.base = w;
  trace.base_value = w.empty() ? 0 : a2_torus2(w[0]).value;
  trace.a2 = {accumulated + trace.base_value};
  return trace;
}

A2Value a2_skein(const ConwayWord& word) { return a2_skein_trace(word).a2; }

std::string to_string(ClosedShape shape) {
  switch (shape) {
    case ClosedShape::EvenTwist: return "even-twist";
    case ClosedShape::EvenTwistOddEnd: return "even-twist-odd-end";
    case ClosedShape::EvenOddOdd: return "even-odd-odd";
  }
  return "?";
}

Entry nested_pair_sum(const ConwayWord& word, std::size_t pairs) {
  Entry total = 0;
  Entry odd_prefix = 0;
  for (std::size_t j = 0; j < pairs; ++j) {
    odd_prefix = checked_add(odd_prefix, word[2 * j]);
    total = checked_add(total, checked_mul(odd_prefix, word[2 * j + 1]));
  }
  return total;
}

std::optional<ClosedA2> a2_closed(const ConwayWord& word) {
  const std::size_t n = word.size();
  if (n == 0) return std::nullopt;

  bool leading_even = true;
  for (std::size_t i = 0; i + 1 < n; ++i) leading_even = leading_even && positive_even(word[i]);

  if (leading_even && n % 2 == 0 && positive_even(word[n - 1])) {
    const Entry t = nested_pair_sum(word, n / 2);
    return ClosedA2{{-exact_div(t, 4, "a2_closed")}, ClosedShape::EvenTwist};
  }
  if (leading_even && positive_odd(word[n - 1])) {
    if (n % 2 == 0) {
      const Entry t = nested_pair_sum(word, n / 2);
      Entry s = 0;
      for (std::size_t i = 0; i < n; i += 2) s = checked_add(s, word[i]);
      const Entry num = checked_add(checked_mul(2, t), checked_mul(s, s));
      return ClosedA2{{exact_div(num, 8, "a2_closed")}, ClosedShape::EvenTwistOddEnd};
    }
    const Entry t = nested_pair_sum(word, (n - 1) / 2);
    Entry s = 0;
    for (std::size_t i = 0; i < n; i += 2) s = checked_add(s, word[i]);
    const Entry num = checked_add(checked_mul(2, t), checked_mul(s, s) - 1);
    return ClosedA2{{exact_div(num, 8, "a2_closed")}, ClosedShape::EvenTwistOddEnd};
  }
  if (n == 3 && positive_even(word[0]) && positive_odd(word[1]) && positive_odd(word[2])) {
    const Entry num = checked_add(-checked_mul(2, checked_mul(word[0], word[1] + word[2])),
                                  checked_mul(word[2], word[2]) - 1);
    return ClosedA2{{exact_div(num, 8, "a2_closed")}, ClosedShape::EvenOddOdd};
  }
  return std::nullopt;
}

}  // namespace dk
