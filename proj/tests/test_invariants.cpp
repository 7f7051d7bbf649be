#include <doctest.h>

#include "deltaknot/catalog.hpp"
#include "deltaknot/diagram.hpp"
#include "deltaknot/fraction.hpp"
#include "deltaknot/invariants.hpp"
#include "oracles.hpp"
#include "random_words.hpp"

using namespace dk;

TEST_CASE("a2_skein examples") {
  CHECK(a2_skein({2, 2}).value == -1);
  CHECK(a2_skein({3, 2, 2, 1, 2}).value == 0);
  CHECK(a2_skein({1}).value == 0);
  CHECK(a2_skein({2, 1, 5}).value == 0);
  CHECK(a2_skein({}).value == 0);
  CHECK_THROWS_AS(a2_skein({2}), std::invalid_argument);
}

TEST_CASE("a2 of catalog knots matches the standard table") {
  // z^2 coefficients of the Conway polynomial, frozen from the knot table.
  const std::vector<std::pair<const char*, Entry>> table = {
      {"3_1", 1},   {"4_1", -1},  {"6_1", -2},  {"6_2", -1},  {"6_3", 1},   {"7_6", 1},   {"7_7", -1},
      {"8_1", -3},  {"8_2", 0},   {"8_3", -4},  {"8_11", -1}, {"8_13", 1},  {"9_12", 1},  {"9_14", -1},
      {"10_1", -4}, {"10_2", 2},  {"10_3", -6}, {"10_6", -1}, {"10_7", -1}, {"10_10", 1}, {"10_14", 2},
      {"10_19", 1}, {"10_25", 0}, {"10_30", 1}, {"10_32", -1}, {"10_36", 1}, {"10_38", -1}};
  for (const auto& [name, a2] : table) {
    const KnotIdentity* k = find_by_name(name);
    REQUIRE(k);
    INFO(name);
    CHECK(a2_skein(*k->source_word).value == a2);
  }
}

TEST_CASE("a2_skein agrees with the Gauss-diagram oracle") {
  int knots = 0;
  for (const auto& w : testing::random_words(1500, 7, -5, 5, 17)) {
    if (!evaluate_fraction(w).is_knot()) continue;
    ++knots;
    INFO(to_string(w));
    CHECK(a2_skein(w).value == oracle::a2_gauss_diagram(w));
  }
  CHECK(knots > 500);
}

TEST_CASE("a2_closed examples") {
  auto closed = [](const ConwayWord& w) { return a2_closed(w)->a2.value; };
  CHECK(closed({2, 2, 2, 2}) == -3);
  CHECK(closed({2, 2, 3}) == 4);
  CHECK(closed({2, 1, 7}) == 2);
  CHECK(a2_closed({2, 1, 7})->shape == ClosedShape::EvenOddOdd);
  CHECK(a2_closed({2, 2, 3})->shape == ClosedShape::EvenTwistOddEnd);
  CHECK(!a2_closed({3, 2}));
  CHECK(!a2_closed({}));
}

TEST_CASE("a2_closed matches a2_skein and the oracle formulas on its domains") {
  const std::vector<Entry> even = {2, 4, 6, 8};
  const std::vector<Entry> odd = {1, 3, 5, 7};
  std::vector<ConwayWord> all_even, odd_end;
  // Exhaustive for n <= 4, entries <= 8.
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
      std::vector<Entry> w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = even[idx[i]];
      if (n % 2 == 0) all_even.emplace_back(w);
      for (Entry last : odd) {
        auto v = w;
        v.back() = last;
        odd_end.emplace_back(v);
      }
      std::size_t k = 0;
      while (k < n && ++idx[k] == even.size()) idx[k++] = 0;
      if (k == n) break;
    }
  }
  for (const auto& w : all_even) {
    INFO(to_string(w));
    const auto t4 = oracle::even_twist_sum_times4(w);
    REQUIRE(t4 % 4 == 0);
    CHECK(a2_closed(w)->a2.value == -t4 / 4);
    CHECK(a2_skein(w).value == -t4 / 4);
  }
  for (const auto& w : odd_end) {
    INFO(to_string(w));
    const auto v8 = oracle::odd_end_a2_times8(w);
    REQUIRE(v8 % 8 == 0);
    CHECK(a2_closed(w)->a2.value == v8 / 8);
    CHECK(a2_skein(w).value == v8 / 8);
  }
  for (Entry a : even)
    for (Entry b : odd)
      for (Entry c : odd) {
        const ConwayWord w{a, b, c};
        CHECK(a2_closed(w)->a2.value == a2_skein(w).value);
      }
}

TEST_CASE("a2_torus2") {
  CHECK(a2_torus2(1).value == 0);
  CHECK(a2_torus2(3).value == 1);
  CHECK(a2_torus2(-5).value == 3);
  CHECK_THROWS_AS(a2_torus2(4), std::invalid_argument);
  for (Entry m = -21; m <= 21; m += 2) CHECK(a2_skein({m}).value == a2_torus2(m).value);
}

TEST_CASE("a2 is mirror invariant and a class invariant") {
  for (const auto& w : testing::random_words(1500, 8, -6, 6, 23)) {
    if (!evaluate_fraction(w).is_knot()) continue;
    const Entry a = a2_skein(w).value;
    CHECK(a2_skein(mirror(w)).value == a);
    CHECK(a2_skein(reverse(w)).value == a);
    CHECK(a2_skein(normalize(w)).value == a);
  }
}

TEST_CASE("lk examples") {
  const auto abs_lk = [](const LinkDiagram& d) { const Entry v = lk(d); return v < 0 ? -v : v; };
  CHECK(abs_lk(smooth(ConwayWord{2, 2}, 1, 0)) == 1);
  CHECK(abs_lk(smooth(ConwayWord{6, 2}, 1, 0)) == 3);
  CHECK(abs_lk(smooth(ConwayWord{6, 4, 2, 2}, 1, 0)) == 3);
  CHECK(abs_lk(smooth(ConwayWord{3}, 0, 0)) == 1);
  // The unique crossing of C(1) smooths to a diagram with no crossings left.
  const LinkDiagram d = smooth(ConwayWord{1}, 0, 0);
  CHECK(d.component_count == 2);
  CHECK(lk(d) == 0);
  CHECK_THROWS_AS(lk(trace_link(ConwayWord{3})), std::invalid_argument);
  CHECK(lk(trace_link(ConwayWord{2})) != 0);
}

TEST_CASE("skein steps on even words follow the leading partial sum") {
  for (const auto& w : std::vector<ConwayWord>{{2, 2}, {4, 2, 2, 2}, {2, 4, 6, 8}, {8, 6, 4, 2, 2, 2}}) {
    const SkeinTrace trace = a2_skein_trace(w);
    Entry chain = 0;
    for (const auto& step : trace.steps) {
      if (const auto* s = std::get_if<SkeinStep>(&step)) {
        CHECK(s->band == 1);
        CHECK(s->crossing_sign * s->lk == -s->before[0] / 2);
        chain += s->crossing_sign * s->lk;
      }
    }
    CHECK(chain + trace.base_value == a2_skein(w).value);
  }
  // One exchange in band 2 changes a2 by -alpha1/2.
  for (Entry a1 = 2; a1 <= 8; a1 += 2)
    for (Entry a2 = 4; a2 <= 8; a2 += 2)
      for (Entry a3 = 2; a3 <= 6; a3 += 2) {
        const ConwayWord k{a1, a2, a3, 2};
        const ConwayWord km{a1, a2 - 2, a3, 2};
        CHECK(a2_skein(k).value - a2_skein(km).value == -a1 / 2);
      }
}
