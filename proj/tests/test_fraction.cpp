#include <doctest.h>

#include "deltaknot/catalog.hpp"
#include "deltaknot/diagram.hpp"
#include "deltaknot/fraction.hpp"
#include "deltaknot/rewrite.hpp"
#include "oracles.hpp"
#include "random_words.hpp"

using namespace dk;

namespace {

// Normalize an oracle rational the same way a Schubert pair is defined.
SchubertPair oracle_pair(const ConwayWord& w) {
  auto r = oracle::evaluate_right_to_left(w);
  const Entry p = r.num < 0 ? -r.num : r.num;
  if (p == 1) return {1, 0};
  if (p == 0) return {0, 1};
  const Entry sign = r.num < 0 ? -1 : 1;
  return {p, ((r.den * sign) % p + p) % p};
}

}  // namespace

TEST_CASE("evaluate_fraction examples") {
  CHECK(evaluate_fraction(ConwayWord{3}) == SchubertPair{3, 1});
  for (Entry x = -9; x <= 9; ++x) CHECK(evaluate_fraction(ConwayWord{x, 0}) == SchubertPair{1, 0});
  const SchubertPair fig8 = evaluate_fraction(ConwayWord{2, 2});
  CHECK(fig8.p == 5);
  CHECK((fig8.q == 2 || fig8.q == 3));
  CHECK(evaluate_fraction(ConwayWord{}) == SchubertPair{1, 0});
  CHECK(evaluate_fraction(ConwayWord{2}) == SchubertPair{2, 1});
  CHECK(evaluate_fraction(ConwayWord{0}) == SchubertPair{0, 1});
}

TEST_CASE("evaluate_fraction agrees with the right-to-left oracle") {
  for (const auto& w : testing::random_words(3000, 8, -6, 6)) {
    const SchubertPair got = evaluate_fraction(w);
    const SchubertPair want = oracle_pair(w);
    INFO(to_string(w));
    CHECK(got == want);
  }
}

TEST_CASE("mirror") {
  CHECK(mirror(ConwayWord{3}) == ConwayWord{-3});
  CHECK(mirror(ConwayWord{2, -1, 3}) == ConwayWord{-2, 1, -3});
  CHECK(equivalent(mirror(ConwayWord{2, 2}), ConwayWord{2, 2}) == Verdict::Same);
  CHECK(is_amphichiral(evaluate_fraction(ConwayWord{2, 2})));
  CHECK(!is_amphichiral(evaluate_fraction(ConwayWord{3})));
}

TEST_CASE("reverse is the half-turn") {
  CHECK(reverse(ConwayWord{5, 1, 2}) == ConwayWord{2, 1, 5});
  CHECK(equivalent(ConwayWord{5, 1, 2}, ConwayWord{2, 1, 5}) == Verdict::Same);
  CHECK(reverse(ConwayWord{3}) == ConwayWord{3});
  CHECK(equivalent(reverse(ConwayWord{2, 2}), ConwayWord{2, 2}) == Verdict::Same);
  // Literal reversal of an even-length word mirrors the class.
  CHECK(equivalent(reverse_entries(ConwayWord{4, 2}), ConwayWord{4, 2}) == Verdict::Mirror);
}

TEST_CASE("equivalent verdicts") {
  CHECK(equivalent(ConwayWord{2, 1}, ConwayWord{3}) == Verdict::Same);
  CHECK(equivalent(ConwayWord{3}, ConwayWord{-3}) == Verdict::Mirror);
  CHECK(equivalent(ConwayWord{3}, ConwayWord{2, 2}) == Verdict::Distinct);
  CHECK(equivalent(ConwayWord{3}, ConwayWord{2}) == Verdict::Distinct);  // knot vs link
}

TEST_CASE("equivalence matches the brute-force class test") {
  const auto words = testing::random_words(400, 5, -5, 5, 7);
  for (std::size_t i = 0; i + 1 < words.size(); i += 2) {
    const auto a = evaluate_fraction(words[i]);
    const auto b = evaluate_fraction(words[i + 1]);
    if (a.p != b.p || a.p < 2) continue;
    const bool same = oracle::brute_same_class(a.p, a.q, b.q);
    const bool mirror_same = oracle::brute_same_class(a.p, a.q, (a.p - b.q) % a.p);
    const Verdict v = equivalent(a, b);
    CHECK((v == Verdict::Same) == same);
    CHECK((v == Verdict::Mirror) == (!same && mirror_same));
  }
  // Same p is rare among random words; sweep a fixed p as well.
  for (Entry q = 1; q < 35; ++q) {
    for (Entry q2 = 1; q2 < 35; ++q2) {
      if (std::gcd(q, Entry{35}) != 1 || std::gcd(q2, Entry{35}) != 1) continue;
      const bool same = oracle::brute_same_class(35, q, q2);
      CHECK((equivalent(SchubertPair{35, q}, SchubertPair{35, q2}) == Verdict::Same) == same);
    }
  }
}

TEST_CASE("identities preserve the class") {
  for (const auto& w : testing::random_words(2000, 8, -6, 6, 99)) {
    const auto before = canonical(evaluate_fraction(w));
    auto check = [&](const std::optional<ConwayWord>& after) {
      if (after) {
        INFO(to_string(w) << " -> " << to_string(*after));
        CHECK(canonical(evaluate_fraction(*after)) == before);
      }
    };
    for (std::size_t i = 0; i < w.size(); ++i) {
      check(rewrite::merge_zero(w, i));
      check(rewrite::expand_unit(w, i));
    }
    check(rewrite::drop_leading_zero(w));
    check(rewrite::drop_trailing_zero(w));
    check(rewrite::absorb_trailing_unit(w));
    check(rewrite::absorb_leading_unit(w));
    check(rewrite::drop_single_unit(w));
    CHECK(canonical(evaluate_fraction(normalize(w))) == before);
  }
}

TEST_CASE("published identities hold as class equalities") {
  for (Entry x = -7; x <= 7; ++x) {
    CHECK(equivalent(ConwayWord{x, 1}, ConwayWord{x + 1}) == Verdict::Same);
    for (Entry y = -7; y <= 7; ++y) {
      CHECK(equivalent(ConwayWord{x, 0, y}, ConwayWord{x + y}) == Verdict::Same);
      CHECK(equivalent(ConwayWord{x, -1, y}, ConwayWord{x - 1, 1 - y}) == Verdict::Same);
    }
  }
}

TEST_CASE("normalize leaves no 0 or unit entries") {
  for (const auto& w : testing::random_words(2000, 8, -6, 6, 5)) {
    std::vector<RewriteStep> trace;
    const ConwayWord n = normalize(w, &trace);
    if (n.size() >= 2) {
      for (Entry a : n) CHECK((a != 0 && a != 1 && a != -1));
    }
    for (const auto& step : trace) CHECK(step.after.size() < step.before.size());
  }
}

TEST_CASE("random-suite symmetries") {
  for (const auto& w : testing::random_words(1000, 8, -6, 6, 11)) {
    CHECK(mirror(mirror(w)) == w);
    CHECK(equivalent(w, reverse(w)) == Verdict::Same);
    const Verdict v = equivalent(w, mirror(w));
    CHECK((v == Verdict::Same || v == Verdict::Mirror));
  }
}

TEST_CASE("determinant parity matches the traced diagram") {
  for (const auto& w : testing::random_words(1500, 8, -6, 6, 3)) {
    const SchubertPair pair = evaluate_fraction(w);
    if (pair.p == 0) continue;  // split unlink: caps only, not traced as a knot
    const PlatDiagram d(w);
    INFO(to_string(w));
    CHECK((d.component_count() == 1) == pair.is_knot());
  }
}

TEST_CASE("catalog lookup") {
  auto name = [](const ConwayWord& w) {
    const auto m = catalog_lookup(evaluate_fraction(w));
    return m.status == CatalogMatch::Status::Found ? m.identity->name : std::string("-");
  };
  CHECK(name({4, 2}) == "6_1");
  CHECK(name({5, 3, 2}) == "10_6");
  CHECK(name({3}) == "3_1");
  CHECK(name({2, 2}) == "4_1");
  CHECK(name({5, 1, 2}) == "8_2");
  CHECK(name({3, 2, 2, 1, 2}) == "10_25");
  CHECK(name({5}) == "-");
  const auto m = catalog_lookup(SchubertPair{3, 1});
  REQUIRE(m.status == CatalogMatch::Status::Found);
  CHECK(m.identity->asserted_u_delta.values == std::vector<Entry>{1});
  CHECK(catalog_lookup(evaluate_fraction(ConwayWord{-3})).chirality == Verdict::Mirror);
  CHECK(catalog_lookup(SchubertPair{4, 1}).status == CatalogMatch::Status::NotAKnot);
  CHECK(catalog_lookup(SchubertPair{1, 0}).status == CatalogMatch::Status::NotFound);
}

TEST_CASE("catalog contents") {
  CHECK(catalog().size() == 28);
  for (const auto& k : catalog()) {
    if (!k.fraction) {
      CHECK(k.name == "9_29");
      continue;
    }
    const auto orbit = q_orbit(*k.fraction);
    CHECK(inverse_mod(orbit[0], k.fraction->p) == orbit[1]);
    const auto& a = k.asserted_u_delta;
    if (a.kind == AssertedValue::Kind::Interval) CHECK((a.high() - a.low()) % 2 == 0);
  }
  // Determinants of the catalog knots, frozen from the standard knot table.
  const std::vector<std::pair<const char*, Entry>> det = {
      {"3_1", 3},   {"4_1", 5},   {"6_1", 9},   {"6_2", 11},  {"6_3", 13},  {"7_6", 19},   {"7_7", 21},
      {"8_1", 13},  {"8_2", 17},  {"8_3", 17},  {"8_11", 27}, {"8_13", 29}, {"9_12", 35},  {"9_14", 37},
      {"10_1", 17}, {"10_2", 23}, {"10_3", 25}, {"10_6", 37}, {"10_7", 43}, {"10_10", 45}, {"10_14", 57},
      {"10_19", 51}, {"10_25", 65}, {"10_30", 67}, {"10_32", 69}, {"10_36", 51}, {"10_38", 59}};
  for (const auto& [n, p] : det) {
    const auto* k = find_by_name(n);
    REQUIRE(k);
    CHECK(k->fraction->p == p);
  }
  CHECK(check_convention().empty());
}
