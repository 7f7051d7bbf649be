#include "deltaknot/catalog.hpp"

#include <algorithm>

namespace dk {

std::string to_string(AssertedValue::Kind kind) {
  switch (kind) {
    case AssertedValue::Kind::Exact: return "exact";
    case AssertedValue::Kind::Interval: return "interval";
    case AssertedValue::Kind::Unknown: return "unknown";
  }
  return "?";
}

namespace {

AssertedValue exact(Entry v, std::string citation) {
  return {AssertedValue::Kind::Exact, {v}, std::move(citation)};
}

AssertedValue either(Entry a, Entry b, std::string citation) {
  return {AssertedValue::Kind::Interval, {a, b}, std::move(citation)};
}

KnotIdentity entry(std::string name, ConwayWord word, AssertedValue value,
                   std::vector<std::string> groups) {
  KnotIdentity k;
  k.name = std::move(name);
  k.fraction = evaluate_fraction(word);
  k.source_word = std::move(word);
  k.asserted_u_delta = std::move(value);
  k.groups = std::move(groups);
  return k;
}

std::vector<KnotIdentity> build_catalog() {
  const std::string delta_one = "published: Delta-unknotting number one, family representation listed";
  const std::string two_twist = "published: two-twist closed form";
  const std::string plus_two = "published worked example: |a2| + 2";
  std::vector<KnotIdentity> c;
  // Two-bridge knots with Delta-unknotting number one, up to ten crossings.
  c.push_back(entry("3_1", {3}, exact(1, delta_one), {"delta-one"}));
  c.push_back(entry("4_1", {2, 2}, exact(1, delta_one), {"delta-one", "two-twist"}));
  c.push_back(entry("6_2", {3, 1, 2}, exact(1, delta_one), {"delta-one"}));
  c.push_back(entry("6_3", {2, 1, 1, 2}, exact(1, delta_one), {"delta-one"}));
  c.push_back(entry("7_6", {2, 2, 1, 2}, exact(1, delta_one), {"delta-one"}));
  c.push_back(entry("7_7", {2, 1, 1, 1, 2}, exact(1, delta_one), {"delta-one"}));
  c.push_back(entry("8_11", {3, 2, 1, 2}, exact(1, delta_one), {"delta-one"}));
  c.push_back(entry("8_13", {3, 1, 1, 1, 2}, exact(1, delta_one), {"delta-one"}));
  c.push_back(entry("9_12", {4, 2, 1, 2}, exact(1, delta_one), {"delta-one"}));
  c.push_back(entry("9_14", {4, 1, 1, 1, 2}, exact(1, delta_one), {"delta-one"}));
  c.push_back(entry("10_7", {5, 2, 1, 2}, exact(1, delta_one), {"delta-one"}));
  c.push_back(entry("10_10", {5, 1, 1, 1, 2}, exact(1, delta_one), {"delta-one"}));
  c.push_back(entry("10_19", {4, 1, 1, 1, 3}, exact(1, delta_one), {"delta-one"}));
  c.push_back(entry("10_32", {3, 1, 1, 1, 2, 2}, exact(1, delta_one), {"delta-one"}));
  // Two-twist knots C(2a, 2b) of the distance table.
  c.push_back(entry("6_1", {4, 2}, exact(2, two_twist), {"two-twist"}));
  c.push_back(entry("8_1", {6, 2}, exact(3, two_twist), {"two-twist"}));
  c.push_back(entry("8_3", {4, 4}, exact(4, two_twist), {"two-twist"}));
  c.push_back(entry("10_1", {8, 2}, exact(4, two_twist), {"two-twist"}));
  c.push_back(entry("10_3", {6, 4}, exact(6, two_twist), {"two-twist"}));
  // Three-band knots where the value exceeds |a2|.
  c.push_back(entry("8_2", {5, 1, 2}, exact(2, plus_two), {"three-band"}));
  c.push_back(entry("10_2", {7, 1, 2}, exact(4, plus_two), {"three-band"}));
  c.push_back(entry("10_6", {5, 3, 2}, exact(3, plus_two), {"three-band"}));
  c.push_back(entry("10_25", {3, 2, 2, 1, 2},
                    exact(2, "published worked example: C(3,m,2,1,2) deforms to 3_1 by one Delta-move"),
                    {"three-m-family"}));
  // Open cases. Words are the standard table notation.
  c.push_back(entry("10_14", {4, 2, 1, 1, 2}, either(2, 4, "published open case: 2 or 4"), {"open"}));
  c.push_back(entry("10_30", {3, 1, 2, 1, 1, 2}, either(1, 3, "published open case: 1 or 3"),
                    {"open", "excluded"}));
  c.push_back(entry("10_36", {2, 4, 1, 1, 2}, either(1, 3, "published open case: 1 or 3"),
                    {"open", "excluded"}));
  c.push_back(entry("10_38", {2, 3, 1, 2, 2}, either(1, 3, "published open case: 1 or 3"),
                    {"open", "excluded"}));
  KnotIdentity k929;
  k929.name = "9_29";
  k929.asserted_u_delta = {AssertedValue::Kind::Unknown, {},
                           "published as undetermined; not a two-bridge knot"};
  k929.groups = {"open", "not-two-bridge"};
  c.push_back(std::move(k929));
  return c;
}

}  // namespace

std::span<const KnotIdentity> catalog() {
  static const std::vector<KnotIdentity> table = build_catalog();
  return table;
}

const KnotIdentity* find_by_name(std::string_view name) {
  for (const auto& k : catalog()) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

CatalogMatch catalog_lookup(const SchubertPair& pair) {
  if (!pair.is_knot()) return {CatalogMatch::Status::NotAKnot, nullptr, Verdict::Distinct};
  for (const auto& k : catalog()) {
    if (!k.fraction) continue;
    const Verdict v = equivalent(*k.fraction, pair);
    if (v != Verdict::Distinct) return {CatalogMatch::Status::Found, &k, v};
  }
  return {CatalogMatch::Status::NotFound, nullptr, Verdict::Distinct};
}

std::vector<std::string> check_convention() {
  std::vector<std::string> failures;
  const auto expect_name = [&](const ConwayWord& w, const std::string& name) {
    const CatalogMatch m = catalog_lookup(evaluate_fraction(w));
    if (m.status != CatalogMatch::Status::Found || m.identity->name != name) {
      failures.push_back(to_string(w) + " does not resolve to " + name);
    }
  };
  expect_name({3}, "3_1");
  expect_name({2, 2}, "4_1");
  expect_name({5, 1, 2}, "8_2");
  expect_name({2, 1, 5}, "8_2");
  for (const auto& k : catalog()) {
    if (k.source_word) expect_name(*k.source_word, k.name);
  }
  for (Entry x = -6; x <= 6; ++x) {
    if (!evaluate_fraction(ConwayWord{x, 0}).is_unknot()) failures.push_back("C(x,0) is not the unknot");
    if (equivalent(ConwayWord{x, 1}, ConwayWord{x + 1}) != Verdict::Same) failures.push_back("C(x,1) != C(x+1)");
    for (Entry y = -6; y <= 6; ++y) {
      if (equivalent(ConwayWord{x, -1, y}, ConwayWord{x - 1, 1 - y}) != Verdict::Same) {
        failures.push_back("C(a,-1,b) != C(a-1,1-b)");
      }
    }
  }
  return failures;
}

}  // namespace dk
