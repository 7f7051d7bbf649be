#include <doctest.h>

#include "deltaknot/distance.hpp"
#include "deltaknot/invariants.hpp"

using namespace dk;

TEST_CASE("dg_closed_c2") {
  CHECK(dg_closed_c2({4, 2}, {2, 2}) == 1);
  CHECK(dg_closed_c2({6, 4}, {2, 2}) == 5);
  CHECK(dg_closed_c2({2, 2}, {8, 2}) == 3);
  CHECK(dg_closed_c2({4, 4}, {4, 4}) == 0);
  CHECK_THROWS_AS(dg_closed_c2({6, 2}, {4, 4}), std::invalid_argument);
  CHECK_THROWS_AS(dg_closed_c2({3, 2}, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(dg_closed_c2({2, 2, 2}, {2, 2}), std::invalid_argument);
}

TEST_CASE("dg_bounds examples") {
  const auto same = dg_bounds({2, 2}, {-2, -2});
  CHECK((same.exact && same.lower == 0));
  const auto a = dg_bounds({6, 4}, {2, 2});
  CHECK((a.exact && a.lower == 5));
  const auto open = dg_bounds({6, 2}, {4, 4});
  CHECK(!open.exact);
  CHECK(open.lower == 1);
  CHECK(open.upper == 3);
  const auto t = dg_bounds({3}, {2, 2});
  CHECK((t.exact && t.lower == 2));
  CHECK_THROWS_AS(dg_bounds({2}, {3}), std::invalid_argument);
}

TEST_CASE("dg_bounds is symmetric") {
  const std::vector<ConwayWord> ws = {{3}, {2, 2}, {4, 2}, {5, 1, 2}, {6, 2}, {4, 4}, {3, 1, 2}, {5}};
  for (const auto& x : ws)
    for (const auto& y : ws) CHECK(dg_bounds(x, y) == dg_bounds(y, x));
}

TEST_CASE("distance bounds respect the triangle inequality") {
  const std::vector<ConwayWord> ws = {{}, {3}, {2, 2}, {4, 2}, {6, 2}, {4, 4}, {3, 1, 2}, {5}};
  for (const auto& x : ws)
    for (const auto& y : ws)
      for (const auto& z : ws) {
        const auto xy = dg_bounds(x, y), yz = dg_bounds(y, z), xz = dg_bounds(x, z);
        INFO(to_string(x), " ", to_string(y), " ", to_string(z));
        CHECK(xz.lower <= *xy.upper + *yz.upper);
      }
}

TEST_CASE("path lattice: distance between comparable two-twist knots is additive") {
  for (Entry a = 2; a <= 8; a += 2)
    for (Entry b = 2; b <= 6; b += 2)
      for (Entry c = a; c <= 10; c += 2)
        for (Entry d = b; d <= 8; d += 2) {
          const ConwayWord lo{a, b}, mid{c, b}, hi{c, d};
          CHECK(dg_closed_c2(lo, hi) == dg_closed_c2(lo, mid) + dg_closed_c2(mid, hi));
          const auto r = dg_bounds(lo, hi);
          CHECK((r.exact && r.lower == dg_closed_c2(lo, hi)));
          const Entry da = a2_skein(lo).value - a2_skein(hi).value;
          CHECK((r.lower - da) % 2 == 0);
        }
}
