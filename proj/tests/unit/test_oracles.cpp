#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "tropkit/core.hpp"
#include "tropkit/errors.hpp"
#include "tropkit/oracles.hpp"

using namespace tropkit;
using fx::inf;
using fx::vec;

TEST_CASE("brute_tropsolv") {
  CHECK(brute_tropsolv(fx::f1()) == vec({0, 0, 0}));
  CHECK_FALSE(brute_tropsolv(fx::swap2()).has_value());
  CHECK(brute_tropsolv(TropicalSystem::from_rows({{0, 0}})) == vec({0, 0}));
}

TEST_CASE("brute_tropsolv_inf") {
  CHECK_FALSE(brute_tropsolv_inf(TropicalSystem::from_rows({{0, inf}, {inf, 0}})).has_value());
  // lexicographic order puts inf last: (0, 0, inf) is found before (0, inf, 0)
  CHECK(brute_tropsolv_inf(TropicalSystem::from_rows({{0, 0, inf}, {inf, 1, 1}})) == vec({0, 0, 0}));
  // row 0 forces x0 = inf
  CHECK(brute_tropsolv_inf(TropicalSystem::from_rows({{0, inf, inf}, {inf, 0, 0}})) ==
        vec({inf, 0, 0}));
  CHECK(brute_tropsolv_inf(TropicalSystem::from_rows({{0, 0, inf}, {inf, 0, 5}})) ==
        vec({5, 5, 0}));
  auto col = TropicalSystem::from_rows({{0, inf}, {1, inf}}, Domain::IntInf);
  auto x = brute_tropsolv_inf(col);
  REQUIRE(x.has_value());
  CHECK(is_tropical_solution(col, *x));
}

TEST_CASE("pairs oracle agrees with the grid") {
  const std::vector<ExtInt> vals{0, 1, 2, inf};
  std::size_t n = 0;
  for (const auto& a : vals) {
    for (const auto& b : vals) {
      for (const auto& c : vals) {
        for (const auto& d : vals) {
          for (const auto& e : vals) {
            for (const auto& f : vals) {
              auto m = TropicalSystem::from_rows({{a, b, c}, {d, e, f}}, Domain::IntInf);
              if (std::all_of(m.row(0).begin(), m.row(0).end(), [](auto& v) { return v.is_infinite(); })) continue;
              auto p = brute_tropsolv_pairs(m);
              CHECK(p.has_value() == brute_tropsolv_inf(m).has_value());
              if (p) CHECK(is_tropical_solution(m, *p));
              ++n;
            }
          }
        }
      }
    }
  }
  CHECK(n > 3000);
}

TEST_CASE("brute_minplus") {
  auto s = TwoSidedSystem::from_rows({{0, inf}}, {{inf, 0}}, Relation::Le);
  CHECK(brute_minplus(s).has_value());
  CHECK_FALSE(brute_minplus(TwoSidedSystem::from_rows({{0}}, {{-1}}, Relation::Eq)).has_value());
}

TEST_CASE("brute_implies") {
  CHECK(brute_implies(TropicalSystem::from_rows({{0, 0}}), vec({0, 0})));
  CHECK_FALSE(brute_implies(TropicalSystem::from_rows({{0, 0, 5}}), vec({0, 5, 0})));
  CHECK(brute_implies(fx::swap2(), vec({3, 0})));
}

TEST_CASE("grid comparison and enumeration") {
  CHECK(solution_sets_equal_on_grid(fx::f1(), fx::f1(), 3));
  CHECK_FALSE(solution_sets_equal_on_grid(TropicalSystem::from_rows({{0, 0, 0}}),
                                          TropicalSystem::from_rows({{0, 0, 5}}), 6));
  auto sols = enumerate_solutions(fx::f1(), 2);
  CHECK(sols == std::vector<Vector>{vec({0, 0, 0}), vec({1, 1, 1}), vec({2, 2, 2})});
}

TEST_CASE("budgets are enforced") {
  auto big = TropicalSystem::from_rows({{0, 1000, 1000, 1000, 1000}, {1000, 0, 0, 1000, 999}});
  CHECK_THROWS_AS(brute_tropsolv(fx::swap2(), 1), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_solutions(big, 1000, 1000), BudgetExceeded);
}

TEST_CASE("naive_max_btf on fixtures") {
  CHECK(naive_max_btf(star_table(fx::f1()), BtfKind::Tropical) == 1);
  CHECK(naive_max_btf(star_table(fx::f2()), BtfKind::Tropical) == 4);
}
