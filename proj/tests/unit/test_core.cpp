#include <doctest.h>

#include "fixtures.hpp"
#include "tropkit/core.hpp"
#include "tropkit/errors.hpp"

using namespace tropkit;
using fx::inf;
using fx::vec;

TEST_CASE("evaluate") {
  CHECK(evaluate(fx::f1(), vec({2, 2, 2})) == vec({2, 2}));
  CHECK(evaluate(TropicalSystem::from_rows({{0, inf}}), vec({3, 5})) == vec({3}));
  CHECK(evaluate(fx::f2(), vec({0, 0, 0, 0, 0})) == vec({0, 0, 0, 0}));
  CHECK_THROWS_AS(evaluate(fx::f1(), vec({0, 0})), ShapeError);
}

TEST_CASE("tropical solutions") {
  CHECK(is_tropical_solution(fx::f1(), vec({0, 0, 0})));
  CHECK(is_tropical_solution(fx::f1(), vec({7, 7, 7})));
  CHECK_FALSE(is_tropical_solution(fx::f1(), vec({0, 1, 1})));
  CHECK_THROWS_AS(is_tropical_solution(fx::f1(), vec({inf, inf, inf})), InvalidSolutionError);
}

TEST_CASE("min-plus solutions") {
  auto s = TwoSidedSystem::from_rows({{0, inf}}, {{inf, 0}}, Relation::Le);
  CHECK(is_minplus_solution(s, vec({0, 1})));
  CHECK_FALSE(is_minplus_solution(s, vec({1, 0})));
  auto e = TwoSidedSystem::from_rows({{3, 1}}, {{3, 1}}, Relation::Eq);
  CHECK(is_minplus_solution(e, vec({5, -2})));
}

TEST_CASE("star tables") {
  auto t = star_table(fx::f1());
  CHECK_FALSE(t.at(0, 0));
  CHECK(t.at(0, 1));
  CHECK(t.at(0, 2));
  CHECK(t.at(1, 0));
  CHECK_FALSE(t.at(1, 1));
  CHECK(t.at(1, 2));

  auto t2 = star_table(fx::f2());
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t j = 0; j < 5; ++j) CHECK(t2.at(r, j) == (fx::f2().at(r, j) == ExtInt(0)));
  }

  auto empty = star_table(TropicalSystem::from_rows({{inf, inf}}));
  CHECK(empty.count(0) == 0);
}

TEST_CASE("joint star tables") {
  auto a = joint_star_table(TwoSidedSystem::from_rows({{0, inf}}, {{inf, 0}}, Relation::Le));
  CHECK(a.boundary() == 2);
  CHECK(a.at(0, 0));
  CHECK(a.at(0, 3));
  CHECK(a.count(0) == 2);
  auto b = joint_star_table(TwoSidedSystem::from_rows({{1, inf}}, {{inf, 0}}, Relation::Le));
  CHECK(b.count(0) == 1);
  CHECK(b.at(0, 3));
  auto c = joint_star_table(TwoSidedSystem::from_rows({{0, 0}}, {{0, 0}}, Relation::Eq));
  CHECK(c.count(0) == 4);
}

TEST_CASE("translations and scaling") {
  auto a = TropicalSystem::from_rows({{0, 2}, {1, inf}});
  auto r = translate_rows(a, vec({1, -1}));
  CHECK(r.row(0)[1] == ExtInt(3));
  CHECK(r.row(1)[0] == ExtInt(0));
  auto c = translate_columns(a, vec({5, 0}));
  CHECK(c.at(1, 0) == ExtInt(6));
  CHECK(c.at(1, 1).is_infinite());
  auto s = scale(a, 3);
  CHECK(s.at(0, 1) == ExtInt(6));
  CHECK_THROWS(scale(a, 0));
}

TEST_CASE("normalize") {
  auto n1 = normalize(TropicalSystem::from_rows({{3, 4, 5}}));
  CHECK(n1.system == TropicalSystem::from_rows({{0, 1, 2}}));
  CHECK(n1.bound == 2);
  auto n2 = normalize(fx::f1());
  CHECK(n2.system == fx::f1());
  CHECK(n2.bound == 1);
  auto n3 = normalize(TropicalSystem::from_rows({{inf, inf}, {0, 1}}));
  CHECK(n3.system.rows() == 1);
  CHECK(n3.bound == 1);
}

TEST_CASE("finitize") {
  CHECK_THROWS_AS(finitize(fx::f1(), vec({0, 0, inf})), PreconditionError);
  auto x = finitize(TropicalSystem::from_rows({{0, 0, 0}}), vec({0, 0, inf}));
  CHECK(x == vec({0, 0, 1}));
  CHECK(is_tropical_solution(TropicalSystem::from_rows({{0, 0, 0}}), x));
  auto a = TropicalSystem::from_rows({{0, 5, 0}});
  auto y = finitize(a, vec({2, inf, 2}));
  CHECK(y == vec({2, 8, 2}));
  CHECK(is_tropical_solution(a, y));
}

TEST_CASE("shapes are checked") {
  CHECK_THROWS_AS(TropicalSystem::from_rows({{0, 1}, {0}}), ShapeError);
  CHECK_THROWS(TropicalSystem(ExtMatrix(1, 2, inf), Domain::Int));
}
