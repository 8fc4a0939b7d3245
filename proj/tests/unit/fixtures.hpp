#pragma once

#include "tropkit/matrix.hpp"

namespace fx {

using namespace tropkit;

inline const ExtInt inf = ExtInt::infinity();

inline TropicalSystem f1() { return TropicalSystem::from_rows({{1, 0, 0}, {0, 1, 0}}); }

inline TropicalSystem f2() {
  return TropicalSystem::from_rows(
      {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 1, 1, 0, 0}});
}

// [[0,1],[1,0]] has no solution
inline TropicalSystem swap2() { return TropicalSystem::from_rows({{0, 1}, {1, 0}}); }

inline Vector vec(std::initializer_list<ExtInt> xs) { return Vector(xs); }

}  // namespace fx
