#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tropkit/ext_int.hpp"

namespace tropkit {

using Rational = boost::multiprecision::cpp_rational;

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  Integer weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Bipartite mean payoff game. Vertices [0, n1) belong to player 1 (the
/// maximizer), [n1, n1 + n2) to player 2. Play starts at a player-1 vertex.
class MeanPayoffGame {
 public:
  /// Throws PreconditionError unless every edge alternates sides, every
  /// vertex has an outgoing edge, and start < n1.
  MeanPayoffGame(std::size_t n1, std::size_t n2, std::vector<Edge> edges, std::size_t start);

  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  std::size_t size() const noexcept { return n1_ + n2_; }
  std::size_t start() const noexcept { return start_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool owned_by_first(std::size_t v) const noexcept { return v < n1_; }
  /// max |weight|
  Integer max_weight() const;

  friend bool operator==(const MeanPayoffGame&, const MeanPayoffGame&) = default;

 private:
  std::size_t n1_;
  std::size_t n2_;
  std::vector<Edge> edges_;
  std::size_t start_;
};

/// Exact game value from the start vertex: max over player-1 positional
/// strategies of min over player-2 positional strategies of the mean weight
/// of the cycle the play ends in. Throws BudgetExceeded above `vertex_cap`
/// vertices or `pair_budget` strategy pairs.
Rational value_bruteforce(const MeanPayoffGame& g, std::size_t vertex_cap = 12,
                          std::uint64_t pair_budget = 50'000'000);

/// Value from the start vertex by value iteration for 4 |V|^3 W rounds,
/// rounded to the nearest fraction with denominator at most |V|.
Rational value_iteration(const MeanPayoffGame& g);

/// True iff player 1 can force a strictly positive liminf average.
bool decide(const MeanPayoffGame& g);

/// A game won by player 1 exactly when `g` is won by player 2.
MeanPayoffGame negate(const MeanPayoffGame& g);

/// A game won by player 1 exactly when player 1 wins every game in `games`.
MeanPayoffGame combine_and(std::span<const MeanPayoffGame> games);

}  // namespace tropkit
