#include "tropkit/mpgame.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>

#include "tropkit/errors.hpp"

namespace tropkit {

MeanPayoffGame::MeanPayoffGame(std::size_t n1, std::size_t n2, std::vector<Edge> edges,
                               std::size_t start)
    : n1_(n1), n2_(n2), edges_(std::move(edges)), start_(start) {
  if (start_ >= n1_) throw PreconditionError("start vertex must belong to player 1");
  std::vector<char> has_out(size(), 0);
  for (const auto& e : edges_) {
    if (e.from >= size() || e.to >= size()) throw PreconditionError("edge endpoint out of range");
    if (owned_by_first(e.from) == owned_by_first(e.to)) {
      throw PreconditionError("edge does not alternate between players");
    }
    has_out[e.from] = 1;
  }
  for (std::size_t v = 0; v < size(); ++v) {
    if (!has_out[v]) throw PreconditionError("vertex " + std::to_string(v) + " has no outgoing edge");
  }
}

Integer MeanPayoffGame::max_weight() const {
  Integer w = 0;
  for (const auto& e : edges_) w = std::max(w, Integer(abs(e.weight)));
  return w;
}

namespace {

std::vector<std::vector<std::size_t>> out_edges(const MeanPayoffGame& g) {
  std::vector<std::vector<std::size_t>> out(g.size());
  for (std::size_t i = 0; i < g.edges().size(); ++i) out[g.edges()[i].from].push_back(i);
  return out;
}

// Mean weight of the cycle reached from the start under fixed choices.
Rational cycle_mean(const MeanPayoffGame& g, const std::vector<std::size_t>& choice) {
  std::vector<std::size_t> seen_at(g.size(), std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> path;
  std::size_t v = g.start();
  while (seen_at[v] == std::numeric_limits<std::size_t>::max()) {
    seen_at[v] = path.size();
    path.push_back(v);
    v = g.edges()[choice[v]].to;
  }
  Integer sum = 0;
  for (std::size_t i = seen_at[v]; i < path.size(); ++i) sum += g.edges()[choice[path[i]]].weight;
  return Rational(sum, Integer(path.size() - seen_at[v]));
}

}  // namespace

Rational value_bruteforce(const MeanPayoffGame& g, std::size_t vertex_cap,
                          std::uint64_t pair_budget) {
  if (g.size() > vertex_cap) throw BudgetExceeded("game exceeds the brute-force vertex cap");
  const auto out = out_edges(g);
  std::vector<std::size_t> p1;
  std::vector<std::size_t> p2;
  std::uint64_t pairs = 1;
  for (std::size_t v = 0; v < g.size(); ++v) {
    (g.owned_by_first(v) ? p1 : p2).push_back(v);
    pairs *= out[v].size();
    if (pairs > pair_budget) throw BudgetExceeded("too many strategy pairs");
  }

  std::vector<std::size_t> idx(g.size(), 0);
  std::vector<std::size_t> choice(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) choice[v] = out[v][0];

  // Odometer over the choices of `owners`; returns false once exhausted.
  auto advance = [&](const std::vector<std::size_t>& owners) {
    for (std::size_t v : owners) {
      if (++idx[v] < out[v].size()) {
        choice[v] = out[v][idx[v]];
        return true;
      }
      idx[v] = 0;
      choice[v] = out[v][0];
    }
    return false;
  };

  std::optional<Rational> best;
  do {
    std::optional<Rational> worst;
    do {
      Rational m = cycle_mean(g, choice);
      if (!worst || m < *worst) worst = m;
    } while (advance(p2));
    if (!best || *worst > *best) best = worst;
  } while (advance(p1));
  return *best;
}

namespace {

template <class T>
Integer iterate(const MeanPayoffGame& g, std::uint64_t rounds) {
  const auto out = out_edges(g);
  std::vector<T> w;
  for (const auto& e : g.edges()) {
    if constexpr (std::is_same_v<T, Integer>) {
      w.push_back(e.weight);
    } else {
      w.push_back(e.weight.template convert_to<T>());
    }
  }
  std::vector<T> cur(g.size(), T(0));
  std::vector<T> next(g.size());
  for (std::uint64_t t = 0; t < rounds; ++t) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      const bool maximize = g.owned_by_first(v);
      T best = w[out[v][0]] + cur[g.edges()[out[v][0]].to];
      for (std::size_t k = 1; k < out[v].size(); ++k) {
        const std::size_t e = out[v][k];
        T val = w[e] + cur[g.edges()[e].to];
        if (maximize ? val > best : val < best) best = std::move(val);
      }
      next[v] = std::move(best);
    }
    std::swap(cur, next);
  }
  return Integer(cur[g.start()]);
}

}  // namespace

Rational value_iteration(const MeanPayoffGame& g) {
  const Integer n = g.size();
  const Integer w = g.max_weight();
  if (w == 0) return Rational(0);
  const Integer rounds = 4 * n * n * n * w;
  if (rounds > Integer(1) << 40) throw BudgetExceeded("value iteration horizon too long");
  const auto steps = rounds.convert_to<std::uint64_t>();
  static const Integer limit = Integer(1) << 62;
  const Integer total = rounds * w < limit ? iterate<std::int64_t>(g, steps)
                                           : iterate<Integer>(g, steps);
  const Rational estimate(total, rounds);
  Rational best;
  Rational best_gap = -1;
  for (Integer q = 1; q <= n; ++q) {
    // Nearest numerator for this denominator.
    Rational scaled = estimate * q;
    Integer p = numerator(scaled) / denominator(scaled);
    for (Integer c : {Integer(p - 1), p, Integer(p + 1)}) {
      Rational cand(c, q);
      Rational gap = abs(cand - estimate);
      if (best_gap < 0 || gap < best_gap) {
        best = cand;
        best_gap = gap;
      }
    }
  }
  return best;
}

bool decide(const MeanPayoffGame& g) { return value_iteration(g) > 0; }

MeanPayoffGame negate(const MeanPayoffGame& g) {
  const std::size_t n1 = g.n1();
  const std::size_t n2 = g.n2();
  const Integer factor = Integer(g.size()) + 1;
  // Old player-2 vertices come first, then the fresh start, then old player-1.
  auto map = [&](std::size_t v) { return v < n1 ? n2 + 1 + v : v - n1; };
  std::vector<Edge> edges;
  edges.reserve(g.edges().size() + 1);
  for (const auto& e : g.edges()) edges.push_back({map(e.from), map(e.to), 1 - factor * e.weight});
  edges.push_back({n2, map(g.start()), 0});
  return MeanPayoffGame(n2 + 1, n1, std::move(edges), n2);
}

MeanPayoffGame combine_and(std::span<const MeanPayoffGame> games) {
  if (games.empty()) throw PreconditionError("combine_and needs at least one game");
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  for (const auto& g : games) {
    n1 += g.n1();
    n2 += g.n2();
  }
  // Player-1 vertices of every copy, then fresh s1; player-2 vertices, then fresh s2.
  const std::size_t s1 = n1;
  const std::size_t s2 = n1 + 1 + n2;
  std::vector<Edge> edges;
  std::size_t off1 = 0;
  std::size_t off2 = n1 + 1;
  for (const auto& g : games) {
    auto map = [&](std::size_t v) { return v < g.n1() ? off1 + v : off2 + (v - g.n1()); };
    for (const auto& e : g.edges()) edges.push_back({map(e.from), map(e.to), e.weight});
    edges.push_back({s2, map(g.start()), 0});
    off1 += g.n1();
    off2 += g.n2();
  }
  edges.push_back({s1, s2, 0});
  return MeanPayoffGame(n1 + 1, n2 + 1, std::move(edges), s1);
}

}  // namespace tropkit
