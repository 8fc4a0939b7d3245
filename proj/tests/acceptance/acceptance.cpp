// One line per acceptance criterion. Exit status is non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tropkit/cli.hpp"
#include "tropkit/core.hpp"
#include "tropkit/dimension.hpp"
#include "tropkit/errors.hpp"
#include "tropkit/io.hpp"
#include "tropkit/maxatom.hpp"
#include "tropkit/mpgame.hpp"
#include "tropkit/oracles.hpp"
#include "tropkit/reductions.hpp"

using namespace tropkit;

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct Failure {
  std::string what;
};

// Counts reported next to a passing criterion.
std::string g_note;

void note(const std::string& text) { g_note = text; }

void check(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string show(const TropicalSystem& a) {
  std::string s = emit(a);
  for (auto& c : s) {
    if (c == '\n') c = '|';
  }
  return s;
}

TropicalSystem random_tropical(Rng& rng, int m, int n, int hi) {
  std::vector<Vector> rows(m, Vector(n));
  for (auto& r : rows) {
    for (auto& e : r) e = uniform(rng, 0, hi);
  }
  return TropicalSystem::from_rows(rows, Domain::Int);
}

// Every matrix of the given shape with entries drawn from `values`.
void for_each_matrix(int m, int n, const std::vector<ExtInt>& values,
                     const std::function<void(const std::vector<Vector>&)>& f) {
  const int cells = m * n;
  std::vector<int> idx(cells, 0);
  const int base = static_cast<int>(values.size());
  while (true) {
    std::vector<Vector> rows(m, Vector(n));
    for (int c = 0; c < cells; ++c) rows[c / n][c % n] = values[idx[c]];
    f(rows);
    int c = 0;
    while (c < cells && ++idx[c] == base) idx[c++] = 0;
    if (c == cells) break;
  }
}

// 2x2 and 2x3 over {0,1,2} exhaustively, then 500 random m,n <= 4 over 0..5.
std::vector<TropicalSystem> finite_suite() {
  std::vector<TropicalSystem> out;
  const std::vector<ExtInt> v012{0, 1, 2};
  for (int n : {2, 3}) {
    for_each_matrix(2, n, v012, [&](const auto& rows) { out.push_back(TropicalSystem::from_rows(rows)); });
  }
  Rng rng(2024);
  for (int t = 0; t < 500; ++t) out.push_back(random_tropical(rng, uniform(rng, 1, 4), uniform(rng, 1, 4), 5));
  return out;
}

// ---- AC1 ----

void ac1() {
  auto f1 = TropicalSystem::from_rows({{1, 0, 0}, {0, 1, 0}});
  auto f2 = TropicalSystem::from_rows(
      {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 1, 1, 0, 0}});
  auto g1 = global_dimension(f1);
  auto g2 = global_dimension(f2);
  check(g1 && g1->projective + 1 == 1, "F1 affine dimension");
  check(g2 && g2->projective + 1 == 4, "F2 affine dimension");
  check(tropical_rank(f1, tropical_solvable) == 2, "F1 rank");
  check(tropical_rank(f2, tropical_solvable) == 4, "F2 rank");
  check(decide_dim_at_least(f2, 4, Convention::Affine), "F2 dim >= 4");
  check(!decide_dim_at_least(f2, 5, Convention::Affine), "F2 dim < 5");
}

// ---- AC2 ----

void ac2() {
  std::size_t sat = 0;
  std::size_t total = 0;
  for (const auto& a : finite_suite()) {
    auto fast = solve_tropical(a);
    auto slow = brute_tropsolv(a);
    ++total;
    sat += slow.has_value();
    check(fast.has_value() == slow.has_value(), "verdict differs on " + show(a));
    if (fast) check(is_tropical_solution(a, *fast), "bad solver witness on " + show(a));
    if (slow) check(is_tropical_solution(a, *slow), "bad oracle witness on " + show(a));
  }
  note(std::to_string(total) + " systems, " + std::to_string(sat) + " solvable");
}

// ---- AC3 ----

void ac3() {
  for (const auto& a : finite_suite()) {
    Integer m = normalize(a).bound;
    check(solution_sets_equal_on_grid(a, tropical_to_minplus(a), m + 1),
          "solution sets differ on " + show(a));
  }
}

// ---- AC4 ----

MaxAtomSystem random_binary_map(Rng& rng) {
  const int nv = uniform(rng, 1, 3);
  const int na = uniform(rng, 1, 4);
  std::vector<MaxAtom> atoms;
  for (int i = 0; i < na; ++i) {
    MaxAtom a;
    a.target = uniform(rng, 0, nv - 1);
    a.terms = {Term{static_cast<std::size_t>(uniform(rng, 0, nv - 1)), 0},
               Term{static_cast<std::size_t>(uniform(rng, 0, nv - 1)), 0}};
    a.k = uniform(rng, -2, 2);
    atoms.push_back(a);
  }
  return MaxAtomSystem(nv, atoms);
}

void ac4() {
  Rng rng(7);
  int sat = 0;
  for (int t = 0; t < 200; ++t) {
    auto s = random_binary_map(rng);
    auto enc = maxatom_to_tropical(s);
    auto direct = solve(s);
    auto brute = brute_tropsolv(enc.system);
    std::string tag = emit(s);
    check(direct.has_value() == brute.has_value(), "verdict differs on " + tag);
    sat += direct.has_value();
    if (direct) check(satisfies(s, *direct), "bad max-atom witness on " + tag);
    if (brute) {
      auto u = pull_back(enc.map, *brute);
      check(satisfies(s, u), "pulled back witness fails on " + tag);
    }
    auto fast = solve_tropical(enc.system);
    check(fast.has_value() == brute.has_value(), "solve_tropical differs on encoded " + tag);
    if (fast) check(satisfies(s, pull_back(enc.map, *fast)), "pulled back solver witness fails");
  }
  note("200 systems, " + std::to_string(sat) + " satisfiable");
}

// ---- AC5 ----

bool canonical_shape(const std::vector<Vector>& rows) {
  const std::size_t n = rows[0].size();
  for (const auto& r : rows) {
    if (std::all_of(r.begin(), r.end(), [](const ExtInt& e) { return e.is_infinite(); })) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    bool all = true;
    for (const auto& r : rows) all = all && r[j].is_infinite();
    if (all) return false;
  }
  return true;
}

void ac5() {
  const std::vector<ExtInt> values{0, 1, ExtInt::infinity()};
  std::size_t seen = 0;
  std::size_t sat = 0;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      for_each_matrix(m, n, values, [&](const std::vector<Vector>& rows) {
        if (!canonical_shape(rows)) return;
        ++seen;
        auto a = TropicalSystem::from_rows(rows, Domain::IntInf);
        auto c = canonicalize(a).system;
        auto ref = brute_tropsolv_inf(a);
        bool any = false;
        for (std::size_t i = 0; i < a.cols(); ++i) {
          auto ai = inf_elimination(c, i);
          auto yz = brute_tropsolv_pairs(ai);
          if (!yz) continue;
          check(is_tropical_solution(ai, *yz), "bad pairs witness on " + show(ai));
          any = true;
          auto x = reconstruct_inf_solution(c, i, *yz);
          check(is_tropical_solution(a, x), "reconstructed witness fails on " + show(a));
        }
        check(any == ref.has_value(), "verdict differs on " + show(a));
        sat += any;
        auto pipe = solve_tropical_via_infelim(a);
        check(pipe.has_value() == ref.has_value(), "infelim pipeline differs on " + show(a));
      });
    }
  }
  check(seen > 10000, "suite too small");

  Rng rng(55);
  int bundles_sat = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<TropicalSystem> parts;
    const int k = uniform(rng, 2, 3);
    bool expect = false;
    for (int p = 0; p < k; ++p) {
      // tall parts are mostly unsolvable, so both outcomes occur
      auto a = random_tropical(rng, uniform(rng, 2, 4), uniform(rng, 2, 3), uniform(rng, 1, 4));
      parts.push_back(a);
      expect = expect || brute_tropsolv(a).has_value();
    }
    auto combined = combine_or(parts);
    auto got = brute_tropsolv_pairs(combined);
    check(got.has_value() == expect, "combine_or disjunction fails");
    if (got) check(is_tropical_solution(combined, *got), "bad combine_or witness");
    check(tropical_solvable(combined) == expect, "combine_or solver verdict");
    bundles_sat += expect;
  }
  note(std::to_string(seen) + " matrices (" + std::to_string(sat) + " solvable), " +
       std::to_string(bundles_sat) + "/100 bundles solvable");
}

// ---- AC6 ----

void ac6() {
  std::vector<TropicalSystem> systems;
  const std::vector<ExtInt> v012{0, 1, 2};
  for (int m = 1; m <= 2; ++m) {
    for_each_matrix(m, 3, v012, [&](const auto& rows) { systems.push_back(TropicalSystem::from_rows(rows)); });
  }
  std::vector<Vector> rows;
  for_each_matrix(1, 3, v012, [&](const auto& r) { rows.push_back(r[0]); });
  std::size_t pairs = 0;
  std::size_t implied = 0;
  for (const auto& a : systems) {
    for (const auto& l : rows) {
      bool got = implies(a, l, tropical_solvable);
      bool want = brute_implies(a, l);
      ++pairs;
      implied += want;
      check(got == want, "implies differs on " + show(a) + " row " + emit_vector(l));
    }
  }

  for (const auto& a : systems) check(equivalent(a, a, tropical_solvable), "not reflexive on " + show(a));
  Rng rng(99);
  int equal = 0;
  for (int t = 0; t < 400; ++t) {
    const auto& a = systems[uniform(rng, 0, static_cast<int>(systems.size()) - 1)];
    const auto& b = systems[uniform(rng, 0, static_cast<int>(systems.size()) - 1)];
    bool ab = equivalent(a, b, tropical_solvable);
    check(ab == equivalent(b, a, tropical_solvable), "not symmetric on " + show(a) + " / " + show(b));
    check(ab == solution_sets_equal_on_grid(a, b, 15), "equivalence differs from grid on " + show(a) + " / " + show(b));
    equal += ab;
  }
  auto p = TropicalSystem::from_rows({{0, 0, 0}});
  auto q = TropicalSystem::from_rows({{0, 0, 5}});
  check(!equivalent(p, q, tropical_solvable), "fails to separate the fixtures");
  note(std::to_string(pairs) + " pairs (" + std::to_string(implied) + " implied), " +
       std::to_string(equal) + "/400 sampled pairs equivalent");
}

// ---- AC7 ----

// Canonical edge mask up to relabelling.
std::uint32_t canonical_mask(int n, const std::vector<std::pair<int, int>>& pairs, std::uint32_t mask) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<std::pair<int, int>, int> index;
  for (int e = 0; e < static_cast<int>(pairs.size()); ++e) index[pairs[e]] = e;
  std::uint32_t best = mask;
  do {
    std::uint32_t m2 = 0;
    for (int e = 0; e < static_cast<int>(pairs.size()); ++e) {
      if (!(mask >> e & 1)) continue;
      int u = perm[pairs[e].first];
      int v = perm[pairs[e].second];
      if (u > v) std::swap(u, v);
      m2 |= std::uint32_t{1} << index[{u, v}];
    }
    best = std::min(best, m2);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::size_t g_vc_checked = 0;

void check_vc(const Graph& g) {
  const std::size_t n = g.vertices();
  const std::size_t k = min_vertex_cover(g);
  if (3 * k > 2 * n) return;
  ++g_vc_checked;
  auto a = vc_to_tropical(g);
  Vector zero(a.cols(), ExtInt(0));
  std::string tag = emit(g);
  check(local_dimension(a, zero) == n - k, "local dimension differs from n - vc on " + tag);
  auto glob = global_dimension(a);
  check(glob && glob->projective == n - k, "global dimension differs on " + tag);
  auto s = vc_to_minplus(g);
  auto size = max_btf(joint_star_table(s), BtfKind::MinPlusEq).size;
  check(size == n - k + 1, "min-plus form size differs on " + tag);
}

void ac7() {
  std::size_t graphs = 0;
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::set<std::uint32_t> done;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
      if (std::popcount(mask) < n - 1) continue;
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (mask >> e & 1) edges.emplace_back(pairs[e].first, pairs[e].second);
      }
      Graph g(n, edges);
      if (!g.connected()) continue;
      if (!done.insert(canonical_mask(n, pairs, mask)).second) continue;
      ++graphs;
      check_vc(g);
    }
  }
  check(graphs == 1 + 2 + 6 + 21 + 112, "unexpected number of connected graphs");

  Rng rng(77);
  int tested = 0;
  while (tested < 20) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < 7; ++u) {
      for (std::size_t v = u + 1; v < 7; ++v) {
        if (uniform(rng, 0, 2) == 0) edges.emplace_back(u, v);
      }
    }
    Graph g(7, edges);
    if (!g.connected()) continue;
    ++tested;
    check_vc(g);
  }
  note(std::to_string(graphs) + " graphs up to isomorphism + 20 random, " +
       std::to_string(g_vc_checked) + " within the cover bound");
}

// ---- AC8 ----

void compare_btf(const StarTable& t, BtfKind kind, const std::string& tag) {
  std::size_t fast = 0;
  try {
    fast = max_btf(t, kind).size;
  } catch (const PreconditionError&) {
    fast = 0;
  }
  check(fast == naive_max_btf(t, kind), "max_btf differs from naive on " + tag);
}

void ac8() {
  Rng rng(8);
  std::size_t points = 0;
  for (int t = 0; t < 150; ++t) {
    auto a = random_tropical(rng, uniform(rng, 1, 4), uniform(rng, 2, 4), 3);
    for (const auto& x : enumerate_solutions(a, normalize(a).bound + 1)) {
      compare_btf(star_table(translate_columns(a, x)), BtfKind::Tropical, show(a) + " at " + emit_vector(x));
      ++points;
    }
  }
  for (Relation rel : {Relation::Eq, Relation::Le}) {
    for (int t = 0; t < 150; ++t) {
      const int m = uniform(rng, 1, 4);
      const int n = uniform(rng, 2, 4);
      std::vector<Vector> l(m, Vector(n));
      std::vector<Vector> r(m, Vector(n));
      for (auto* side : {&l, &r}) {
        for (auto& row : *side) {
          for (auto& e : row) e = uniform(rng, 0, 3);
        }
      }
      auto s = TwoSidedSystem::from_rows(l, r, rel);
      for (const auto& x : enumerate_solutions(s, 4)) {
        compare_btf(joint_star_table(translate_columns(s, x)), kind_of(rel), emit(s));
        ++points;
      }
    }
  }
  check(points > 500, "too few solution points");
  note(std::to_string(points) + " solution points");
}

// ---- AC9 ----

MeanPayoffGame random_game(Rng& rng, int max_vertices) {
  const int total = uniform(rng, 2, max_vertices);
  const int n1 = uniform(rng, 1, total - 1);
  const int n2 = total - n1;
  std::vector<Edge> edges;
  for (int v = 0; v < total; ++v) {
    const bool first = v < n1;
    const int lo = first ? n1 : 0;
    const int hi = first ? total - 1 : n1 - 1;
    std::set<int> targets;
    const int deg = uniform(rng, 1, 2);
    for (int d = 0; d < deg; ++d) targets.insert(uniform(rng, lo, hi));
    for (int u : targets) {
      edges.push_back({static_cast<std::size_t>(v), static_cast<std::size_t>(u), uniform(rng, -3, 3)});
    }
  }
  return MeanPayoffGame(n1, n2, edges, uniform(rng, 0, n1 - 1));
}

void ac9() {
  Rng rng(9);
  int wins = 0;
  for (int t = 0; t < 500; ++t) {
    auto g = random_game(rng, 8);
    bool d = decide(g);
    check(d == (value_bruteforce(g) > 0), "decide differs from brute force on " + emit(g));
    check(value_iteration(g) == value_bruteforce(g), "value differs on " + emit(g));
    auto neg = negate(g);
    check(decide(neg) == !d, "negate does not flip on " + emit(g));
    check((value_bruteforce(neg) > 0) == !d, "negated game brute force on " + emit(g));
    wins += d;
  }
  check(wins > 50 && wins < 450, "random games are one-sided");
  int conj = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<MeanPayoffGame> games;
    const int k = uniform(rng, 2, 3);
    bool all = true;
    for (int i = 0; i < k; ++i) {
      games.push_back(random_game(rng, 6));
      all = all && decide(games.back());
    }
    check(decide(combine_and(games)) == all, "combine_and differs from conjunction");
    conj += all;
  }
  note("500 games (" + std::to_string(wins) + " won by player 1), " + std::to_string(conj) +
       "/100 bundles all won");
}

// ---- AC10 ----

void ac10() {
  Rng rng(10);
  std::size_t yes = 0;
  for (int t = 0; t < 120; ++t) {
    auto a = random_tropical(rng, uniform(rng, 1, 3), uniform(rng, 2, 4), 3);
    for (int k = 0; k <= static_cast<int>(a.cols()); ++k) {
      if (!decide_dim_at_least(a, k, Convention::Projective)) continue;
      ++yes;
      auto cert = make_certificate(a);
      check(cert.has_value(), "no certificate for a yes instance " + show(a));
      check(cert->claimed_k >= k, "certificate claims too little on " + show(a));
      auto at_k = *cert;
      at_k.claimed_k = k;
      check(verify_certificate(a, *cert) && verify_certificate(a, at_k), "certificate rejected on " + show(a));
    }
  }
  for (int t = 0; t < 60; ++t) {
    const int m = uniform(rng, 1, 3);
    const int n = uniform(rng, 2, 3);
    std::vector<Vector> l(m, Vector(n));
    std::vector<Vector> r(m, Vector(n));
    for (auto* side : {&l, &r}) {
      for (auto& row : *side) {
        for (auto& e : row) e = uniform(rng, 0, 2);
      }
    }
    auto s = TwoSidedSystem::from_rows(l, r, t % 2 ? Relation::Eq : Relation::Le);
    for (int k = 0; k <= n; ++k) {
      if (!decide_dim_at_least(s, k, Convention::Projective)) continue;
      ++yes;
      auto cert = make_certificate(s);
      check(cert && verify_certificate(s, *cert), "min-plus certificate rejected on " + emit(s));
    }
  }
  check(yes > 100, "too few yes instances");
  note(std::to_string(yes) + " yes instances, 20 mutations");

  auto f2 = TropicalSystem::from_rows(
      {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 1, 1, 0, 0}});
  DimensionCertificate base{Vector(5, ExtInt(0)), {{{0}, {1}, {2}, {3, 4}}, {3, 3, 3, 3}}, 3};
  check(verify_certificate(f2, base), "fixed certificate rejected");
  std::vector<std::function<void(DimensionCertificate&)>> mutations = {
      [](auto& c) { c.claimed_k = 4; },
      [](auto& c) { c.claimed_k = 5; },
      [](auto& c) { c.claimed_k = 100; },
      [](auto& c) { c.claimed_k = -1; },
      [](auto& c) { c.witness[0] = -1; },
      [](auto& c) { c.witness[4] = 1; },
      [](auto& c) { c.witness[3] = 1; },
      [](auto& c) { c.witness.pop_back(); },
      [](auto& c) { c.witness.push_back(0); },
      [](auto& c) { c.form.blocks.erase(c.form.blocks.begin()); },
      [](auto& c) { c.form.blocks[3].push_back(0); },
      [](auto& c) { c.form.blocks[3].push_back(5); },
      [](auto& c) { c.form.blocks.insert(c.form.blocks.begin() + 1, std::vector<std::size_t>{}); },
      [](auto& c) { c.form.blocks = {{0}, {1}, {2}, {3}, {4}}; },
      [](auto& c) { c.form.blocks = {{0, 1}, {2}, {3, 4}}; },
      [](auto& c) { c.form.blocks = {{3, 4}, {0}, {1}, {2}}; },
      [](auto& c) { c.form.rows[0] = 0; },
      [](auto& c) { c.form.rows[3] = 2; },
      [](auto& c) { c.form.rows[1] = 7; },
      [](auto& c) { c.form.rows.pop_back(); },
  };
  check(mutations.size() == 20, "mutation count");
  for (std::size_t i = 0; i < mutations.size(); ++i) {
    auto c = base;
    mutations[i](c);
    check(!verify_certificate(f2, c), "mutation " + std::to_string(i) + " accepted");
  }
}

// ---- AC11 ----

std::string run_capture(const std::vector<std::string>& args, int& code) {
  std::istringstream in;
  std::ostringstream out;
  std::ostringstream err;
  code = run(args, in, out, err);
  return out.str();
}

Instance random_instance(Rng& rng, int kind) {
  auto entry = [&](bool inf_ok) -> ExtInt {
    if (inf_ok && uniform(rng, 0, 4) == 0) return ExtInt::infinity();
    return uniform(rng, -50, 50);
  };
  switch (kind) {
    case 0: {
      const int m = uniform(rng, 0, 4);
      const int n = uniform(rng, 1, 5);
      const bool inf = uniform(rng, 0, 1);
      std::vector<Vector> rows(m, Vector(n));
      for (auto& r : rows) {
        for (auto& e : r) e = entry(inf);
      }
      if (m == 0) return TropicalSystem(ExtMatrix(0, n), inf ? Domain::IntInf : Domain::Int);
      return TropicalSystem::from_rows(rows, inf ? Domain::IntInf : Domain::Int);
    }
    case 1: {
      const int m = uniform(rng, 1, 4);
      const int n = uniform(rng, 1, 4);
      const bool inf = uniform(rng, 0, 1);
      std::vector<Vector> l(m, Vector(n));
      std::vector<Vector> r(m, Vector(n));
      for (auto* side : {&l, &r}) {
        for (auto& row : *side) {
          for (auto& e : row) e = entry(inf);
        }
      }
      return TwoSidedSystem::from_rows(l, r, uniform(rng, 0, 1) ? Relation::Eq : Relation::Le,
                                       inf ? Domain::IntInf : Domain::Int);
    }
    case 2: {
      const int nv = uniform(rng, 1, 5);
      std::vector<MaxAtom> atoms(uniform(rng, 0, 5));
      for (auto& a : atoms) {
        a.target = uniform(rng, 0, nv - 1);
        a.k = uniform(rng, -9, 9);
        a.terms.resize(uniform(rng, 1, 3));
        for (auto& t : a.terms) t = {static_cast<std::size_t>(uniform(rng, 0, nv - 1)), uniform(rng, -3, 3)};
      }
      return MaxAtomSystem(nv, atoms);
    }
    case 3:
      return random_game(rng, 8);
    case 4: {
      const int n = uniform(rng, 1, 7);
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (uniform(rng, 0, 1)) edges.emplace_back(u, v);
        }
      }
      return Graph(n, edges);
    }
    default: {
      DimensionCertificate c;
      c.claimed_k = uniform(rng, 0, 5);
      const int n = uniform(rng, 1, 5);
      for (int j = 0; j < n; ++j) c.witness.push_back(entry(true));
      for (int b = uniform(rng, 0, 3); b > 0; --b) {
        std::vector<std::size_t> blk(uniform(rng, 1, 3));
        for (auto& v : blk) v = uniform(rng, 0, 9);
        c.form.blocks.push_back(blk);
      }
      for (int r = uniform(rng, 0, 4); r > 0; --r) {
        c.form.rows.push_back(uniform(rng, 0, 3) == 0 ? kUnassigned : uniform(rng, 0, 3));
      }
      return c;
    }
  }
}

void ac11() {
  const std::string dir = TROPKIT_CORPUS;
  auto p = [&](const char* f) { return dir + "/" + f; };
  const std::vector<std::vector<std::string>> commands = {
      {"solve", p("f1.trop")},
      {"solve", p("f1.trop"), "--oracle"},
      {"solve", p("f2.trop"), "--via", "infelim"},
      {"solve", p("inf.trop")},
      {"solve", p("inf.trop"), "--oracle"},
      {"minplus-solve", p("vc_p3.mp")},
      {"dim", p("f2.trop"), "--global", "--affine", "--at-least", "4"},
      {"dim", p("f1.trop"), "--at", "0,0,0", "--projective", "--emit-cert", "-"},
      {"certify", p("f2.trop"), p("f2.cert")},
      {"implies", p("a.trop"), p("l.trop")},
      {"implies", p("a.trop"), p("l.trop"), "--oracle"},
      {"equiv", p("f1.trop"), p("f1.trop")},
      {"reduce", p("f1.trop"), "--to", "map"},
      {"reduce", p("f1.trop"), "--to", "minplus"},
      {"reduce", p("small.map"), "--to", "tropical-of-map"},
      {"reduce", p("inf.trop"), "--to", "finite"},
      {"gen", "vc", p("p3.graph")},
      {"gen", "vc", p("p3.graph"), "--minplus"},
      {"mpg", "solve", p("cycle.mpg")},
      {"mpg", "negate", p("cycle.mpg")},
      {"mpg", "combine", p("cycle.mpg"), p("cycle.mpg")},
      {"rank", p("f2.trop")},
  };
  for (const auto& cmd : commands) {
    int c1 = 0;
    int c2 = 0;
    std::string first = run_capture(cmd, c1);
    std::string second = run_capture(cmd, c2);
    check(c1 == c2 && first == second, "rerun differs for " + cmd[0]);
    check(c1 == 0 || c1 == 1, "command failed: " + cmd[0] + " " + cmd[1]);
  }
  int code = 0;
  run_capture({"solve", p("f1.trop")}, code);
  check(code == 0, "solve f1");
  run_capture({"dim", p("f2.trop"), "--global", "--affine", "--at-least", "4"}, code);
  check(code == 0, "dim f2 at least 4");
  run_capture({"implies", p("a.trop"), p("l.trop")}, code);
  check(code == 1, "implies fixture");

  Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    Instance inst = random_instance(rng, t % 6);
    std::string text = emit(inst);
    Instance back = parse_instance(text);
    check(back == inst, "parse(emit(x)) != x for " + text);
    check(emit(back) == text, "emit is not stable for " + text);
  }
}

struct Criterion {
  const char* name;
  const char* summary;
  double limit_seconds;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> all = {
      {"AC1", "fixtures F1/F2 dimension and rank", 1, ac1},
      {"AC2", "solver agrees with grid oracle", 120, ac2},
      {"AC3", "tropical to min-plus preserves solutions", 120, ac3},
      {"AC4", "max-atom to tropical round trip", 60, ac4},
      {"AC5", "infinity elimination and combine_or", 300, ac5},
      {"AC6", "implication and equivalence", 300, ac6},
      {"AC7", "vertex cover dimension", 300, ac7},
      {"AC8", "max_btf agrees with naive enumeration", 300, ac8},
      {"AC9", "mean payoff games", 120, ac9},
      {"AC10", "dimension certificates", 300, ac10},
      {"AC11", "CLI determinism and round trip", 300, ac11},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    g_note.clear();
    try {
      c.body();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs > c.limit_seconds) {
      ok = false;
      detail = "time limit exceeded";
    } else if (ok) {
      detail = g_note;
    }
    std::printf("%-5s %s  %-45s %8.2fs%s%s\n", c.name, ok ? "PASS" : "FAIL", c.summary, secs,
                detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
    failed += ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
