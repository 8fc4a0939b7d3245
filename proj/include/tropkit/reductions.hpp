#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tropkit/core.hpp"
#include "tropkit/maxatom.hpp"
#include "tropkit/matrix.hpp"

namespace tropkit {

/// Solvability callbacks driving the Turing reductions. Return true on SAT.
using TropicalDecider = std::function<bool(const TropicalSystem&)>;
using MinplusDecider = std::function<bool(const TwoSidedSystem&)>;

/// How constructed variables relate to the original ones.
struct VarMap {
  /// forward[v] is the constructed index of original variable v.
  std::vector<std::size_t> forward;
  /// Doubled copies (x') of the original variables; empty when unused.
  std::vector<std::size_t> primed;
  /// Constructed value = -(original value).
  bool negated = false;
};

// ---- tropical -> min-plus -> max-atom ----

struct InequalityPair {
  Vector lhs;
  Vector rhs;
};

/// One Le pair per finite position i, encoding min_{j != i}(r_j + x_j) <= r_i + x_i.
/// A point satisfies every pair iff the row minimum is attained twice (or is +inf).
std::vector<InequalityPair> tropical_row_to_inequalities(std::span<const ExtInt> row);

/// Le system with the same solution set as `a`.
TwoSidedSystem tropical_to_minplus(const TropicalSystem& a);

struct MaxAtomEncoding {
  MaxAtomSystem system;
  VarMap map;
};

/// x solves `a` iff u = -x satisfies the atoms (over Z extended with -inf
/// when `a` has +inf entries). A row with a single finite entry yields the
/// marker atom max{u_i} - 1 >= u_i.
MaxAtomEncoding tropical_to_maxatom(const TropicalSystem& a);

/// Rows l_0 = (a - 1, C + 1, ..., C + 1) and l_i = (a, C + 1, ..., C, ..., C + 1)
/// for every column i outside `positions`, with a placed at `positions`.
TropicalSystem stars_gadget(std::span<const Integer> a, std::size_t n, const Integer& c,
                            std::span<const std::size_t> positions);

struct TropicalEncoding {
  TropicalSystem system;
  VarMap map;
};

/// 2 * nvars columns: x_v at column v and x'_v at column nvars + v. Requires
/// binary form. Solvable iff `s` is satisfiable.
TropicalEncoding maxatom_to_tropical(const MaxAtomSystem& s);

/// Satisfying assignment of the atom system from a tropical witness of
/// maxatom_to_tropical's output.
Assignment pull_back(const VarMap& map, std::span<const ExtInt> x);

// ---- end-to-end solvers ----

/// Witness with min coordinate 0, or nullopt. Over Z infinity is allowed in
/// the output only for Z-infinity systems.
std::optional<Vector> solve_tropical(const TropicalSystem& a);

/// Z-infinity solver through the A_i elimination matrices.
std::optional<Vector> solve_tropical_via_infelim(const TropicalSystem& a);

/// Atoms over u = -x: each Le row a.x <= b.x yields, for every finite b_k,
/// max_j(u_j - a_j) + b_k >= u_k. Eq rows contribute both directions.
MaxAtomSystem minplus_to_maxatom(const TwoSidedSystem& s);

std::optional<Vector> solve_minplus(const TwoSidedSystem& s);

/// Default deciders backed by the max-atom pipeline.
bool tropical_solvable(const TropicalSystem& a);
bool minplus_solvable(const TwoSidedSystem& s);

// ---- infinity elimination ----

struct Canonical {
  /// Normalized, all-inf rows removed.
  TropicalSystem system;
  /// Some column that is +inf in every remaining row, if any.
  std::optional<std::size_t> infinite_column;
};

Canonical canonicalize(const TropicalSystem& a);

/// (m + n - 1) x (2n - 1) matrix over Z. Requires `a` canonical (normalized,
/// no all-inf row or column).
TropicalSystem inf_elimination(const TropicalSystem& a, std::size_t i);

/// Z-infinity solution of `a` from a solution yz of inf_elimination(a, i).
/// All-finite when `a` has no +inf entry.
Vector reconstruct_inf_solution(const TropicalSystem& a, std::size_t i, std::span<const ExtInt> yz);

/// One Z system solvable iff some input is. Inputs must have a row after
/// normalization. `delta` must exceed the largest witness spread; the default
/// is (M_max + 1) * (N_total + 1).
TropicalSystem combine_or(std::span<const TropicalSystem> systems,
                          const std::optional<Integer>& delta = std::nullopt);

// ---- implication ----

/// Does every solution of `a` (over Z) satisfy the row `l`?
bool implies(const TropicalSystem& a, std::span<const ExtInt> l, const TropicalDecider& decider);

/// Same question over Z-infinity.
bool implies_inf(const TropicalSystem& a, std::span<const ExtInt> l,
                 const TropicalDecider& decider);

/// Same solution sets. Dispatches to implies_inf when either side has +inf.
bool equivalent(const TropicalSystem& a, const TropicalSystem& b, const TropicalDecider& decider);

/// Has A u {l} a solution at which the minimum of row l is finite?
bool has_finite_min_in_row(const TropicalSystem& a, std::span<const ExtInt> l,
                           const TropicalDecider& decider);

/// Has `a` a solution with x_i finite?
bool has_solution_with_finite_coord(const TropicalSystem& a, std::size_t i,
                                    const TropicalDecider& decider);

/// Coordinates that are +inf in every solution. Requires `a` solvable.
std::vector<std::size_t> kernel(const TropicalSystem& a, const TropicalDecider& decider);

/// Does every solution of the Eq system `s` (over Z) satisfy lhs . x = rhs . x?
bool minplus_implies(const TwoSidedSystem& s, std::span<const ExtInt> lhs,
                     std::span<const ExtInt> rhs, const MinplusDecider& decider);

}  // namespace tropkit
