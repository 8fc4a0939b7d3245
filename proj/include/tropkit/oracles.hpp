#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "tropkit/dimension.hpp"
#include "tropkit/matrix.hpp"

namespace tropkit {

// Exhaustive reference implementations. They share only the basic types with
// the solvers. Every scan counts visited nodes and throws BudgetExceeded once
// `budget` is exhausted.

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

/// Lexicographically first solution in {0..M}^n (M from the normalized system).
std::optional<Vector> brute_tropsolv(const TropicalSystem& a,
                                     std::uint64_t budget = kDefaultOracleBudget);

/// Lexicographically first solution with coordinates in {0..(M+1)n, inf},
/// inf ordered last.
std::optional<Vector> brute_tropsolv_inf(const TropicalSystem& a,
                                         std::uint64_t budget = kDefaultOracleBudget);

/// Tries every choice of two minimizing columns per row (and, over
/// Z-infinity, every finite support) and solves the resulting difference
/// constraints. Exact for any entry size; the witness is not lexicographic.
std::optional<Vector> brute_tropsolv_pairs(const TropicalSystem& a,
                                           std::uint64_t budget = kDefaultOracleBudget);

/// Scan of {0..C}^n (plus inf over Z-infinity), C the sum of the constants the
/// system induces on its atoms.
std::optional<Vector> brute_minplus(const TwoSidedSystem& s,
                                    std::uint64_t budget = kDefaultOracleBudget);

/// No solution of `a` in {0..(2n+1)M+1}^n violates `l`.
bool brute_implies(const TropicalSystem& a, std::span<const ExtInt> l,
                   std::uint64_t budget = kDefaultOracleBudget);

/// Same over {0..(2n+1)(M+1)+1, inf}^n.
bool brute_implies_inf(const TropicalSystem& a, std::span<const ExtInt> l,
                       std::uint64_t budget = kDefaultOracleBudget);

/// No solution of the Eq system in {0..(2n+1)(M+1)+1}^n violates lhs.x = rhs.x.
bool brute_minplus_implies(const TwoSidedSystem& s, std::span<const ExtInt> lhs,
                           std::span<const ExtInt> rhs,
                           std::uint64_t budget = kDefaultOracleBudget);

using AnySystem = std::variant<TropicalSystem, TwoSidedSystem>;

/// Same solution predicate at every point of {0..bound}^n.
bool solution_sets_equal_on_grid(const AnySystem& p, const AnySystem& q, const Integer& bound,
                                 std::uint64_t budget = kDefaultOracleBudget);

/// All solutions in {0..bound}^n in lexicographic order.
std::vector<Vector> enumerate_solutions(const AnySystem& s, const Integer& bound,
                                        std::uint64_t budget = kDefaultOracleBudget);

/// Largest valid form size found by trying every ordered partition of the
/// columns and every row assignment; 0 if none is valid.
std::size_t naive_max_btf(const StarTable& t, BtfKind kind,
                          std::uint64_t budget = kDefaultOracleBudget);

}  // namespace tropkit
