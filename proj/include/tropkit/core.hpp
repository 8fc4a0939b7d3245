#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tropkit/matrix.hpp"

namespace tropkit {

/// Component i is min_j (a_ij + x_j).
Vector evaluate(const ExtMatrix& a, std::span<const ExtInt> x);
Vector evaluate(const TropicalSystem& a, std::span<const ExtInt> x);

bool all_infinite(std::span<const ExtInt> x);

/// True iff every row's minimum of a_ij + x_j is attained at least twice.
/// A row whose every term is +inf counts as satisfied.
/// Throws InvalidSolutionError when x is all +inf, ShapeError on length mismatch.
bool is_tropical_solution(const TropicalSystem& a, std::span<const ExtInt> x);

/// Row-wise equality or <= of the two evaluations, per the relation tag.
bool is_minplus_solution(const TwoSidedSystem& s, std::span<const ExtInt> x);

/// Star at (i,j) iff a_ij is finite and equals the minimum of row i.
StarTable star_table(const TropicalSystem& a);

/// Star at a joint-row position iff the entry is finite and equals the
/// minimum over the whole 2n-entry row (lhs | rhs).
StarTable joint_star_table(const TwoSidedSystem& s);

/// Entrywise a_ij + r_i. Every r_i must be finite.
TropicalSystem translate_rows(const TropicalSystem& a, std::span<const ExtInt> r);
/// Entrywise a_ij + v_j. x solves the result iff x + v solves `a`.
TropicalSystem translate_columns(const TropicalSystem& a, std::span<const ExtInt> v);
TwoSidedSystem translate_columns(const TwoSidedSystem& s, std::span<const ExtInt> v);
/// Entrywise c * a_ij for c >= 1.
TropicalSystem scale(const TropicalSystem& a, const Integer& c);

struct Normalized {
  TropicalSystem system;
  /// Largest finite entry after normalization (0 if there is none).
  Integer bound;
};

/// Shifts every row so its finite minimum is 0 and drops all-inf rows.
Normalized normalize(const TropicalSystem& a);

struct NormalizedTwoSided {
  TwoSidedSystem system;
  Integer bound;
};

/// Shifts each row of both sides by the joint-row minimum and drops rows
/// that are +inf on both sides.
NormalizedTwoSided normalize(const TwoSidedSystem& s);

/// Replaces every +inf coordinate of a Z-infinity solution of a Z system by
/// K = max_finite(x) + M + 1, where M is the largest row spread of `a`
/// (for a normalized system: its largest entry). The result solves `a` over Z.
Vector finitize(const TropicalSystem& a, std::span<const ExtInt> x);

/// Rows of `a` followed by rows of `b` (same column count).
TropicalSystem stack(const TropicalSystem& a, const TropicalSystem& b);
TropicalSystem with_row(const TropicalSystem& a, std::span<const ExtInt> row);
TwoSidedSystem stack(const TwoSidedSystem& a, const TwoSidedSystem& b);

/// The system restricted to the given columns, in the given order.
TropicalSystem select_columns(const TropicalSystem& a, std::span<const std::size_t> columns);

/// Largest finite entry, or nullopt if every entry is +inf.
std::optional<Integer> max_finite_entry(const ExtMatrix& a);
std::optional<Integer> min_finite_entry(const ExtMatrix& a);

/// x + c * (1, ..., 1); +inf coordinates unchanged.
Vector shift(std::span<const ExtInt> x, const Integer& c);

/// Shifts x so that its smallest finite coordinate is 0.
Vector shift_to_zero_min(std::span<const ExtInt> x);

}  // namespace tropkit
