#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tropkit/ext_int.hpp"

namespace tropkit {

struct Term {
  std::size_t var = 0;
  Integer offset = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// max_t(x_{var_t} + offset_t) + k >= x_target
struct MaxAtom {
  std::size_t target = 0;
  std::vector<Term> terms;
  Integer k = 0;

  friend bool operator==(const MaxAtom&, const MaxAtom&) = default;
};

class MaxAtomSystem {
 public:
  MaxAtomSystem() = default;
  /// Throws ShapeError on an out-of-range index or an atom without terms.
  MaxAtomSystem(std::size_t nvars, std::vector<MaxAtom> atoms);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<MaxAtom>& atoms() const noexcept { return atoms_; }

  /// Every atom has exactly two terms, both with offset 0.
  bool is_binary() const;

  friend bool operator==(const MaxAtomSystem&, const MaxAtomSystem&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<MaxAtom> atoms_;
};

using Assignment = std::vector<Integer>;

bool atom_holds(const MaxAtom& atom, std::span<const Integer> x);
bool satisfies(const MaxAtomSystem& s, std::span<const Integer> x);

/// Sum over atoms of |k| plus the absolute term offsets.
Integer constant_sum(const MaxAtomSystem& s);

/// Rewrites into atoms of the form max{x,y} + k >= z. Fresh variables are
/// appended after the original ones; a solution of the result restricted to
/// the first nvars() variables solves `s`.
MaxAtomSystem to_binary_form(const MaxAtomSystem& s);

/// Greatest-fixpoint solver. Starts from 0 and lowers targets of violated
/// atoms until nothing is violated. `spread` bounds the max - min of some
/// solution (defaults to constant_sum); a variable falling below -spread
/// proves unsatisfiability. A returned assignment lies in [-spread, 0].
std::optional<Assignment> solve(const MaxAtomSystem& s,
                                const std::optional<Integer>& spread = std::nullopt);

/// Same iteration over Z extended with -inf: a variable falling below -spread
/// becomes -inf (nullopt). Returns nullopt overall iff every variable ends at
/// -inf, i.e. there is no solution with a finite coordinate.
using PartialAssignment = std::vector<std::optional<Integer>>;
std::optional<PartialAssignment> solve_with_neg_inf(
    const MaxAtomSystem& s, const std::optional<Integer>& spread = std::nullopt);

/// Literal check with -inf entries (nullopt) allowed.
bool satisfies(const MaxAtomSystem& s, std::span<const std::optional<Integer>> x);

}  // namespace tropkit
