#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tropkit/ext_int.hpp"

namespace tropkit {

/// Z (every entry finite) or Z extended with +inf.
enum class Domain { Int, IntInf };

/// Per-row relation of a two-sided min-plus system.
enum class Relation { Eq, Le };

using Vector = std::vector<ExtInt>;

/// Dense row-major grid of ExtInt.
class ExtMatrix {
 public:
  ExtMatrix() = default;
  ExtMatrix(std::size_t rows, std::size_t cols, const ExtInt& fill = ExtInt(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  /// All rows must have length `cols`.
  ExtMatrix(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const ExtInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  ExtInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const ExtInt> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<ExtInt> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  void append_row(std::span<const ExtInt> row);

  bool has_infinity() const;

  friend bool operator==(const ExtMatrix&, const ExtMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExtInt> data_;
};

/// A tropical linear system: x solves it when every row's minimum of
/// a_ij + x_j is attained at least twice.
///
/// Requires at least one column. Zero rows is allowed (everything solves it).
/// Over Domain::Int no entry may be +inf.
class TropicalSystem {
 public:
  TropicalSystem(ExtMatrix entries, Domain domain);

  /// Domain defaults to IntInf when any entry is +inf, Int otherwise.
  static TropicalSystem from_rows(const std::vector<Vector>& rows,
                                  std::optional<Domain> domain = std::nullopt);

  std::size_t rows() const noexcept { return entries_.rows(); }
  std::size_t cols() const noexcept { return entries_.cols(); }
  Domain domain() const noexcept { return domain_; }
  const ExtMatrix& entries() const noexcept { return entries_; }
  const ExtInt& at(std::size_t i, std::size_t j) const { return entries_.at(i, j); }
  std::span<const ExtInt> row(std::size_t i) const { return entries_.row(i); }

  friend bool operator==(const TropicalSystem&, const TropicalSystem&) = default;

 private:
  ExtMatrix entries_;
  Domain domain_;
};

/// min_j(lhs_ij + x_j) (= or <=) min_j(rhs_ij + x_j) for every row i.
class TwoSidedSystem {
 public:
  TwoSidedSystem(ExtMatrix lhs, ExtMatrix rhs, Relation relation, Domain domain);

  static TwoSidedSystem from_rows(const std::vector<Vector>& lhs, const std::vector<Vector>& rhs,
                                  Relation relation, std::optional<Domain> domain = std::nullopt);

  std::size_t rows() const noexcept { return lhs_.rows(); }
  std::size_t cols() const noexcept { return lhs_.cols(); }
  Relation relation() const noexcept { return relation_; }
  Domain domain() const noexcept { return domain_; }
  const ExtMatrix& lhs() const noexcept { return lhs_; }
  const ExtMatrix& rhs() const noexcept { return rhs_; }

  friend bool operator==(const TwoSidedSystem&, const TwoSidedSystem&) = default;

 private:
  ExtMatrix lhs_;
  ExtMatrix rhs_;
  Relation relation_;
  Domain domain_;
};

/// Boolean table marking row-minimum entries.
///
/// Tropical tables have width n and boundary 0. Joint tables of a two-sided
/// system have width 2n: columns [0, n) are the lhs part, [n, 2n) the rhs part,
/// and boundary() == n.
class StarTable {
 public:
  StarTable(std::size_t rows, std::size_t width, std::size_t boundary)
      : rows_(rows), width_(width), boundary_(boundary), stars_(rows * width, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t boundary() const noexcept { return boundary_; }
  bool is_joint() const noexcept { return boundary_ != 0; }
  /// Number of variables (columns of the underlying system).
  std::size_t variables() const noexcept { return is_joint() ? boundary_ : width_; }

  bool at(std::size_t i, std::size_t j) const { return stars_[i * width_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool star) { stars_[i * width_ + j] = star ? 1 : 0; }
  std::size_t count(std::size_t i) const;

  friend bool operator==(const StarTable&, const StarTable&) = default;

 private:
  std::size_t rows_;
  std::size_t width_;
  std::size_t boundary_;
  std::vector<unsigned char> stars_;
};

inline Domain join(Domain a, Domain b) {
  return (a == Domain::IntInf || b == Domain::IntInf) ? Domain::IntInf : Domain::Int;
}

}  // namespace tropkit
