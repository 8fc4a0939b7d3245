#include "tropkit/matrix.hpp"

#include <algorithm>

#include "tropkit/errors.hpp"

namespace tropkit {

ExtMatrix::ExtMatrix(std::size_t cols, const std::vector<Vector>& rows)
    : rows_(rows.size()), cols_(cols) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols) throw ShapeError("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

void ExtMatrix::append_row(std::span<const ExtInt> row) {
  if (row.size() != cols_) throw ShapeError("appended row has wrong length");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

bool ExtMatrix::has_infinity() const {
  return std::any_of(data_.begin(), data_.end(), [](const ExtInt& x) { return x.is_infinite(); });
}

TropicalSystem::TropicalSystem(ExtMatrix entries, Domain domain)
    : entries_(std::move(entries)), domain_(domain) {
  if (entries_.cols() == 0) throw ShapeError("tropical system needs at least one column");
  if (domain_ == Domain::Int && entries_.has_infinity()) {
    throw PreconditionError("+inf entry in a Z-domain system");
  }
}

TropicalSystem TropicalSystem::from_rows(const std::vector<Vector>& rows,
                                         std::optional<Domain> domain) {
  if (rows.empty()) throw ShapeError("from_rows needs at least one row");
  ExtMatrix m(rows.front().size(), rows);
  Domain d = domain.value_or(m.has_infinity() ? Domain::IntInf : Domain::Int);
  return TropicalSystem(std::move(m), d);
}

TwoSidedSystem::TwoSidedSystem(ExtMatrix lhs, ExtMatrix rhs, Relation relation, Domain domain)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)), relation_(relation), domain_(domain) {
  if (lhs_.rows() != rhs_.rows() || lhs_.cols() != rhs_.cols()) {
    throw ShapeError("two-sided system sides differ in shape");
  }
  if (lhs_.cols() == 0) throw ShapeError("two-sided system needs at least one column");
  if (domain_ == Domain::Int && (lhs_.has_infinity() || rhs_.has_infinity())) {
    throw PreconditionError("+inf entry in a Z-domain system");
  }
}

TwoSidedSystem TwoSidedSystem::from_rows(const std::vector<Vector>& lhs,
                                         const std::vector<Vector>& rhs, Relation relation,
                                         std::optional<Domain> domain) {
  if (lhs.empty()) throw ShapeError("from_rows needs at least one row");
  ExtMatrix a(lhs.front().size(), lhs);
  ExtMatrix b(lhs.front().size(), rhs);
  Domain d = domain.value_or((a.has_infinity() || b.has_infinity()) ? Domain::IntInf : Domain::Int);
  return TwoSidedSystem(std::move(a), std::move(b), relation, d);
}

std::size_t StarTable::count(std::size_t i) const {
  return static_cast<std::size_t>(
      std::count(stars_.begin() + static_cast<std::ptrdiff_t>(i * width_),
                 stars_.begin() + static_cast<std::ptrdiff_t>((i + 1) * width_), 1));
}

}  // namespace tropkit
