#include "tropkit/core.hpp"

#include <algorithm>

#include "tropkit/errors.hpp"

namespace tropkit {

namespace {

void require_length(std::span<const ExtInt> x, std::size_t n, const char* what) {
  if (x.size() != n) {
    throw ShapeError(std::string(what) + ": expected length " + std::to_string(n) + ", got " +
                     std::to_string(x.size()));
  }
}

ExtInt row_min(std::span<const ExtInt> row) {
  ExtInt best = ExtInt::infinity();
  for (const auto& e : row) {
    if (e < best) best = e;
  }
  return best;
}

}  // namespace

Vector evaluate(const ExtMatrix& a, std::span<const ExtInt> x) {
  require_length(x, a.cols(), "evaluate");
  Vector out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    ExtInt best = ExtInt::infinity();
    for (std::size_t j = 0; j < a.cols(); ++j) {
      ExtInt term = a.at(i, j) + x[j];
      if (term < best) best = std::move(term);
    }
    out.push_back(std::move(best));
  }
  return out;
}

Vector evaluate(const TropicalSystem& a, std::span<const ExtInt> x) {
  return evaluate(a.entries(), x);
}

bool all_infinite(std::span<const ExtInt> x) {
  return std::all_of(x.begin(), x.end(), [](const ExtInt& e) { return e.is_infinite(); });
}

bool is_tropical_solution(const TropicalSystem& a, std::span<const ExtInt> x) {
  require_length(x, a.cols(), "is_tropical_solution");
  if (all_infinite(x)) throw InvalidSolutionError("candidate solution is all +inf");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    ExtInt best = ExtInt::infinity();
    int hits = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      ExtInt term = a.at(i, j) + x[j];
      if (term < best) {
        best = std::move(term);
        hits = 1;
      } else if (term == best) {
        ++hits;
      }
    }
    if (best.is_finite() && hits < 2) return false;
  }
  return true;
}

bool is_minplus_solution(const TwoSidedSystem& s, std::span<const ExtInt> x) {
  require_length(x, s.cols(), "is_minplus_solution");
  if (all_infinite(x)) throw InvalidSolutionError("candidate solution is all +inf");
  Vector l = evaluate(s.lhs(), x);
  Vector r = evaluate(s.rhs(), x);
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (s.relation() == Relation::Eq ? l[i] != r[i] : r[i] < l[i]) return false;
  }
  return true;
}

StarTable star_table(const TropicalSystem& a) {
  StarTable t(a.rows(), a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    ExtInt m = row_min(a.row(i));
    if (m.is_infinite()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) t.set(i, j, a.at(i, j) == m);
  }
  return t;
}

StarTable joint_star_table(const TwoSidedSystem& s) {
  const std::size_t n = s.cols();
  StarTable t(s.rows(), 2 * n, n);
  for (std::size_t i = 0; i < s.rows(); ++i) {
    ExtInt m = min(row_min(s.lhs().row(i)), row_min(s.rhs().row(i)));
    if (m.is_infinite()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      t.set(i, j, s.lhs().at(i, j) == m);
      t.set(i, n + j, s.rhs().at(i, j) == m);
    }
  }
  return t;
}

TropicalSystem translate_rows(const TropicalSystem& a, std::span<const ExtInt> r) {
  require_length(r, a.rows(), "translate_rows");
  ExtMatrix out = a.entries();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (r[i].is_infinite()) throw PreconditionError("translate_rows: +inf shift");
    for (auto& e : out.row(i)) e += r[i];
  }
  return TropicalSystem(std::move(out), a.domain());
}

namespace {

ExtMatrix translate_columns(const ExtMatrix& a, std::span<const ExtInt> v) {
  ExtMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) += v[j];
  }
  return out;
}

void require_finite(std::span<const ExtInt> v, const char* what) {
  if (std::any_of(v.begin(), v.end(), [](const ExtInt& e) { return e.is_infinite(); })) {
    throw PreconditionError(std::string(what) + ": +inf shift");
  }
}

}  // namespace

TropicalSystem translate_columns(const TropicalSystem& a, std::span<const ExtInt> v) {
  require_length(v, a.cols(), "translate_columns");
  require_finite(v, "translate_columns");
  return TropicalSystem(translate_columns(a.entries(), v), a.domain());
}

TwoSidedSystem translate_columns(const TwoSidedSystem& s, std::span<const ExtInt> v) {
  require_length(v, s.cols(), "translate_columns");
  require_finite(v, "translate_columns");
  return TwoSidedSystem(translate_columns(s.lhs(), v), translate_columns(s.rhs(), v),
                        s.relation(), s.domain());
}

TropicalSystem scale(const TropicalSystem& a, const Integer& c) {
  if (c < 1) throw PreconditionError("scale factor must be positive");
  ExtMatrix out = a.entries();
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (auto& e : out.row(i)) e = c * e;
  }
  return TropicalSystem(std::move(out), a.domain());
}

Normalized normalize(const TropicalSystem& a) {
  ExtMatrix out(0, a.cols());
  Integer bound = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    ExtInt m = row_min(a.row(i));
    if (m.is_infinite()) continue;
    Vector row(a.row(i).begin(), a.row(i).end());
    for (auto& e : row) {
      e -= m.value();
      if (e.is_finite() && e.value() > bound) bound = e.value();
    }
    out.append_row(row);
  }
  return {TropicalSystem(std::move(out), a.domain()), bound};
}

NormalizedTwoSided normalize(const TwoSidedSystem& s) {
  ExtMatrix lhs(0, s.cols());
  ExtMatrix rhs(0, s.cols());
  Integer bound = 0;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    ExtInt m = min(row_min(s.lhs().row(i)), row_min(s.rhs().row(i)));
    if (m.is_infinite()) continue;
    Vector l(s.lhs().row(i).begin(), s.lhs().row(i).end());
    Vector r(s.rhs().row(i).begin(), s.rhs().row(i).end());
    for (auto* side : {&l, &r}) {
      for (auto& e : *side) {
        e -= m.value();
        if (e.is_finite() && e.value() > bound) bound = e.value();
      }
    }
    lhs.append_row(l);
    rhs.append_row(r);
  }
  return {TwoSidedSystem(std::move(lhs), std::move(rhs), s.relation(), s.domain()), bound};
}

Vector finitize(const TropicalSystem& a, std::span<const ExtInt> x) {
  require_length(x, a.cols(), "finitize");
  if (all_infinite(x)) throw InvalidSolutionError("finitize: x is all +inf");
  if (a.domain() != Domain::Int) throw PreconditionError("finitize: system must be over Z");
  if (!is_tropical_solution(a, x)) throw PreconditionError("finitize: x is not a solution");
  Integer spread = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto [lo, hi] = std::minmax_element(a.row(i).begin(), a.row(i).end());
    Integer s = hi->value() - lo->value();
    if (s > spread) spread = s;
  }
  Integer top;
  bool seen = false;
  for (const auto& e : x) {
    if (e.is_finite() && (!seen || e.value() > top)) {
      top = e.value();
      seen = true;
    }
  }
  const ExtInt k(top + spread + 1);
  Vector out(x.begin(), x.end());
  for (auto& e : out) {
    if (e.is_infinite()) e = k;
  }
  if (!is_tropical_solution(a, out)) throw InternalError("finitize produced a non-solution");
  return out;
}

TropicalSystem stack(const TropicalSystem& a, const TropicalSystem& b) {
  if (a.cols() != b.cols()) throw ShapeError("stack: column counts differ");
  ExtMatrix out = a.entries();
  for (std::size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
  return TropicalSystem(std::move(out), join(a.domain(), b.domain()));
}

TropicalSystem with_row(const TropicalSystem& a, std::span<const ExtInt> row) {
  require_length(row, a.cols(), "with_row");
  ExtMatrix out = a.entries();
  out.append_row(row);
  bool inf = std::any_of(row.begin(), row.end(), [](const ExtInt& e) { return e.is_infinite(); });
  return TropicalSystem(std::move(out), inf ? Domain::IntInf : a.domain());
}

TwoSidedSystem stack(const TwoSidedSystem& a, const TwoSidedSystem& b) {
  if (a.cols() != b.cols()) throw ShapeError("stack: column counts differ");
  if (a.relation() != b.relation()) throw PreconditionError("stack: relations differ");
  ExtMatrix l = a.lhs();
  ExtMatrix r = a.rhs();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    l.append_row(b.lhs().row(i));
    r.append_row(b.rhs().row(i));
  }
  return TwoSidedSystem(std::move(l), std::move(r), a.relation(), join(a.domain(), b.domain()));
}

TropicalSystem select_columns(const TropicalSystem& a, std::span<const std::size_t> columns) {
  ExtMatrix out(a.rows(), columns.size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (columns[k] >= a.cols()) throw ShapeError("select_columns: index out of range");
      out.at(i, k) = a.at(i, columns[k]);
    }
  }
  return TropicalSystem(std::move(out), a.domain());
}

std::optional<Integer> max_finite_entry(const ExtMatrix& a) {
  std::optional<Integer> best;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (const auto& e : a.row(i)) {
      if (e.is_finite() && (!best || e.value() > *best)) best = e.value();
    }
  }
  return best;
}

std::optional<Integer> min_finite_entry(const ExtMatrix& a) {
  std::optional<Integer> best;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (const auto& e : a.row(i)) {
      if (e.is_finite() && (!best || e.value() < *best)) best = e.value();
    }
  }
  return best;
}

Vector shift(std::span<const ExtInt> x, const Integer& c) {
  Vector out(x.begin(), x.end());
  for (auto& e : out) e += ExtInt(c);
  return out;
}

Vector shift_to_zero_min(std::span<const ExtInt> x) {
  ExtInt m = row_min(x);
  if (m.is_infinite()) return Vector(x.begin(), x.end());
  return shift(x, -m.value());
}

}  // namespace tropkit
