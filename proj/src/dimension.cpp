#include "tropkit/dimension.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "tropkit/core.hpp"
#include "tropkit/errors.hpp"

namespace tropkit {

namespace {

using Mask = std::uint32_t;

struct RowMasks {
  Mask a = 0;  // stars of the A part (all stars for tropical tables)
  Mask b = 0;  // stars of the B part (joint tables only)
  Mask all() const { return a | b; }
};

std::vector<RowMasks> row_masks(const StarTable& t) {
  const std::size_t n = t.variables();
  std::vector<RowMasks> out(t.rows());
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t v = 0; v < n; ++v) {
      if (t.at(r, v)) out[r].a |= Mask{1} << v;
      if (t.is_joint() && t.at(r, n + v)) out[r].b |= Mask{1} << v;
    }
  }
  return out;
}

void check_kind(const StarTable& t, BtfKind kind) {
  if ((kind == BtfKind::Tropical) == t.is_joint()) {
    throw PreconditionError("star table shape does not match the form kind");
  }
}

// Condition (1) for a row placed in block `blk`.
bool block_condition(const RowMasks& r, Mask blk, BtfKind kind) {
  switch (kind) {
    case BtfKind::Tropical:
      return std::popcount(r.a & blk) >= 2;
    case BtfKind::MinPlusEq:
      return (r.a & blk) != 0 && (r.b & blk) != 0;
    case BtfKind::MinPlusIneq:
      return (r.b & blk) == 0 || (r.a & blk) != 0;
  }
  return false;
}

std::vector<std::size_t> mask_indices(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; m != 0; ++v, m >>= 1) {
    if (m & 1) out.push_back(v);
  }
  return out;
}

}  // namespace

bool verify_btf(const StarTable& t, const BlockTriangularForm& f, BtfKind kind) {
  check_kind(t, kind);
  const std::size_t n = t.variables();
  std::vector<std::size_t> owner(n, kUnassigned);
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    if (f.blocks[i].empty()) throw PreconditionError("empty column block");
    for (std::size_t v : f.blocks[i]) {
      if (v >= n) throw PreconditionError("block column out of range");
      if (owner[v] != kUnassigned) throw PreconditionError("column in two blocks");
      owner[v] = i;
    }
  }
  if (std::find(owner.begin(), owner.end(), kUnassigned) != owner.end()) {
    throw PreconditionError("blocks do not cover every column");
  }
  if (f.rows.size() != t.rows()) throw PreconditionError("row assignment has wrong length");

  const auto masks = row_masks(t);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const std::size_t i = f.rows[r];
    if (i >= f.blocks.size()) throw PreconditionError("row assigned to a missing block");
    Mask blk = 0;
    for (std::size_t v : f.blocks[i]) blk |= Mask{1} << v;
    for (std::size_t v : mask_indices(masks[r].all())) {
      if (owner[v] > i) return false;
    }
    if (!block_condition(masks[r], blk, kind)) return false;
  }
  return true;
}

BtfResult max_btf(const StarTable& t, BtfKind kind, std::size_t column_cap) {
  check_kind(t, kind);
  const std::size_t n = t.variables();
  if (n > column_cap || n > 20) throw BudgetExceeded("too many columns for max_btf");
  if (n == 0) throw PreconditionError("max_btf on a table without columns");
  const auto masks = row_masks(t);
  if (kind != BtfKind::MinPlusIneq) {
    for (const auto& r : masks) {
      if (r.all() == 0) throw PreconditionError("row without stars admits no form");
    }
  }
  const Mask full = (Mask{1} << n) - 1;

  // Rows whose last star lands in `blk` when placed after `done`.
  auto valid = [&](Mask done, Mask blk) {
    const Mask upto = done | blk;
    for (const auto& r : masks) {
      const Mask s = r.all();
      if ((s & blk) == 0 || (s & ~upto) != 0) continue;
      // Ineq rows can drop to a later block unless this one is the last.
      if (kind == BtfKind::MinPlusIneq && upto != full) continue;
      if (!block_condition(r, blk, kind)) return false;
    }
    return true;
  };

  // best[P] = max number of blocks covering the columns outside P; -1 if none.
  std::vector<int> best(std::size_t{1} << n, -2);
  best[full] = 0;
  std::function<int(Mask)> solve = [&](Mask done) -> int {
    int& memo = best[done];
    if (memo != -2) return memo;
    int top = -1;
    const Mask rest = full & ~done;
    for (Mask blk = rest; blk != 0; blk = (blk - 1) & rest) {
      if (!valid(done, blk)) continue;
      const int sub = solve(done | blk);
      if (sub >= 0) top = std::max(top, sub + 1);
    }
    memo = top;
    return top;
  };
  const int size = solve(0);
  if (size < 0) throw PreconditionError("no block triangular form exists");

  BtfResult out;
  out.size = static_cast<std::size_t>(size);
  Mask done = 0;
  std::vector<Mask> chosen;
  while (done != full) {
    const Mask rest = full & ~done;
    std::optional<std::vector<std::size_t>> pick;
    Mask pick_mask = 0;
    for (Mask blk = rest; blk != 0; blk = (blk - 1) & rest) {
      if (!valid(done, blk) || solve(done | blk) != best[done] - 1) continue;
      auto idx = mask_indices(blk);
      if (!pick || idx < *pick) {
        pick = std::move(idx);
        pick_mask = blk;
      }
    }
    out.form.blocks.push_back(*pick);
    chosen.push_back(pick_mask);
    done |= pick_mask;
  }

  std::vector<std::size_t> owner(n);
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    for (std::size_t v : mask_indices(chosen[i])) owner[v] = i;
  }
  for (const auto& r : masks) {
    std::size_t last = 0;
    for (std::size_t v : mask_indices(r.all())) last = std::max(last, owner[v]);
    if (kind == BtfKind::MinPlusIneq && r.all() != 0 &&
        !block_condition(r, chosen[last], kind)) {
      ++last;
    }
    out.form.rows.push_back(last);
  }
  if (!verify_btf(t, out.form, kind)) throw InternalError("max_btf produced an invalid form");
  return out;
}

BtfKind kind_of(Relation r) { return r == Relation::Eq ? BtfKind::MinPlusEq : BtfKind::MinPlusIneq; }

// ---- local dimension ----

namespace {

struct PointTable {
  StarTable table;
  std::vector<std::size_t> finite_cols;
  std::vector<std::size_t> kept_rows;
  std::size_t original_rows;
};

std::vector<std::size_t> finite_positions(std::span<const ExtInt> x) {
  std::vector<std::size_t> f;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_finite()) f.push_back(j);
  }
  return f;
}

PointTable point_table(const TropicalSystem& a, std::span<const ExtInt> x) {
  const auto f = finite_positions(x);
  ExtMatrix m(0, f.size());
  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vector row;
    bool finite = false;
    for (std::size_t j : f) {
      row.push_back(a.at(r, j) + x[j]);
      finite = finite || row.back().is_finite();
    }
    if (!finite) continue;
    m.append_row(row);
    kept.push_back(r);
  }
  return {star_table(TropicalSystem(std::move(m), Domain::IntInf)), f, kept, a.rows()};
}

PointTable point_table(const TwoSidedSystem& s, std::span<const ExtInt> x) {
  const auto f = finite_positions(x);
  ExtMatrix l(0, f.size());
  ExtMatrix r(0, f.size());
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    Vector lr;
    Vector rr;
    bool finite = false;
    for (std::size_t j : f) {
      lr.push_back(s.lhs().at(i, j) + x[j]);
      rr.push_back(s.rhs().at(i, j) + x[j]);
      finite = finite || lr.back().is_finite() || rr.back().is_finite();
    }
    if (!finite) continue;
    l.append_row(lr);
    r.append_row(rr);
    kept.push_back(i);
  }
  return {joint_star_table(TwoSidedSystem(std::move(l), std::move(r), s.relation(), Domain::IntInf)),
          f, kept, s.rows()};
}

LocalDimension to_original(const PointTable& p, const BtfResult& res) {
  LocalDimension out;
  out.projective = res.size - 1;
  for (const auto& blk : res.form.blocks) {
    std::vector<std::size_t> cols;
    for (std::size_t v : blk) cols.push_back(p.finite_cols[v]);
    out.form.blocks.push_back(std::move(cols));
  }
  out.form.rows.assign(p.original_rows, kUnassigned);
  for (std::size_t k = 0; k < p.kept_rows.size(); ++k) out.form.rows[p.kept_rows[k]] = res.form.rows[k];
  return out;
}

// Certificate form in original ids back onto the point table; nullopt if it
// does not fit the table's finite columns and kept rows.
std::optional<BlockTriangularForm> to_local(const PointTable& p, const BlockTriangularForm& f) {
  if (f.rows.size() != p.original_rows) return std::nullopt;
  std::map<std::size_t, std::size_t> local;
  for (std::size_t k = 0; k < p.finite_cols.size(); ++k) local[p.finite_cols[k]] = k;
  BlockTriangularForm out;
  for (const auto& blk : f.blocks) {
    std::vector<std::size_t> cols;
    for (std::size_t v : blk) {
      auto it = local.find(v);
      if (it == local.end()) return std::nullopt;
      cols.push_back(it->second);
    }
    out.blocks.push_back(std::move(cols));
  }
  std::vector<char> kept(p.original_rows, 0);
  for (std::size_t r : p.kept_rows) kept[r] = 1;
  for (std::size_t r = 0; r < p.original_rows; ++r) {
    if (kept[r]) {
      out.rows.push_back(f.rows[r]);
    } else if (f.rows[r] != kUnassigned) {
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace

LocalDimension local_dimension_form(const TropicalSystem& a, std::span<const ExtInt> x) {
  if (!is_tropical_solution(a, x)) throw PreconditionError("point is not a solution");
  const auto p = point_table(a, x);
  return to_original(p, max_btf(p.table, BtfKind::Tropical));
}

LocalDimension local_dimension_form(const TwoSidedSystem& s, std::span<const ExtInt> x) {
  if (!is_minplus_solution(s, x)) throw PreconditionError("point is not a solution");
  const auto p = point_table(s, x);
  return to_original(p, max_btf(p.table, kind_of(s.relation())));
}

std::size_t local_dimension(const TropicalSystem& a, std::span<const ExtInt> x) {
  return local_dimension_form(a, x).projective;
}

std::size_t local_dimension(const TwoSidedSystem& s, std::span<const ExtInt> x) {
  return local_dimension_form(s, x).projective;
}

// ---- global dimension ----

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

enum class RowRule { TwoMinima, BothParts, LeftPart };

// Rows over the finite columns of one infinity pattern, normalized so every
// finite joint-row minimum is 0. Entry (r, c) belongs to variable var[c] and
// part side[c] (0 = lhs or tropical, 1 = rhs).
struct Restricted {
  std::size_t nvars = 0;
  std::vector<std::size_t> var;
  std::vector<int> side;
  std::vector<std::vector<std::int64_t>> rows;
  std::int64_t bound = 0;
  RowRule rule = RowRule::TwoMinima;
};

std::int64_t to_i64(const ExtInt& e) {
  if (e.is_infinite()) return kInf;
  auto v = e.to_int64();
  if (!v || *v > (std::int64_t{1} << 40) || *v < -(std::int64_t{1} << 40)) {
    throw BudgetExceeded("entries too large for dimension search");
  }
  return *v;
}

void normalize_rows(Restricted& r) {
  std::vector<std::vector<std::int64_t>> kept;
  for (auto& row : r.rows) {
    std::int64_t m = *std::min_element(row.begin(), row.end());
    if (m >= kInf) continue;
    for (auto& e : row) {
      if (e < kInf) {
        e -= m;
        r.bound = std::max(r.bound, e);
      }
    }
    kept.push_back(std::move(row));
  }
  r.rows = std::move(kept);
}

// Does the row satisfy its rule, given its minimum and where it is attained?
bool rule_holds(RowRule rule, int hits, int hit_sides) {
  switch (rule) {
    case RowRule::TwoMinima:
      return hits >= 2;
    case RowRule::BothParts:
      return hit_sides == 3;
    case RowRule::LeftPart:
      return (hit_sides & 1) != 0;
  }
  return false;
}

class LevelSearch {
 public:
  LevelSearch(const Restricted& r, std::uint64_t& budget,
              const std::function<void(const std::vector<std::int64_t>&)>& visit)
      : r_(r), budget_(budget), visit_(visit), val_(r.nvars, -1) {}

  void run() {
    if (r_.nvars == 0) return;
    place(0, (Mask{1} << r_.nvars) - 1);
  }

 private:
  // Place a nonempty subset of `open` at value `level`, then continue.
  void place(std::int64_t level, Mask open) {
    for (Mask s = open; s != 0; s = (s - 1) & open) {
      if (budget_-- == 0) throw BudgetExceeded("dimension search budget exhausted");
      for (std::size_t v : mask_indices(s)) val_[v] = level;
      const Mask rest = open & ~s;
      if (feasible(level, rest)) {
        if (rest == 0) {
          visit_(val_);
        } else {
          for (std::int64_t g = 1; g <= r_.bound + 1; ++g) place(level + g, rest);
        }
      }
      for (std::size_t v : mask_indices(s)) val_[v] = -1;
    }
  }

  // False if some row is already decided and violated. Unplaced variables
  // will sit at level + 1 or higher.
  bool feasible(std::int64_t level, Mask open) const {
    for (const auto& row : r_.rows) {
      std::int64_t m = kInf;
      std::int64_t lower = kInf;
      int hits = 0;
      int sides = 0;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] >= kInf) continue;
        const std::size_t v = r_.var[c];
        if (open & (Mask{1} << v)) {
          lower = std::min(lower, row[c] + level + 1);
          continue;
        }
        const std::int64_t t = row[c] + val_[v];
        if (t < m) {
          m = t;
          hits = 1;
          sides = 1 << r_.side[c];
        } else if (t == m) {
          ++hits;
          sides |= 1 << r_.side[c];
        }
      }
      if (m >= kInf) continue;
      if (m < lower && !rule_holds(r_.rule, hits, sides)) return false;
    }
    return true;
  }

  const Restricted& r_;
  std::uint64_t& budget_;
  const std::function<void(const std::vector<std::int64_t>&)>& visit_;
  std::vector<std::int64_t> val_;
};

template <class System>
std::optional<GlobalDimension> global_search(
    const System& sys, std::size_t n, const std::function<Restricted(Mask)>& restrict,
    bool allow_inf, std::uint64_t budget) {
  if (n > 20) throw BudgetExceeded("too many columns for the dimension search");
  std::optional<GlobalDimension> best;
  const Mask full = (Mask{1} << n) - 1;
  // Finite-coordinate sets, all-finite first.
  std::vector<Mask> patterns{full};
  if (allow_inf) {
    for (Mask f = full - 1; f != 0; --f) patterns.push_back(f);
  }
  for (Mask f : patterns) {
    const Restricted r = restrict(f);
    const auto cols = mask_indices(f);
    std::map<std::vector<unsigned char>, std::size_t> cache;
    std::function<void(const std::vector<std::int64_t>&)> visit =
        [&](const std::vector<std::int64_t>& val) {
          Vector x(n, ExtInt::infinity());
          for (std::size_t k = 0; k < cols.size(); ++k) x[cols[k]] = ExtInt(val[k]);
          const auto p = point_table(sys, x);
          std::vector<unsigned char> key;
          for (std::size_t i = 0; i < p.table.rows(); ++i) {
            for (std::size_t c = 0; c < p.table.width(); ++c) key.push_back(p.table.at(i, c));
            key.push_back(2);
          }
          auto it = cache.find(key);
          if (it == cache.end()) {
            const BtfKind kind = p.table.is_joint()
                                     ? (r.rule == RowRule::BothParts ? BtfKind::MinPlusEq
                                                                     : BtfKind::MinPlusIneq)
                                     : BtfKind::Tropical;
            it = cache.emplace(key, max_btf(p.table, kind).size).first;
          }
          const std::size_t d = it->second - 1;
          if (!best || d > best->projective) best = GlobalDimension{d, x, {}};
        };
    LevelSearch(r, budget, visit).run();
  }
  if (best) {
    best->form = local_dimension_form(sys, best->witness).form;
  }
  return best;
}

}  // namespace

std::optional<GlobalDimension> global_dimension(const TropicalSystem& a, std::uint64_t budget) {
  const std::size_t n = a.cols();
  auto restrict = [&](Mask f) {
    Restricted r;
    const auto cols = mask_indices(f);
    r.nvars = cols.size();
    for (std::size_t k = 0; k < cols.size(); ++k) {
      r.var.push_back(k);
      r.side.push_back(0);
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t j : cols) row.push_back(to_i64(a.at(i, j)));
      r.rows.push_back(std::move(row));
    }
    normalize_rows(r);
    return r;
  };
  return global_search(a, n, restrict, a.domain() == Domain::IntInf, budget);
}

std::optional<GlobalDimension> global_dimension(const TwoSidedSystem& s, std::uint64_t budget) {
  const std::size_t n = s.cols();
  auto restrict = [&](Mask f) {
    Restricted r;
    const auto cols = mask_indices(f);
    r.nvars = cols.size();
    r.rule = s.relation() == Relation::Eq ? RowRule::BothParts : RowRule::LeftPart;
    for (int part = 0; part < 2; ++part) {
      for (std::size_t k = 0; k < cols.size(); ++k) {
        r.var.push_back(k);
        r.side.push_back(part);
      }
    }
    for (std::size_t i = 0; i < s.rows(); ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t j : cols) row.push_back(to_i64(s.lhs().at(i, j)));
      for (std::size_t j : cols) row.push_back(to_i64(s.rhs().at(i, j)));
      r.rows.push_back(std::move(row));
    }
    normalize_rows(r);
    return r;
  };
  return global_search(s, n, restrict, s.domain() == Domain::IntInf, budget);
}

namespace {

bool at_least(const std::optional<GlobalDimension>& g, const Integer& k, Convention c) {
  if (!g) return false;
  const Integer d = Integer(g->projective) + (c == Convention::Affine ? 1 : 0);
  return d >= k;
}

template <class System>
bool verify_cert(const System& sys, const DimensionCertificate& cert, BtfKind kind) {
  try {
    if (cert.witness.size() != sys.cols() || cert.claimed_k < 0) return false;
    bool ok = false;
    if constexpr (std::is_same_v<System, TropicalSystem>) {
      ok = is_tropical_solution(sys, cert.witness);
    } else {
      ok = is_minplus_solution(sys, cert.witness);
    }
    if (!ok) return false;
    const auto p = point_table(sys, cert.witness);
    const auto local = to_local(p, cert.form);
    if (!local) return false;
    if (!verify_btf(p.table, *local, kind)) return false;
    return Integer(local->size()) >= cert.claimed_k + 1;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

template <class System>
std::optional<DimensionCertificate> certificate_from(const System& sys) {
  auto g = global_dimension(sys);
  if (!g) return std::nullopt;
  return DimensionCertificate{g->witness, g->form, Integer(g->projective)};
}

}  // namespace

bool decide_dim_at_least(const TropicalSystem& a, const Integer& k, Convention c) {
  return at_least(global_dimension(a), k, c);
}

bool decide_dim_at_least(const TwoSidedSystem& s, const Integer& k, Convention c) {
  return at_least(global_dimension(s), k, c);
}

bool verify_certificate(const TropicalSystem& a, const DimensionCertificate& cert) {
  return verify_cert(a, cert, BtfKind::Tropical);
}

bool verify_certificate(const TwoSidedSystem& s, const DimensionCertificate& cert) {
  return verify_cert(s, cert, kind_of(s.relation()));
}

std::optional<DimensionCertificate> make_certificate(const TropicalSystem& a) {
  return certificate_from(a);
}

std::optional<DimensionCertificate> make_certificate(const TwoSidedSystem& s) {
  return certificate_from(s);
}

// ---- vertex cover ----

Graph::Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(n), edges_(std::move(edges)) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [u, v] : edges_) {
    if (u >= n_ || v >= n_) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loop");
    if (!seen.insert(std::minmax(u, v)).second) throw PreconditionError("duplicate edge");
  }
}

bool Graph::connected() const {
  if (n_ == 0) return true;
  std::vector<std::vector<std::size_t>> adj(n_);
  for (const auto& [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(n_, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n_;
}

TropicalSystem vc_to_tropical(const Graph& g) {
  if (g.vertices() == 0) throw PreconditionError("graph has no vertices");
  if (!g.connected()) throw PreconditionError("graph is not connected");
  ExtMatrix a(g.edges().size(), g.vertices() + 1, ExtInt(1));
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    a.at(e, 0) = 0;
    a.at(e, g.edges()[e].first + 1) = 0;
    a.at(e, g.edges()[e].second + 1) = 0;
  }
  return TropicalSystem(std::move(a), Domain::Int);
}

TwoSidedSystem vc_to_minplus(const Graph& g) {
  const TropicalSystem a = vc_to_tropical(g);
  ExtMatrix lhs = a.entries();
  ExtMatrix rhs = a.entries();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    lhs.at(r, 0) += ExtInt(1);
    for (std::size_t j = 1; j < a.cols(); ++j) rhs.at(r, j) += ExtInt(1);
  }
  return TwoSidedSystem(std::move(lhs), std::move(rhs), Relation::Eq, Domain::Int);
}

std::size_t min_vertex_cover(const Graph& g) {
  const std::size_t n = g.vertices();
  if (n > 20) throw BudgetExceeded("vertex cover enumeration capped at 20 vertices");
  std::size_t best = n;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size >= best) continue;
    bool covers = true;
    for (const auto& [u, v] : g.edges()) {
      if (!((s >> u) & 1) && !((s >> v) & 1)) {
        covers = false;
        break;
      }
    }
    if (covers) best = size;
  }
  return best;
}

std::size_t tropical_rank(const TropicalSystem& a, const TropicalDecider& decider,
                          std::size_t column_cap) {
  const std::size_t n = a.cols();
  if (n > column_cap || n > 20) throw BudgetExceeded("too many columns for tropical_rank");
  if (a.domain() != Domain::Int) throw PreconditionError("tropical_rank works over Z");
  for (std::size_t size = n; size >= 1; --size) {
    // Subsets of this size in lexicographic order.
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      if (!decider(select_columns(a, pick))) return size;
      std::size_t k = size;
      while (k > 0 && pick[k - 1] == n - size + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t t = k; t < size; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return 0;
}

}  // namespace tropkit
