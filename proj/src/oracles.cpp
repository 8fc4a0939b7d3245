#include "tropkit/oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "tropkit/core.hpp"
#include "tropkit/errors.hpp"

namespace tropkit {

namespace {

using i64 = std::int64_t;
constexpr i64 kInf = std::numeric_limits<i64>::max() / 4;
constexpr i64 kMaxEntry = i64{1} << 40;

i64 narrow(const ExtInt& e) {
  if (e.is_infinite()) return kInf;
  auto v = e.to_int64();
  if (!v || *v > kMaxEntry || *v < -kMaxEntry) throw BudgetExceeded("entry too large for oracle");
  return *v;
}

i64 narrow(const Integer& v) { return narrow(ExtInt(v)); }

i64 add(i64 a, i64 b) { return (a >= kInf || b >= kInf) ? kInf : a + b; }

using Row = std::vector<i64>;

// A system in machine integers. Tropical systems have no rhs.
struct Sys {
  enum Kind { Trop, Eq, Le } kind = Trop;
  std::size_t n = 0;
  std::vector<Row> lhs;
  std::vector<Row> rhs;
};

Sys to_sys(const ExtMatrix& a) {
  Sys s;
  s.n = a.cols();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Row row;
    for (const auto& e : a.row(r)) row.push_back(narrow(e));
    s.lhs.push_back(std::move(row));
  }
  return s;
}

Sys to_sys(const TropicalSystem& a) { return to_sys(a.entries()); }

Sys to_sys(const TwoSidedSystem& t) {
  Sys s = to_sys(t.lhs());
  s.rhs = to_sys(t.rhs()).lhs;
  s.kind = t.relation() == Relation::Eq ? Sys::Eq : Sys::Le;
  return s;
}

Sys to_sys(const AnySystem& v) {
  return std::visit([](const auto& s) { return to_sys(s); }, v);
}

i64 eval(const Row& row, const std::vector<i64>& x) {
  i64 m = kInf;
  for (std::size_t j = 0; j < row.size(); ++j) m = std::min(m, add(row[j], x[j]));
  return m;
}

bool holds(const Sys& s, const std::vector<i64>& x) {
  for (std::size_t r = 0; r < s.lhs.size(); ++r) {
    if (s.kind == Sys::Trop) {
      const i64 m = eval(s.lhs[r], x);
      if (m >= kInf) continue;
      int hits = 0;
      for (std::size_t j = 0; j < s.n; ++j) hits += add(s.lhs[r][j], x[j]) == m;
      if (hits < 2) return false;
    } else {
      const i64 l = eval(s.lhs[r], x);
      const i64 q = eval(s.rhs[r], x);
      if (s.kind == Sys::Eq ? l != q : l > q) return false;
    }
  }
  return true;
}

// A tropical row is already lost once its assigned minimum is unique and below
// every term still open (open coordinates are >= 0).
bool doomed(const Sys& s, const std::vector<i64>& x, std::size_t assigned) {
  if (s.kind != Sys::Trop) return false;
  for (const auto& row : s.lhs) {
    i64 m = kInf;
    int hits = 0;
    for (std::size_t j = 0; j < assigned; ++j) {
      const i64 t = add(row[j], x[j]);
      if (t < m) {
        m = t;
        hits = 1;
      } else if (t == m) {
        ++hits;
      }
    }
    if (m >= kInf || hits >= 2) continue;
    i64 open = kInf;
    for (std::size_t j = assigned; j < s.n; ++j) open = std::min(open, row[j]);
    if (m < open) return true;
  }
  return false;
}

class Budget {
 public:
  explicit Budget(std::uint64_t n) : left_(n) {}
  void tick() {
    if (left_ == 0) throw BudgetExceeded("oracle budget exhausted");
    --left_;
  }

 private:
  std::uint64_t left_;
};

// Lexicographic scan over values^n. `leaf` returns true to stop.
void scan(std::size_t n, const std::vector<i64>& values, const Sys* prune, Budget& budget,
          const std::function<bool(const std::vector<i64>&)>& leaf) {
  std::vector<i64> x(n, 0);
  std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
    if (k == n) return leaf(x);
    for (i64 v : values) {
      budget.tick();
      x[k] = v;
      if (prune && doomed(*prune, x, k + 1)) continue;
      if (go(k + 1)) return true;
    }
    return false;
  };
  go(0);
}

std::vector<i64> range(i64 hi, bool with_inf) {
  std::vector<i64> v;
  for (i64 i = 0; i <= hi; ++i) v.push_back(i);
  if (with_inf) v.push_back(kInf);
  return v;
}

bool all_inf(const std::vector<i64>& x) {
  return std::all_of(x.begin(), x.end(), [](i64 v) { return v >= kInf; });
}

Vector to_vector(const std::vector<i64>& x) {
  Vector out;
  for (i64 v : x) out.push_back(v >= kInf ? ExtInt::infinity() : ExtInt(v));
  return out;
}

std::optional<Vector> first_solution(const Sys& s, i64 hi, bool with_inf, std::uint64_t budget) {
  Budget b(budget);
  std::optional<Vector> found;
  scan(s.n, range(hi, with_inf), &s, b, [&](const std::vector<i64>& x) {
    if (all_inf(x) || !holds(s, x)) return false;
    found = to_vector(x);
    return true;
  });
  return found;
}

// Does some grid point solve `s` while failing `extra`?
bool violation_exists(const Sys& s, const Sys& extra, i64 hi, bool with_inf, std::uint64_t budget) {
  Budget b(budget);
  bool found = false;
  scan(s.n, range(hi, with_inf), &s, b, [&](const std::vector<i64>& x) {
    if (all_inf(x) || !holds(s, x) || holds(extra, x)) return false;
    found = true;
    return true;
  });
  return found;
}

}  // namespace

std::optional<Vector> brute_tropsolv(const TropicalSystem& a, std::uint64_t budget) {
  auto [sys, m] = normalize(a);
  if (sys.domain() != Domain::Int) throw PreconditionError("brute_tropsolv works over Z");
  return first_solution(to_sys(sys), narrow(m), false, budget);
}

std::optional<Vector> brute_tropsolv_inf(const TropicalSystem& a, std::uint64_t budget) {
  auto [sys, m] = normalize(a);
  const i64 hi = (narrow(m) + 1) * static_cast<i64>(a.cols());
  return first_solution(to_sys(sys), hi, true, budget);
}

std::optional<Vector> brute_tropsolv_pairs(const TropicalSystem& a, std::uint64_t budget) {
  const Sys s = to_sys(a);
  const std::size_t n = s.n;
  if (n > 20) throw BudgetExceeded("too many columns for the pair oracle");
  Budget b(budget);
  // d[p][q] bounds x_q - x_p from above.
  using Dist = std::vector<std::vector<i64>>;

  auto tighten = [&](Dist& d, std::size_t v, std::size_t u, i64 c) {
    // Adds x_u - x_v <= c; false on a negative cycle.
    if (d[v][u] <= c) return true;
    for (std::size_t p = 0; p < n; ++p) {
      if (d[p][v] >= kInf) continue;
      for (std::size_t q = 0; q < n; ++q) {
        if (d[u][q] >= kInf) continue;
        d[p][q] = std::min(d[p][q], d[p][v] + c + d[u][q]);
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      if (d[p][p] < 0) return false;
    }
    return true;
  };

  for (std::uint32_t support = (std::uint32_t{1} << n) - 1; support != 0; --support) {
    if (a.domain() == Domain::Int && support != (std::uint32_t{1} << n) - 1) break;
    auto in = [&](std::size_t j) { return ((support >> j) & 1) != 0; };
    std::vector<std::vector<std::size_t>> cols;  // finite columns per live row
    std::vector<std::size_t> live;
    bool dead = false;
    for (std::size_t r = 0; r < s.lhs.size(); ++r) {
      std::vector<std::size_t> c;
      for (std::size_t j = 0; j < n; ++j) {
        if (in(j) && s.lhs[r][j] < kInf) c.push_back(j);
      }
      if (c.size() == 1) dead = true;
      if (c.size() >= 2) {
        cols.push_back(std::move(c));
        live.push_back(r);
      }
    }
    if (dead) continue;

    Dist start(n, std::vector<i64>(n, kInf));
    for (std::size_t p = 0; p < n; ++p) start[p][p] = 0;
    std::optional<std::vector<i64>> sol;
    std::function<bool(std::size_t, const Dist&)> go = [&](std::size_t k, const Dist& d) -> bool {
      if (k == live.size()) {
        std::vector<i64> x(n, kInf);
        for (std::size_t u = 0; u < n; ++u) {
          if (!in(u)) continue;
          i64 v = 0;
          for (std::size_t p = 0; p < n; ++p) {
            if (in(p)) v = std::min(v, d[p][u]);
          }
          x[u] = v;
        }
        sol = std::move(x);
        return true;
      }
      const Row& row = s.lhs[live[k]];
      const auto& c = cols[k];
      for (std::size_t p = 0; p < c.size(); ++p) {
        for (std::size_t q = p + 1; q < c.size(); ++q) {
          b.tick();
          Dist e = d;
          const std::size_t kk = c[p];
          const std::size_t ll = c[q];
          // a_k + x_k = a_l + x_l <= a_j + x_j for every finite j.
          bool ok = tighten(e, ll, kk, row[ll] - row[kk]) && tighten(e, kk, ll, row[kk] - row[ll]);
          for (std::size_t j : c) {
            if (!ok) break;
            if (j != kk) ok = tighten(e, j, kk, row[j] - row[kk]);
          }
          if (ok && go(k + 1, e)) return true;
        }
      }
      return false;
    };
    if (go(0, start)) {
      Vector x = shift_to_zero_min(to_vector(*sol));
      if (!is_tropical_solution(a, x)) throw InternalError("pair oracle witness check failed");
      return x;
    }
  }
  return std::nullopt;
}

std::optional<Vector> brute_minplus(const TwoSidedSystem& t, std::uint64_t budget) {
  auto [sys, m] = normalize(t);
  (void)m;
  // Constants of the atoms each Le direction induces (one atom per finite
  // entry of the larger side).
  Integer c = 0;
  auto direction = [&](const ExtMatrix& a, const ExtMatrix& b, std::size_t r) {
    Integer terms = 0;
    bool any = false;
    for (const auto& e : a.row(r)) {
      if (e.is_finite()) {
        terms += abs(e.value());
        any = true;
      }
    }
    for (const auto& e : b.row(r)) {
      if (e.is_finite()) c += any ? Integer(abs(e.value()) + terms) : Integer(1);
    }
  };
  for (std::size_t r = 0; r < sys.rows(); ++r) {
    direction(sys.lhs(), sys.rhs(), r);
    if (sys.relation() == Relation::Eq) direction(sys.rhs(), sys.lhs(), r);
  }
  return first_solution(to_sys(sys), narrow(c), sys.domain() == Domain::IntInf, budget);
}

namespace {

Sys single_row(std::span<const ExtInt> l) {
  Sys s;
  s.n = l.size();
  Row row;
  for (const auto& e : l) row.push_back(narrow(e));
  s.lhs.push_back(std::move(row));
  return s;
}

}  // namespace

bool brute_implies(const TropicalSystem& a, std::span<const ExtInt> l, std::uint64_t budget) {
  if (l.size() != a.cols()) throw ShapeError("row length differs from column count");
  const auto m = narrow(normalize(with_row(a, l)).bound);
  const i64 n = static_cast<i64>(a.cols());
  return !violation_exists(to_sys(a), single_row(l), (2 * n + 1) * m + 1, false, budget);
}

bool brute_implies_inf(const TropicalSystem& a, std::span<const ExtInt> l, std::uint64_t budget) {
  if (l.size() != a.cols()) throw ShapeError("row length differs from column count");
  const auto m = narrow(normalize(with_row(a, l)).bound);
  const i64 n = static_cast<i64>(a.cols());
  return !violation_exists(to_sys(a), single_row(l), (2 * n + 1) * (m + 1) + 1, true, budget);
}

bool brute_minplus_implies(const TwoSidedSystem& s, std::span<const ExtInt> lhs,
                           std::span<const ExtInt> rhs, std::uint64_t budget) {
  if (lhs.size() != s.cols() || rhs.size() != s.cols()) throw ShapeError("row length mismatch");
  ExtMatrix l(0, s.cols());
  ExtMatrix r(0, s.cols());
  l.append_row(lhs);
  r.append_row(rhs);
  const TwoSidedSystem row(std::move(l), std::move(r), Relation::Eq, s.domain());
  const auto m = narrow(normalize(stack(s, row)).bound);
  const i64 n = static_cast<i64>(s.cols());
  return !violation_exists(to_sys(s), to_sys(row), (2 * n + 1) * (m + 1) + 1,
                           s.domain() == Domain::IntInf, budget);
}

bool solution_sets_equal_on_grid(const AnySystem& p, const AnySystem& q, const Integer& bound,
                                 std::uint64_t budget) {
  const Sys a = to_sys(p);
  const Sys b = to_sys(q);
  if (a.n != b.n) throw ShapeError("systems differ in column count");
  Budget bud(budget);
  bool equal = true;
  scan(a.n, range(narrow(bound), false), nullptr, bud, [&](const std::vector<i64>& x) {
    if (holds(a, x) != holds(b, x)) {
      equal = false;
      return true;
    }
    return false;
  });
  return equal;
}

std::vector<Vector> enumerate_solutions(const AnySystem& s, const Integer& bound,
                                        std::uint64_t budget) {
  const Sys a = to_sys(s);
  Budget bud(budget);
  std::vector<Vector> out;
  scan(a.n, range(narrow(bound), false), &a, bud, [&](const std::vector<i64>& x) {
    if (holds(a, x)) out.push_back(to_vector(x));
    return false;
  });
  return out;
}

std::size_t naive_max_btf(const StarTable& t, BtfKind kind, std::uint64_t budget) {
  const std::size_t n = t.variables();
  const bool joint = t.is_joint();
  Budget bud(budget);
  auto star_a = [&](std::size_t r, std::size_t v) { return t.at(r, v); };
  auto star_b = [&](std::size_t r, std::size_t v) { return joint && t.at(r, n + v); };

  std::size_t best = 0;
  std::vector<std::size_t> label(n, 0);
  // Every labelling of the columns by blocks 0..d-1 that uses each block.
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (v == n) {
      bud.tick();
      const std::size_t d = *std::max_element(label.begin(), label.end()) + 1;
      if (d <= best) return;
      std::vector<char> used(d, 0);
      for (std::size_t c : label) used[c] = 1;
      if (std::find(used.begin(), used.end(), 0) != used.end()) return;
      for (std::size_t r = 0; r < t.rows(); ++r) {
        bool placed = false;
        for (std::size_t i = 0; i < d && !placed; ++i) {
          bool later = false;
          int in_block = 0;
          bool a_in = false;
          bool b_in = false;
          for (std::size_t c = 0; c < n; ++c) {
            const bool sa = star_a(r, c);
            const bool sb = star_b(r, c);
            if (label[c] > i && (sa || sb)) later = true;
            if (label[c] == i) {
              in_block += sa + sb;
              a_in = a_in || sa;
              b_in = b_in || sb;
            }
          }
          if (later) continue;
          bool cond = false;
          switch (kind) {
            case BtfKind::Tropical:
              cond = in_block >= 2;
              break;
            case BtfKind::MinPlusEq:
              cond = a_in && b_in;
              break;
            case BtfKind::MinPlusIneq:
              cond = !b_in || a_in;
              break;
          }
          placed = cond;
        }
        if (!placed) return;
      }
      best = d;
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      label[v] = i;
      go(v + 1);
    }
  };
  go(0);
  return best;
}

}  // namespace tropkit
