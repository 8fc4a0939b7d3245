#include "tropkit/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tropkit/errors.hpp"

namespace tropkit {

namespace {

ExtInt minus_one(const ExtInt& e) { return e - Integer(1); }

std::size_t finite_count(std::span<const ExtInt> v) {
  return static_cast<std::size_t>(
      std::count_if(v.begin(), v.end(), [](const ExtInt& e) { return e.is_finite(); }));
}

Vector negate_to_vector(const PartialAssignment& u) {
  Vector x;
  x.reserve(u.size());
  for (const auto& v : u) x.push_back(v ? ExtInt(Integer(-*v)) : ExtInt::infinity());
  return shift_to_zero_min(x);
}

Vector negate_to_vector(const Assignment& u) {
  Vector x;
  x.reserve(u.size());
  for (const auto& v : u) x.push_back(ExtInt(Integer(-v)));
  return shift_to_zero_min(x);
}

}  // namespace

// ---- tropical -> min-plus -> max-atom ----

std::vector<InequalityPair> tropical_row_to_inequalities(std::span<const ExtInt> row) {
  if (finite_count(row) == 0) throw PreconditionError("row is entirely +inf");
  std::vector<InequalityPair> out;
  out.reserve(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    InequalityPair p{Vector(row.begin(), row.end()), Vector(row.begin(), row.end())};
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j == i) {
        p.rhs[j] = minus_one(row[j]);
      } else {
        p.lhs[j] = minus_one(row[j]);
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

TwoSidedSystem tropical_to_minplus(const TropicalSystem& a) {
  ExtMatrix lhs(0, a.cols());
  ExtMatrix rhs(0, a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& p : tropical_row_to_inequalities(a.row(r))) {
      lhs.append_row(p.lhs);
      rhs.append_row(p.rhs);
    }
  }
  return TwoSidedSystem(std::move(lhs), std::move(rhs), Relation::Le, a.domain());
}

MaxAtomEncoding tropical_to_maxatom(const TropicalSystem& a) {
  const std::size_t n = a.cols();
  std::vector<MaxAtom> atoms;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto row = a.row(r);
    for (std::size_t i = 0; i < n; ++i) {
      if (row[i].is_infinite()) continue;
      MaxAtom atom{i, {}, row[i].value()};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && row[j].is_finite()) atom.terms.push_back({j, -row[j].value()});
      }
      if (atom.terms.empty()) atom = MaxAtom{i, {{i, 0}}, -1};
      atoms.push_back(std::move(atom));
    }
  }
  VarMap map;
  map.forward.resize(n);
  std::iota(map.forward.begin(), map.forward.end(), std::size_t{0});
  map.negated = true;
  return {MaxAtomSystem(n, std::move(atoms)), std::move(map)};
}

TropicalSystem stars_gadget(std::span<const Integer> a, std::size_t n, const Integer& c,
                            std::span<const std::size_t> positions) {
  if (a.size() != positions.size()) throw ShapeError("gadget values and positions differ in length");
  if (positions.empty() || positions.size() > n) throw PreconditionError("gadget needs 1..n positions");
  std::vector<char> inside(n, 0);
  for (std::size_t p : positions) {
    if (p >= n || inside[p]) throw PreconditionError("gadget positions must be distinct and < n");
    inside[p] = 1;
  }
  Vector base(n, ExtInt(c + 1));
  for (std::size_t k = 0; k < positions.size(); ++k) base[positions[k]] = a[k];

  ExtMatrix out(0, n);
  Vector l0 = base;
  for (std::size_t p : positions) l0[p] = minus_one(l0[p]);
  out.append_row(l0);
  for (std::size_t i = 0; i < n; ++i) {
    if (inside[i]) continue;
    Vector li = base;
    li[i] = c;
    out.append_row(li);
  }
  return TropicalSystem(std::move(out), Domain::Int);
}

TropicalEncoding maxatom_to_tropical(const MaxAtomSystem& s) {
  if (!s.is_binary()) throw PreconditionError("maxatom_to_tropical needs binary form");
  const std::size_t nv = s.nvars();
  if (nv == 0) throw PreconditionError("max-atom system has no variables");
  const std::size_t n = 2 * nv;
  const Integer c = constant_sum(s);

  ExtMatrix out(0, n);
  auto append = [&](const TropicalSystem& g) {
    for (std::size_t r = 0; r < g.rows(); ++r) out.append_row(g.row(r));
  };
  const std::vector<Integer> zeros{0, 0};
  for (std::size_t v = 0; v < nv; ++v) {
    const std::vector<std::size_t> pos{v, nv + v};
    append(stars_gadget(zeros, n, c, pos));
  }
  // u = -x turns max{u_x,u_y} + k >= u_z into min{x, x', y, y', z + k, z' + k + 1}
  // attaining its minimum twice.
  for (const auto& atom : s.atoms()) {
    const std::size_t x = atom.terms[0].var;
    const std::size_t y = atom.terms[1].var;
    const std::size_t z = atom.target;
    std::map<std::size_t, Integer> entry;
    auto put = [&](std::size_t col, const Integer& v) {
      auto [it, fresh] = entry.try_emplace(col, v);
      if (!fresh && v < it->second) it->second = v;
    };
    put(x, 0);
    put(nv + x, 0);
    put(y, 0);
    put(nv + y, 0);
    put(z, atom.k);
    put(nv + z, atom.k + 1);
    std::vector<std::size_t> pos;
    std::vector<Integer> vals;
    for (const auto& [col, v] : entry) {
      pos.push_back(col);
      vals.push_back(v);
    }
    append(stars_gadget(vals, n, c, pos));
  }

  VarMap map;
  for (std::size_t v = 0; v < nv; ++v) {
    map.forward.push_back(v);
    map.primed.push_back(nv + v);
  }
  map.negated = true;
  return {TropicalSystem(std::move(out), Domain::Int), std::move(map)};
}

Assignment pull_back(const VarMap& map, std::span<const ExtInt> x) {
  Assignment u;
  u.reserve(map.forward.size());
  for (std::size_t col : map.forward) {
    if (col >= x.size()) throw ShapeError("witness shorter than the variable map");
    const Integer& v = x[col].value();
    u.push_back(map.negated ? Integer(-v) : v);
  }
  return u;
}

// ---- end-to-end solvers ----

std::optional<Vector> solve_tropical(const TropicalSystem& a) {
  auto [sys, m] = normalize(a);
  const std::size_t n = a.cols();
  if (sys.rows() == 0) return Vector(n, ExtInt(0));
  auto enc = tropical_to_maxatom(sys);
  Vector x;
  if (a.domain() == Domain::Int) {
    // Some solution lies in [0, M]^n.
    auto u = solve(enc.system, m);
    if (!u) return std::nullopt;
    x = negate_to_vector(*u);
  } else {
    auto u = solve_with_neg_inf(enc.system, (m + 1) * n);
    if (!u) return std::nullopt;
    x = negate_to_vector(*u);
  }
  if (!is_tropical_solution(a, x)) throw InternalError("solve_tropical witness check failed");
  return x;
}

MaxAtomSystem minplus_to_maxatom(const TwoSidedSystem& s) {
  const std::size_t n = s.cols();
  std::vector<MaxAtom> atoms;
  auto le = [&](std::span<const ExtInt> a, std::span<const ExtInt> b) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[j].is_finite()) terms.push_back({j, -a[j].value()});
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (b[k].is_infinite()) continue;
      if (terms.empty()) {
        atoms.push_back({k, {{k, 0}}, -1});
      } else {
        atoms.push_back({k, terms, b[k].value()});
      }
    }
  };
  for (std::size_t r = 0; r < s.rows(); ++r) {
    le(s.lhs().row(r), s.rhs().row(r));
    if (s.relation() == Relation::Eq) le(s.rhs().row(r), s.lhs().row(r));
  }
  return MaxAtomSystem(n, std::move(atoms));
}

std::optional<Vector> solve_minplus(const TwoSidedSystem& s) {
  const auto atoms = minplus_to_maxatom(s);
  Vector x;
  if (s.domain() == Domain::Int) {
    auto u = solve(atoms);
    if (!u) return std::nullopt;
    x = negate_to_vector(*u);
  } else {
    auto u = solve_with_neg_inf(atoms);
    if (!u) return std::nullopt;
    x = negate_to_vector(*u);
  }
  if (!is_minplus_solution(s, x)) throw InternalError("solve_minplus witness check failed");
  return x;
}

bool tropical_solvable(const TropicalSystem& a) { return solve_tropical(a).has_value(); }
bool minplus_solvable(const TwoSidedSystem& s) { return solve_minplus(s).has_value(); }

// ---- infinity elimination ----

Canonical canonicalize(const TropicalSystem& a) {
  auto [sys, m] = normalize(a);
  std::optional<std::size_t> col;
  for (std::size_t j = 0; j < sys.cols() && !col; ++j) {
    bool all_inf = true;
    for (std::size_t r = 0; r < sys.rows() && all_inf; ++r) all_inf = sys.at(r, j).is_infinite();
    if (all_inf) col = j;
  }
  return {std::move(sys), col};
}

namespace {

void require_canonical(const TropicalSystem& a) {
  if (a.rows() == 0) throw PreconditionError("system has no rows");
  for (std::size_t r = 0; r < a.rows(); ++r) {
    bool zero = false;
    for (const auto& e : a.row(r)) {
      if (e.is_finite() && e.value() < 0) throw PreconditionError("system is not normalized");
      zero = zero || e == ExtInt(0);
    }
    if (!zero) throw PreconditionError("system is not normalized");
  }
  auto c = canonicalize(a);
  if (c.infinite_column) throw PreconditionError("system has an all-inf column");
}

struct InfConstants {
  Integer m;
  Integer alpha;
  Integer beta;
  Integer gamma;
};

InfConstants inf_constants(const TropicalSystem& a) {
  const Integer m = max_finite_entry(a.entries()).value_or(0) + 1;
  const Integer mn = m * Integer(a.cols());
  return {m, 200 * mn, 100 * mn, 300 * mn};
}

}  // namespace

TropicalSystem inf_elimination(const TropicalSystem& a, std::size_t i) {
  require_canonical(a);
  const std::size_t n = a.cols();
  if (i >= n) throw ShapeError("column index out of range");
  const auto k = inf_constants(a);
  auto fin = [&](const ExtInt& e) { return e.is_infinite() ? ExtInt(k.alpha) : e; };

  const std::size_t width = 2 * n - 1;
  ExtMatrix out(0, width);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vector row;
    row.reserve(width);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) row.push_back(fin(a.at(r, j)));
    }
    for (std::size_t j = 0; j < n; ++j) row.push_back(fin(a.at(r, j)));
    out.append_row(row);
  }
  for (std::size_t d = 0; d + 1 < n; ++d) {
    Vector row(width, ExtInt(k.gamma));
    row[d] = ExtInt(Integer(-k.beta));
    row[n - 1 + i] = ExtInt(0);
    out.append_row(row);
  }
  return TropicalSystem(std::move(out), Domain::Int);
}

Vector reconstruct_inf_solution(const TropicalSystem& a, std::size_t i,
                                std::span<const ExtInt> yz) {
  require_canonical(a);
  const std::size_t n = a.cols();
  if (i >= n) throw ShapeError("column index out of range");
  if (yz.size() != 2 * n - 1) throw ShapeError("witness length must be 2n - 1");
  const auto k = inf_constants(a);
  std::vector<Integer> z;
  for (std::size_t j = 0; j < n; ++j) z.push_back(yz[n - 1 + j].value());
  auto entry = [&](std::size_t r, std::size_t j) {
    return a.at(r, j).is_infinite() ? k.alpha : a.at(r, j).value();
  };

  // Try closures from each start column in increasing z; the smallest one is
  // the intended start, the rest are a fallback.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t p, std::size_t q) { return z[p] < z[q]; });

  for (std::size_t start : order) {
    std::vector<char> in_j(n, 0);
    std::vector<std::size_t> frontier{start};
    in_j[start] = 1;
    std::vector<char> row_done(a.rows(), 0);
    while (!frontier.empty()) {
      const std::size_t l = frontier.back();
      frontier.pop_back();
      for (std::size_t r = 0; r < a.rows(); ++r) {
        if (row_done[r] || a.at(r, l).is_infinite()) continue;
        row_done[r] = 1;
        Integer best = entry(r, 0) + z[0];
        for (std::size_t j = 1; j < n; ++j) best = std::min(best, Integer(entry(r, j) + z[j]));
        for (std::size_t j = 0; j < n; ++j) {
          if (!in_j[j] && a.at(r, j).is_finite() && entry(r, j) + z[j] == best) {
            in_j[j] = 1;
            frontier.push_back(j);
          }
        }
      }
    }
    Vector x(n, ExtInt::infinity());
    for (std::size_t j = 0; j < n; ++j) {
      if (in_j[j]) x[j] = z[j];
    }
    x = shift_to_zero_min(x);
    if (!is_tropical_solution(a, x)) continue;
    if (!a.entries().has_infinity()) {
      return finitize(TropicalSystem(a.entries(), Domain::Int), x);
    }
    return x;
  }
  throw InternalError("no verified reconstruction from the A_i witness");
}

std::optional<Vector> solve_tropical_via_infelim(const TropicalSystem& a) {
  const std::size_t n = a.cols();
  auto c = canonicalize(a);
  if (c.infinite_column) {
    Vector x(n, ExtInt::infinity());
    x[*c.infinite_column] = 0;
    if (!is_tropical_solution(a, x)) throw InternalError("inf-column witness check failed");
    return x;
  }
  if (c.system.rows() == 0) return Vector(n, ExtInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    auto yz = solve_tropical(inf_elimination(c.system, i));
    if (yz) {
      Vector x = reconstruct_inf_solution(c.system, i, *yz);
      if (!is_tropical_solution(a, x)) throw InternalError("infelim witness check failed");
      return x;
    }
  }
  return std::nullopt;
}

TropicalSystem combine_or(std::span<const TropicalSystem> systems,
                          const std::optional<Integer>& delta) {
  if (systems.empty()) throw PreconditionError("combine_or needs at least one system");
  std::vector<TropicalSystem> parts;
  Integer m_max = 0;
  std::size_t n_total = 0;
  std::size_t m_star = 0;
  for (const auto& s : systems) {
    if (s.domain() != Domain::Int) throw PreconditionError("combine_or takes systems over Z");
    auto [sys, m] = normalize(s);
    if (sys.rows() == 0) throw PreconditionError("combine_or input has no rows");
    m_max = std::max(m_max, m);
    n_total += sys.cols();
    m_star = std::max(m_star, sys.rows());
    parts.push_back(std::move(sys));
  }
  const Integer d = delta.value_or((m_max + 1) * Integer(n_total + 1));
  if (d <= m_max) throw PreconditionError("delta must exceed the largest normalized entry");

  ExtMatrix out(0, n_total);
  for (std::size_t q = 0; q < parts.size(); ++q) {
    for (std::size_t r = 0; r < m_star; ++r) {
      Vector row;
      row.reserve(n_total);
      for (std::size_t p = 0; p < parts.size(); ++p) {
        // Shorter systems repeat their rows to fill m_star.
        auto src = parts[p].row(r % parts[p].rows());
        for (const auto& e : src) row.push_back(p == q ? e : e + ExtInt(d));
      }
      out.append_row(row);
    }
  }
  return TropicalSystem(std::move(out), Domain::Int);
}

// ---- implication ----

namespace {

void require_row(const TropicalSystem& a, std::span<const ExtInt> l) {
  if (l.size() != a.cols()) throw ShapeError("row length differs from column count");
  if (a.cols() < 2) throw PreconditionError("implication needs at least two columns");
}

// Columns in B_ij order restricted to `cols`: the rest ascending, then j, then i.
std::vector<std::size_t> pair_order(const std::vector<std::size_t>& cols, std::size_t i,
                                    std::size_t j) {
  std::vector<std::size_t> ord;
  for (std::size_t c : cols) {
    if (c != i && c != j) ord.push_back(c);
  }
  ord.push_back(j);
  ord.push_back(i);
  return ord;
}

// Negated pattern rows r = 2..k of B_ij over the ordered columns `ord`
// (k = ord.size()); +inf outside `ord`.
std::vector<Vector> pattern_rows(const std::vector<std::size_t>& ord, std::size_t n) {
  const std::size_t k = ord.size();
  std::vector<Vector> rows;
  for (std::size_t r = 2; r <= k; ++r) {
    Vector row(n, ExtInt::infinity());
    for (std::size_t p = 1; p <= k; ++p) {
      const bool last = p == k;
      row[ord[p - 1]] = (!last && p >= r - 1) ? ExtInt(-1) : ExtInt(0);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Translate columns by -l on l's finite coordinates, normalize and scale by 3Mn.
TropicalSystem zeroed_and_scaled(const TropicalSystem& a, std::span<const ExtInt> l) {
  const std::size_t n = a.cols();
  Vector v(n, ExtInt(0));
  for (std::size_t j = 0; j < n; ++j) {
    if (l[j].is_finite()) v[j] = ExtInt(Integer(-l[j].value()));
  }
  auto [sys, m] = normalize(translate_columns(a, v));
  const Integer factor = 3 * std::max(m, Integer(1)) * Integer(n);
  return scale(sys, factor);
}

TropicalSystem with_rows(const TropicalSystem& a, const std::vector<Vector>& rows) {
  TropicalSystem out = a;
  for (const auto& r : rows) out = with_row(out, r);
  return out;
}

}  // namespace

bool implies(const TropicalSystem& a, std::span<const ExtInt> l, const TropicalDecider& decider) {
  require_row(a, l);
  if (a.domain() != Domain::Int || finite_count(l) != l.size()) {
    throw PreconditionError("implies works over Z; use implies_inf");
  }
  if (!decider(a)) return true;
  if (!decider(with_row(a, l))) return false;
  const std::size_t n = a.cols();
  const TropicalSystem base = zeroed_and_scaled(a, l);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (decider(with_rows(base, pattern_rows(pair_order(all, i, j), n)))) return false;
    }
  }
  return true;
}

bool has_finite_min_in_row(const TropicalSystem& a, std::span<const ExtInt> l,
                           const TropicalDecider& decider) {
  require_row(a, l);
  if (finite_count(l) < 2) return false;
  auto [sys, m] = normalize(with_row(a, l));
  const std::size_t n = a.cols();
  auto lrow = sys.row(sys.rows() - 1);
  std::vector<Integer> vals;
  std::vector<std::size_t> pos;
  for (std::size_t j = 0; j < n; ++j) {
    if (lrow[j].is_finite()) {
      vals.push_back(lrow[j].value());
      pos.push_back(j);
    }
  }
  const Integer c = 10 * std::max(m, Integer(1)) * Integer(n);
  return decider(stack(sys, stars_gadget(vals, n, c, pos)));
}

bool has_solution_with_finite_coord(const TropicalSystem& a, std::size_t i,
                                    const TropicalDecider& decider) {
  if (i >= a.cols()) throw ShapeError("column index out of range");
  const std::size_t n = a.cols() + 1;
  ExtMatrix b(0, n);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vector row{ExtInt::infinity()};
    row.insert(row.end(), a.row(r).begin(), a.row(r).end());
    b.append_row(row);
  }
  Vector last(n, ExtInt::infinity());
  last[0] = 0;
  last[i + 1] = 0;
  return has_finite_min_in_row(TropicalSystem(std::move(b), Domain::IntInf), last, decider);
}

std::vector<std::size_t> kernel(const TropicalSystem& a, const TropicalDecider& decider) {
  if (!decider(a)) throw PreconditionError("kernel of an unsolvable system");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    if (!has_solution_with_finite_coord(a, i, decider)) out.push_back(i);
  }
  return out;
}

bool implies_inf(const TropicalSystem& a, std::span<const ExtInt> l,
                 const TropicalDecider& decider) {
  require_row(a, l);
  if (!decider(a)) return true;
  const TropicalSystem with_l = with_row(a, l);
  if (!decider(with_l)) return false;

  std::vector<std::size_t> f;
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (l[j].is_finite()) f.push_back(j);
  }
  // Row l evaluates to +inf exactly when every coordinate in f is +inf.
  if (f.empty()) return true;
  if (f.size() == 1) return !has_solution_with_finite_coord(a, f[0], decider);

  const bool answer2 = std::any_of(f.begin(), f.end(), [&](std::size_t i) {
    return has_solution_with_finite_coord(a, i, decider);
  });
  if (!answer2) return true;
  const bool answer1 = has_finite_min_in_row(with_l, l, decider);
  if (!answer1) return false;

  const TropicalSystem base = zeroed_and_scaled(a, l);
  for (std::size_t i : f) {
    for (std::size_t j : f) {
      if (i == j) continue;
      auto rows = pattern_rows(pair_order(f, i, j), a.cols());
      if (has_finite_min_in_row(with_rows(base, rows), rows.front(), decider)) return false;
    }
  }
  return true;
}

bool equivalent(const TropicalSystem& a, const TropicalSystem& b, const TropicalDecider& decider) {
  if (a.cols() != b.cols()) throw ShapeError("systems differ in column count");
  const bool inf = a.domain() == Domain::IntInf || b.domain() == Domain::IntInf;
  auto follows = [&](const TropicalSystem& from, const TropicalSystem& to) {
    for (std::size_t r = 0; r < to.rows(); ++r) {
      const bool ok = inf ? implies_inf(from, to.row(r), decider) : implies(from, to.row(r), decider);
      if (!ok) return false;
    }
    return true;
  };
  return follows(a, b) && follows(b, a);
}

bool minplus_implies(const TwoSidedSystem& s, std::span<const ExtInt> lhs,
                     std::span<const ExtInt> rhs, const MinplusDecider& decider) {
  if (s.relation() != Relation::Eq) throw PreconditionError("minplus_implies needs an Eq system");
  if (s.domain() != Domain::Int || finite_count(lhs) != lhs.size() ||
      finite_count(rhs) != rhs.size()) {
    throw PreconditionError("minplus_implies works over Z");
  }
  if (lhs.size() != s.cols() || rhs.size() != s.cols()) throw ShapeError("row length mismatch");
  const std::size_t n = s.cols();
  auto one_row = [&](std::span<const ExtInt> a, std::span<const ExtInt> b) {
    ExtMatrix l(0, n);
    ExtMatrix r(0, n);
    l.append_row(a);
    r.append_row(b);
    return TwoSidedSystem(std::move(l), std::move(r), Relation::Eq, Domain::Int);
  };
  if (!decider(s)) return true;
  if (!decider(stack(s, one_row(lhs, rhs)))) return false;
  // a + 1 <= b written as the equality (a + 1) . x = min(a + 1, b) . x.
  auto strict = [&](std::span<const ExtInt> a, std::span<const ExtInt> b) {
    Vector a1;
    Vector m;
    for (std::size_t j = 0; j < n; ++j) {
      a1.push_back(a[j] + ExtInt(1));
      m.push_back(min(a1.back(), b[j]));
    }
    return decider(stack(s, one_row(a1, m)));
  };
  return !strict(lhs, rhs) && !strict(rhs, lhs);
}

}  // namespace tropkit
