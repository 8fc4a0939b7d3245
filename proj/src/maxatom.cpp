#include "tropkit/maxatom.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <utility>

#include "tropkit/errors.hpp"

namespace tropkit {

MaxAtomSystem::MaxAtomSystem(std::size_t nvars, std::vector<MaxAtom> atoms)
    : nvars_(nvars), atoms_(std::move(atoms)) {
  for (const auto& a : atoms_) {
    if (a.terms.empty()) throw ShapeError("max-atom without terms");
    if (a.target >= nvars_) throw ShapeError("max-atom target out of range");
    for (const auto& t : a.terms) {
      if (t.var >= nvars_) throw ShapeError("max-atom term variable out of range");
    }
  }
}

bool MaxAtomSystem::is_binary() const {
  for (const auto& a : atoms_) {
    if (a.terms.size() != 2 || a.terms[0].offset != 0 || a.terms[1].offset != 0) return false;
  }
  return true;
}

bool atom_holds(const MaxAtom& atom, std::span<const Integer> x) {
  if (atom.target >= x.size()) throw ShapeError("assignment too short for atom");
  Integer best;
  bool first = true;
  for (const auto& t : atom.terms) {
    if (t.var >= x.size()) throw ShapeError("assignment too short for atom");
    Integer v = x[t.var] + t.offset;
    if (first || v > best) best = std::move(v);
    first = false;
  }
  return best + atom.k >= x[atom.target];
}

bool satisfies(const MaxAtomSystem& s, std::span<const Integer> x) {
  if (x.size() != s.nvars()) throw ShapeError("assignment length differs from nvars");
  for (const auto& a : s.atoms()) {
    if (!atom_holds(a, x)) return false;
  }
  return true;
}

bool satisfies(const MaxAtomSystem& s, std::span<const std::optional<Integer>> x) {
  if (x.size() != s.nvars()) throw ShapeError("assignment length differs from nvars");
  for (const auto& a : s.atoms()) {
    if (!x[a.target]) continue;
    std::optional<Integer> best;
    for (const auto& t : a.terms) {
      if (!x[t.var]) continue;
      Integer v = *x[t.var] + t.offset;
      if (!best || v > *best) best = std::move(v);
    }
    if (!best || *best + a.k < *x[a.target]) return false;
  }
  return true;
}

Integer constant_sum(const MaxAtomSystem& s) {
  Integer c = 0;
  for (const auto& a : s.atoms()) {
    c += abs(a.k);
    for (const auto& t : a.terms) c += abs(t.offset);
  }
  return c;
}

MaxAtomSystem to_binary_form(const MaxAtomSystem& s) {
  if (s.is_binary()) return s;
  std::size_t nvars = s.nvars();
  std::vector<MaxAtom> out;
  std::vector<MaxAtom> links;
  std::map<std::pair<std::size_t, Integer>, std::size_t> shifted;

  auto shifted_var = [&](std::size_t x, const Integer& a) {
    auto [it, fresh] = shifted.try_emplace({x, a}, nvars);
    if (fresh) {
      std::size_t u = nvars++;
      links.push_back({u, {{x, 0}, {x, 0}}, a});
      links.push_back({x, {{u, 0}, {u, 0}}, -a});
    }
    return it->second;
  };

  for (const auto& atom : s.atoms()) {
    if (atom.terms.size() == 1) {
      const auto& t = atom.terms.front();
      out.push_back({atom.target, {{t.var, 0}, {t.var, 0}}, atom.k + t.offset});
      continue;
    }
    std::vector<std::size_t> vars;
    for (const auto& t : atom.terms) {
      vars.push_back(t.offset == 0 ? t.var : shifted_var(t.var, t.offset));
    }
    // Fold the front pair into a fresh w <= max{t1,t2} until two terms remain.
    std::size_t head = vars[0];
    for (std::size_t i = 1; i + 1 < vars.size(); ++i) {
      std::size_t w = nvars++;
      out.push_back({w, {{head, 0}, {vars[i], 0}}, 0});
      head = w;
    }
    out.push_back({atom.target, {{head, 0}, {vars.back(), 0}}, atom.k});
  }
  out.insert(out.end(), links.begin(), links.end());
  return MaxAtomSystem(nvars, std::move(out));
}

namespace {

template <class T>
struct Atom {
  std::size_t target;
  std::vector<std::pair<std::size_t, T>> terms;
  T k;
};

template <class T>
T narrow(const Integer& v) {
  if constexpr (std::is_same_v<T, Integer>) {
    return v;
  } else {
    return v.template convert_to<T>();
  }
}

// Values are T; dead[v] marks -inf. Returns nullopt on UNSAT (finite mode) or
// when every variable died.
template <class T>
std::optional<std::vector<std::optional<T>>> fixpoint(const MaxAtomSystem& s, const Integer& spread,
                                                      bool allow_neg_inf) {
  const std::size_t n = s.nvars();
  std::vector<Atom<T>> atoms;
  atoms.reserve(s.atoms().size());
  std::vector<std::vector<std::size_t>> users(n);
  for (std::size_t i = 0; i < s.atoms().size(); ++i) {
    const auto& a = s.atoms()[i];
    Atom<T> b{a.target, {}, narrow<T>(a.k)};
    for (const auto& t : a.terms) {
      b.terms.emplace_back(t.var, narrow<T>(t.offset));
      users[t.var].push_back(i);
    }
    atoms.push_back(std::move(b));
  }
  const T floor = -narrow<T>(spread);

  std::vector<T> x(n, T(0));
  std::vector<char> dead(n, 0);
  std::vector<char> queued(atoms.size(), 1);
  std::deque<std::size_t> work;
  for (std::size_t i = 0; i < atoms.size(); ++i) work.push_back(i);

  while (!work.empty()) {
    const std::size_t i = work.front();
    work.pop_front();
    queued[i] = 0;
    const auto& a = atoms[i];
    if (dead[a.target]) continue;
    bool any = false;
    T best{};
    for (const auto& [v, o] : a.terms) {
      if (dead[v]) continue;
      T val = x[v] + o;
      if (!any || val > best) best = std::move(val);
      any = true;
    }
    bool lowered = false;
    if (!any) {
      if (!allow_neg_inf) return std::nullopt;
      dead[a.target] = 1;
      lowered = true;
    } else {
      T bound = best + a.k;
      if (bound < x[a.target]) {
        lowered = true;
        if (bound < floor) {
          if (!allow_neg_inf) return std::nullopt;
          dead[a.target] = 1;
        } else {
          x[a.target] = std::move(bound);
        }
      }
    }
    if (lowered) {
      for (std::size_t u : users[a.target]) {
        if (!queued[u]) {
          queued[u] = 1;
          work.push_back(u);
        }
      }
    }
  }

  std::vector<std::optional<T>> out(n);
  bool alive = false;
  for (std::size_t v = 0; v < n; ++v) {
    if (!dead[v]) {
      out[v] = x[v];
      alive = true;
    }
  }
  if (!alive && n > 0) return std::nullopt;
  return out;
}

bool fits_int64(const MaxAtomSystem& s, const Integer& spread) {
  static const Integer limit = Integer(1) << 60;
  return spread + constant_sum(s) < limit;
}

std::optional<PartialAssignment> run(const MaxAtomSystem& s, const std::optional<Integer>& spread,
                                     bool allow_neg_inf) {
  const Integer c = spread.value_or(constant_sum(s));
  if (c < 0) throw PreconditionError("negative spread bound");
  PartialAssignment out;
  if (fits_int64(s, c)) {
    auto r = fixpoint<std::int64_t>(s, c, allow_neg_inf);
    if (!r) return std::nullopt;
    for (const auto& v : *r) out.push_back(v ? std::optional<Integer>(*v) : std::nullopt);
  } else {
    auto r = fixpoint<Integer>(s, c, allow_neg_inf);
    if (!r) return std::nullopt;
    out = std::move(*r);
  }
  if (!satisfies(s, std::span<const std::optional<Integer>>(out))) {
    throw InternalError("max-atom fixpoint is not a solution");
  }
  return out;
}

}  // namespace

std::optional<Assignment> solve(const MaxAtomSystem& s, const std::optional<Integer>& spread) {
  auto r = run(s, spread, false);
  if (!r) return std::nullopt;
  Assignment out;
  out.reserve(r->size());
  for (auto& v : *r) out.push_back(std::move(*v));
  return out;
}

std::optional<PartialAssignment> solve_with_neg_inf(const MaxAtomSystem& s,
                                                    const std::optional<Integer>& spread) {
  return run(s, spread, true);
}

}  // namespace tropkit
