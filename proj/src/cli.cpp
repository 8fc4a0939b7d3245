#include "tropkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "tropkit/core.hpp"
#include "tropkit/dimension.hpp"
#include "tropkit/errors.hpp"
#include "tropkit/io.hpp"
#include "tropkit/mpgame.hpp"
#include "tropkit/oracles.hpp"
#include "tropkit/reductions.hpp"

namespace tropkit {

namespace {

/// Bad input that is not a grammar error (wrong file kind, bad flag value).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t oracle_budget() {
  const char* env = std::getenv("TROPKIT_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultOracleBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError("TROPKIT_BUDGET must be a positive integer");
  return v;
}

class Context {
 public:
  Context(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string slurp(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw UsageError("stdin can be read only once");
      stdin_used_ = true;
      return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  Instance load(const std::string& path) {
    try {
      return parse_instance(slurp(path));
    } catch (const ParseError& e) {
      throw ParseError(e.line(), e.column(), path + ": " + strip(e.what()));
    }
  }

  template <class T>
  T load_as(const std::string& path, const char* kind) {
    Instance i = load(path);
    if (auto* p = std::get_if<T>(&i)) return std::move(*p);
    throw UsageError(path + ": expected a " + std::string(kind) + " file");
  }

  void write(const std::string& path, const std::string& text) {
    if (path == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw UsageError("cannot write " + path);
  }

  std::ostream& out() { return out_; }

 private:
  static std::string strip(const std::string& what) {
    // drop the "line:col: " prefix that ParseError prepends
    auto p = what.find(": ");
    return p == std::string::npos ? what : what.substr(p + 2);
  }

  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

Vector parse_point(const std::string& text) {
  Vector x;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto v = parse_ext_int(tok);
    if (!v) throw UsageError("bad coordinate '" + tok + "' in --at");
    x.push_back(*v);
  }
  return x;
}

TropicalDecider default_decider() { return tropical_solvable; }

int report_witness(Context& ctx, const std::optional<Vector>& x) {
  if (!x) {
    ctx.out() << "unsolvable\n";
    return kNo;
  }
  ctx.out() << emit_vector(*x) << '\n';
  return kYes;
}

int cmd_solve(Context& ctx, const std::string& file, bool oracle, const std::string& via) {
  auto a = ctx.load_as<TropicalSystem>(file, "tropical");
  std::uint64_t budget = oracle_budget();
  std::optional<Vector> x;
  if (oracle) {
    x = a.domain() == Domain::Int ? brute_tropsolv(a, budget) : brute_tropsolv_inf(a, budget);
  } else if (via == "infelim") {
    x = solve_tropical_via_infelim(a);
  } else {
    x = solve_tropical(a);
  }
  return report_witness(ctx, x);
}

int cmd_minplus_solve(Context& ctx, const std::string& file, bool oracle) {
  auto s = ctx.load_as<TwoSidedSystem>(file, "minplus");
  auto x = oracle ? brute_minplus(s, oracle_budget()) : solve_minplus(s);
  return report_witness(ctx, x);
}

struct DimOptions {
  std::string file;
  std::string at;
  bool global = false;
  bool projective = false;
  std::optional<std::string> at_least;
  std::string cert_path;
};

int cmd_dim(Context& ctx, const DimOptions& o) {
  Instance inst = ctx.load(o.file);
  if (!std::holds_alternative<TropicalSystem>(inst) &&
      !std::holds_alternative<TwoSidedSystem>(inst)) {
    throw UsageError(o.file + ": expected a tropical or minplus file");
  }
  std::optional<Integer> k;
  if (o.at_least) {
    auto v = parse_ext_int(*o.at_least);
    if (!v || v->is_infinite()) throw UsageError("--at-least needs an integer");
    k = v->value();
  }

  DimensionCertificate cert;
  bool solvable = std::visit(
      [&](const auto& sys) -> bool {
        using T = std::decay_t<decltype(sys)>;
        if constexpr (std::is_same_v<T, TropicalSystem> || std::is_same_v<T, TwoSidedSystem>) {
          if (o.global) {
            auto g = global_dimension(sys, oracle_budget());
            if (!g) return false;
            cert = {g->witness, g->form, Integer(g->projective)};
          } else {
            Vector x = parse_point(o.at);
            auto l = local_dimension_form(sys, x);
            cert = {x, l.form, Integer(l.projective)};
          }
          return true;
        }
        return false;
      },
      inst);
  if (!solvable) {
    ctx.out() << "unsolvable\n";
    return kNo;
  }

  Integer d = cert.claimed_k + (o.projective ? 0 : 1);
  ctx.out() << "dimension " << d << (o.projective ? " projective" : " affine") << '\n';
  if (o.global) ctx.out() << "witness " << emit_vector(cert.witness) << '\n';
  if (!o.cert_path.empty()) ctx.write(o.cert_path, emit(cert));
  if (k) return d >= *k ? kYes : kNo;
  return kYes;
}

int cmd_certify(Context& ctx, const std::string& file, const std::string& cert_file) {
  Instance inst = ctx.load(file);
  auto cert = ctx.load_as<DimensionCertificate>(cert_file, "cert");
  bool ok;
  if (auto* a = std::get_if<TropicalSystem>(&inst)) {
    ok = verify_certificate(*a, cert);
  } else if (auto* s = std::get_if<TwoSidedSystem>(&inst)) {
    ok = verify_certificate(*s, cert);
  } else {
    throw UsageError(file + ": expected a tropical or minplus file");
  }
  ctx.out() << (ok ? "valid" : "invalid") << '\n';
  return ok ? kYes : kNo;
}

bool tropical_implies(const TropicalSystem& a, std::span<const ExtInt> l, bool oracle) {
  bool inf = a.domain() == Domain::IntInf ||
             std::any_of(l.begin(), l.end(), [](const ExtInt& e) { return e.is_infinite(); });
  if (oracle) return inf ? brute_implies_inf(a, l, oracle_budget()) : brute_implies(a, l, oracle_budget());
  return inf ? implies_inf(a, l, default_decider()) : implies(a, l, default_decider());
}

int cmd_implies(Context& ctx, const std::string& sys_file, const std::string& row_file,
                bool oracle) {
  Instance sys = ctx.load(sys_file);
  Instance row = ctx.load(row_file);
  bool result;
  if (auto* a = std::get_if<TropicalSystem>(&sys)) {
    auto* l = std::get_if<TropicalSystem>(&row);
    if (l == nullptr || l->rows() != 1) throw UsageError(row_file + ": expected a one-row tropical file");
    if (l->cols() != a->cols()) throw UsageError("row length differs from the system");
    result = tropical_implies(*a, l->row(0), oracle);
  } else if (auto* s = std::get_if<TwoSidedSystem>(&sys)) {
    auto* l = std::get_if<TwoSidedSystem>(&row);
    if (l == nullptr || l->rows() != 1 || l->relation() != Relation::Eq) {
      throw UsageError(row_file + ": expected a one-row 'minplus eq' file");
    }
    if (l->cols() != s->cols()) throw UsageError("row length differs from the system");
    result = oracle ? brute_minplus_implies(*s, l->lhs().row(0), l->rhs().row(0), oracle_budget())
                    : minplus_implies(*s, l->lhs().row(0), l->rhs().row(0), minplus_solvable);
  } else {
    throw UsageError(sys_file + ": expected a tropical or minplus file");
  }
  ctx.out() << (result ? "implied" : "not implied") << '\n';
  return result ? kYes : kNo;
}

bool minplus_all_implied(const TwoSidedSystem& a, const TwoSidedSystem& b) {
  for (std::size_t r = 0; r < b.rows(); ++r) {
    if (!minplus_implies(a, b.lhs().row(r), b.rhs().row(r), minplus_solvable)) return false;
  }
  return true;
}

int cmd_equiv(Context& ctx, const std::string& f1, const std::string& f2) {
  Instance p = ctx.load(f1);
  Instance q = ctx.load(f2);
  bool result;
  if (auto* a = std::get_if<TropicalSystem>(&p)) {
    auto* b = std::get_if<TropicalSystem>(&q);
    if (b == nullptr) throw UsageError(f2 + ": expected a tropical file");
    if (a->cols() != b->cols()) throw UsageError("systems have different column counts");
    result = equivalent(*a, *b, default_decider());
  } else if (auto* s = std::get_if<TwoSidedSystem>(&p)) {
    auto* t = std::get_if<TwoSidedSystem>(&q);
    if (t == nullptr) throw UsageError(f2 + ": expected a minplus file");
    if (s->cols() != t->cols()) throw UsageError("systems have different column counts");
    if (s->relation() != Relation::Eq || t->relation() != Relation::Eq) {
      throw UsageError("minplus equivalence needs 'eq' systems");
    }
    result = minplus_all_implied(*s, *t) && minplus_all_implied(*t, *s);
  } else {
    throw UsageError(f1 + ": expected a tropical or minplus file");
  }
  ctx.out() << (result ? "equivalent" : "not equivalent") << '\n';
  return result ? kYes : kNo;
}

TropicalSystem finite_form(const TropicalSystem& a) {
  auto c = canonicalize(a);
  const auto trivial = TropicalSystem::from_rows({{0, 0}});
  if (c.infinite_column || c.system.rows() == 0) return trivial;
  if (a.domain() == Domain::Int) return c.system;
  std::vector<TropicalSystem> parts;
  for (std::size_t i = 0; i < a.cols(); ++i) parts.push_back(inf_elimination(c.system, i));
  return combine_or(parts);
}

int cmd_reduce(Context& ctx, const std::string& file, const std::string& to) {
  Instance inst = ctx.load(file);
  std::string text;
  if (to == "map") {
    if (auto* a = std::get_if<TropicalSystem>(&inst)) {
      text = emit(tropical_to_maxatom(*a).system);
    } else if (auto* s = std::get_if<TwoSidedSystem>(&inst)) {
      text = emit(minplus_to_maxatom(*s));
    } else {
      throw UsageError(file + ": expected a tropical or minplus file");
    }
  } else if (to == "minplus") {
    auto* a = std::get_if<TropicalSystem>(&inst);
    if (a == nullptr) throw UsageError(file + ": expected a tropical file");
    text = emit(tropical_to_minplus(*a));
  } else if (to == "tropical-of-map") {
    auto* s = std::get_if<MaxAtomSystem>(&inst);
    if (s == nullptr) throw UsageError(file + ": expected a map file");
    text = emit(maxatom_to_tropical(to_binary_form(*s)).system);
  } else {
    auto* a = std::get_if<TropicalSystem>(&inst);
    if (a == nullptr) throw UsageError(file + ": expected a tropical file");
    text = emit(finite_form(*a));
  }
  ctx.out() << text;
  return kYes;
}

int cmd_gen_vc(Context& ctx, const std::string& file, bool minplus) {
  auto g = ctx.load_as<Graph>(file, "graph");
  ctx.out() << (minplus ? emit(vc_to_minplus(g)) : emit(vc_to_tropical(g)));
  return kYes;
}

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

int cmd_mpg(Context& ctx, const std::string& action, const std::vector<std::string>& files) {
  std::vector<MeanPayoffGame> games;
  for (const auto& f : files) games.push_back(ctx.load_as<MeanPayoffGame>(f, "mpg"));
  if (action == "combine") {
    ctx.out() << emit(combine_and(games));
    return kYes;
  }
  if (games.size() != 1) throw UsageError("mpg " + action + " takes exactly one file");
  if (action == "negate") {
    ctx.out() << emit(negate(games[0]));
    return kYes;
  }
  Rational v = value_iteration(games[0]);
  bool win = v > 0;
  ctx.out() << "value " << rational_text(v) << '\n' << "winner " << (win ? 1 : 2) << '\n';
  return win ? kYes : kNo;
}

int cmd_rank(Context& ctx, const std::string& file) {
  auto a = ctx.load_as<TropicalSystem>(file, "tropical");
  ctx.out() << "rank " << tropical_rank(a, default_decider()) << '\n';
  return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact tropical linear algebra toolkit", "tropkit"};
  app.require_subcommand(1);

  std::string file;
  std::string file2;
  bool oracle = false;

  auto* solve = app.add_subcommand("solve", "Solve a tropical system");
  std::string via = "map";
  solve->add_option("FILE", file, "tropical file")->required();
  solve->add_flag("--oracle", oracle, "use the exhaustive oracle");
  solve->add_option("--via", via, "pipeline")->check(CLI::IsMember({"map", "infelim"}));

  auto* msolve = app.add_subcommand("minplus-solve", "Solve a two-sided min-plus system");
  msolve->add_option("FILE", file, "minplus file")->required();
  msolve->add_flag("--oracle", oracle, "use the exhaustive oracle");

  auto* dim = app.add_subcommand("dim", "Local or global dimension of the solution set");
  DimOptions dopt;
  bool affine = false;
  dim->add_option("FILE", dopt.file, "tropical or minplus file")->required();
  auto* at = dim->add_option("--at", dopt.at, "comma separated solution point");
  auto* glob = dim->add_flag("--global", dopt.global, "maximize over all solutions");
  at->excludes(glob);
  auto* aff = dim->add_flag("--affine", affine, "report affine dimension (default)");
  auto* proj = dim->add_flag("--projective", dopt.projective, "report projective dimension");
  aff->excludes(proj);
  dim->add_option("--at-least", dopt.at_least, "exit 0 iff the dimension is at least K");
  dim->add_option("--emit-cert", dopt.cert_path, "write a certificate to PATH ('-' = stdout)");

  auto* certify = app.add_subcommand("certify", "Check a dimension certificate");
  certify->add_option("FILE", file, "tropical or minplus file")->required();
  certify->add_option("CERTFILE", file2, "certificate file")->required();

  auto* impl = app.add_subcommand("implies", "Does the system imply the row?");
  impl->add_option("SYSFILE", file, "system file")->required();
  impl->add_option("ROWFILE", file2, "one-row file")->required();
  impl->add_flag("--oracle", oracle, "use the exhaustive oracle");

  auto* equiv = app.add_subcommand("equiv", "Do two systems have the same solutions?");
  equiv->add_option("FILE1", file, "first system")->required();
  equiv->add_option("FILE2", file2, "second system")->required();

  auto* reduce = app.add_subcommand("reduce", "Translate an instance");
  std::string to;
  reduce->add_option("FILE", file, "input file")->required();
  reduce->add_option("--to", to, "target")
      ->required()
      ->check(CLI::IsMember({"map", "minplus", "tropical-of-map", "finite"}));

  auto* gen = app.add_subcommand("gen", "Generate instances");
  std::string family;
  bool gen_minplus = false;
  gen->add_option("FAMILY", family, "instance family")->required()->check(CLI::IsMember({"vc"}));
  gen->add_option("GRAPHFILE", file, "graph file")->required();
  gen->add_flag("--minplus", gen_minplus, "emit the two-sided variant");

  auto* mpg = app.add_subcommand("mpg", "Mean payoff games");
  std::string action;
  std::vector<std::string> files;
  mpg->add_option("ACTION", action, "solve, negate or combine")
      ->required()
      ->check(CLI::IsMember({"solve", "negate", "combine"}));
  mpg->add_option("FILE", files, "game files")->required();

  auto* rank = app.add_subcommand("rank", "Tropical rank of a matrix");
  rank->add_option("FILE", file, "tropical file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsage;
  }
  if (dim->parsed() && !dopt.global && dopt.at.empty()) {
    err << "dim: one of --at or --global is required\n";
    return kUsage;
  }

  Context ctx(in, out);
  try {
    if (solve->parsed()) return cmd_solve(ctx, file, oracle, via);
    if (msolve->parsed()) return cmd_minplus_solve(ctx, file, oracle);
    if (dim->parsed()) return cmd_dim(ctx, dopt);
    if (certify->parsed()) return cmd_certify(ctx, file, file2);
    if (impl->parsed()) return cmd_implies(ctx, file, file2, oracle);
    if (equiv->parsed()) return cmd_equiv(ctx, file, file2);
    if (reduce->parsed()) return cmd_reduce(ctx, file, to);
    if (gen->parsed()) return cmd_gen_vc(ctx, file, gen_minplus);
    if (mpg->parsed()) return cmd_mpg(ctx, action, files);
    if (rank->parsed()) return cmd_rank(ctx, file);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace tropkit
