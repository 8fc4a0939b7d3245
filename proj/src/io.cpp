#include "tropkit/io.hpp"

#include <sstream>

#include "tropkit/errors.hpp"

namespace tropkit {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
      i = j;
    }
    if (!line.tokens.empty() && line.tokens.front().text[0] != '#') out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(tokenize(text)) {}

  const Line& next(const char* what) {
    if (at_ >= lines_.size()) {
      std::size_t line = lines_.empty() ? 1 : lines_.back().number + 1;
      throw ParseError(line, 1, std::string("unexpected end of input, expected ") + what);
    }
    return lines_[at_++];
  }

  void finish() const {
    if (at_ < lines_.size()) {
      throw ParseError(lines_[at_].number, lines_[at_].tokens.front().column, "trailing content");
    }
  }

 private:
  std::vector<Line> lines_;
  std::size_t at_ = 0;
};

[[noreturn]] void fail(const Line& l, const Token& t, const std::string& what) {
  throw ParseError(l.number, t.column, what);
}

[[noreturn]] void fail_end(const Line& l, const std::string& what) {
  std::size_t col = 1;
  if (!l.tokens.empty()) col = l.tokens.back().column + l.tokens.back().text.size();
  throw ParseError(l.number, col, what);
}

void expect_count(const Line& l, std::size_t n, const char* what) {
  if (l.tokens.size() < n) fail_end(l, std::string("too few tokens in ") + what);
  if (l.tokens.size() > n) fail(l, l.tokens[n], std::string("too many tokens in ") + what);
}

bool plain_integer(const std::string& s) {
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

Integer integer(const Line& l, const Token& t) {
  if (!plain_integer(t.text)) fail(l, t, "expected an integer, got '" + t.text + "'");
  return Integer(t.text[0] == '+' ? t.text.substr(1) : t.text);
}

ExtInt entry(const Line& l, const Token& t) {
  if (t.text == "inf") return ExtInt::infinity();
  return integer(l, t);
}

std::size_t count(const Line& l, const Token& t) {
  Integer v = integer(l, t);
  if (v < 0) fail(l, t, "expected a non-negative integer");
  if (v > Integer(1'000'000'000)) fail(l, t, "value too large");
  return static_cast<std::size_t>(v);
}

void keyword(const Line& l, const Token& t, const char* word) {
  if (t.text != word) fail(l, t, std::string("expected '") + word + "'");
}

std::optional<Domain> domain_token(const Line& l, std::size_t idx) {
  if (l.tokens.size() <= idx) return std::nullopt;
  const Token& t = l.tokens[idx];
  if (t.text == "z") return Domain::Int;
  if (t.text == "zinf") return Domain::IntInf;
  fail(l, t, "expected domain 'z' or 'zinf'");
}

// Reads `m` rows of `n` entries. Returns the first inf seen (line, column).
struct Rows {
  std::vector<Vector> rows;
  const Line* inf_line = nullptr;
  const Token* inf_token = nullptr;
};

void read_rows(Reader& r, std::size_t m, std::size_t n, Rows& out) {
  for (std::size_t i = 0; i < m; ++i) {
    const Line& l = r.next("a matrix row");
    expect_count(l, n, "matrix row");
    Vector row;
    row.reserve(n);
    for (const Token& t : l.tokens) {
      row.push_back(entry(l, t));
      if (row.back().is_infinite() && out.inf_line == nullptr) {
        out.inf_line = &l;
        out.inf_token = &t;
      }
    }
    out.rows.push_back(std::move(row));
  }
}

Domain resolve_domain(std::optional<Domain> declared, const Rows& rows) {
  if (declared == Domain::Int && rows.inf_line != nullptr) {
    fail(*rows.inf_line, *rows.inf_token, "inf entry in a z-domain system");
  }
  if (declared) return *declared;
  return rows.inf_line != nullptr ? Domain::IntInf : Domain::Int;
}

TropicalSystem read_tropical(Reader& r, const Line& h) {
  if (h.tokens.size() < 3) fail_end(h, "expected 'tropical m n'");
  if (h.tokens.size() > 4) fail(h, h.tokens[4], "too many tokens in header");
  std::size_t m = count(h, h.tokens[1]);
  std::size_t n = count(h, h.tokens[2]);
  if (n == 0) fail(h, h.tokens[2], "a system needs at least one column");
  auto declared = domain_token(h, 3);
  Rows rows;
  read_rows(r, m, n, rows);
  Domain d = resolve_domain(declared, rows);
  if (m == 0) return TropicalSystem(ExtMatrix(0, n), d);
  return TropicalSystem(ExtMatrix(n, rows.rows), d);
}

TwoSidedSystem read_twosided(Reader& r, const Line& h) {
  if (h.tokens.size() < 4) fail_end(h, "expected 'minplus (eq|le) m n'");
  if (h.tokens.size() > 5) fail(h, h.tokens[5], "too many tokens in header");
  Relation rel;
  if (h.tokens[1].text == "eq") {
    rel = Relation::Eq;
  } else if (h.tokens[1].text == "le") {
    rel = Relation::Le;
  } else {
    fail(h, h.tokens[1], "expected 'eq' or 'le'");
  }
  std::size_t m = count(h, h.tokens[2]);
  std::size_t n = count(h, h.tokens[3]);
  if (n == 0) fail(h, h.tokens[3], "a system needs at least one column");
  auto declared = domain_token(h, 4);
  Rows lhs;
  Rows rhs;
  read_rows(r, m, n, lhs);
  read_rows(r, m, n, rhs);
  Rows both = lhs.inf_line != nullptr ? lhs : rhs;
  Domain d = resolve_domain(declared, both);
  if (m == 0) return TwoSidedSystem(ExtMatrix(0, n), ExtMatrix(0, n), rel, d);
  return TwoSidedSystem(ExtMatrix(n, lhs.rows), ExtMatrix(n, rhs.rows), rel, d);
}

MaxAtomSystem read_map(Reader& r, const Line& h) {
  expect_count(h, 3, "header");
  std::size_t nvars = count(h, h.tokens[1]);
  std::size_t natoms = count(h, h.tokens[2]);
  auto var = [&](const Line& l, const Token& t, const std::string& text) {
    if (!plain_integer(text) || text[0] == '-' || text[0] == '+') fail(l, t, "bad variable index");
    std::size_t v = count(l, Token{text, t.column});
    if (v >= nvars) fail(l, t, "variable index out of range");
    return v;
  };
  std::vector<MaxAtom> atoms;
  for (std::size_t a = 0; a < natoms; ++a) {
    const Line& l = r.next("an atom line");
    if (l.tokens.size() < 4) fail_end(l, "expected 'atom z k t ...'");
    keyword(l, l.tokens[0], "atom");
    MaxAtom atom;
    atom.target = var(l, l.tokens[1], l.tokens[1].text);
    atom.k = integer(l, l.tokens[2]);
    std::size_t t = count(l, l.tokens[3]);
    if (t == 0) fail(l, l.tokens[3], "an atom needs at least one term");
    expect_count(l, 4 + t, "atom line");
    for (std::size_t i = 0; i < t; ++i) {
      const Token& tok = l.tokens[4 + i];
      auto colon = tok.text.find(':');
      Term term;
      if (colon == std::string::npos) {
        term.var = var(l, tok, tok.text);
      } else {
        term.var = var(l, tok, tok.text.substr(0, colon));
        std::string off = tok.text.substr(colon + 1);
        if (off.empty() || !plain_integer(off)) fail(l, tok, "bad term offset");
        term.offset = Integer(off[0] == '+' ? off.substr(1) : off);
      }
      atom.terms.push_back(std::move(term));
    }
    atoms.push_back(std::move(atom));
  }
  return MaxAtomSystem(nvars, std::move(atoms));
}

MeanPayoffGame read_mpg(Reader& r, const Line& h) {
  expect_count(h, 5, "header");
  std::size_t n1 = count(h, h.tokens[1]);
  std::size_t n2 = count(h, h.tokens[2]);
  std::size_t ne = count(h, h.tokens[3]);
  std::size_t start = count(h, h.tokens[4]);
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < ne; ++e) {
    const Line& l = r.next("an edge line");
    expect_count(l, 3, "edge line");
    Edge edge{count(l, l.tokens[0]), count(l, l.tokens[1]), integer(l, l.tokens[2])};
    if (edge.from >= n1 + n2) fail(l, l.tokens[0], "vertex out of range");
    if (edge.to >= n1 + n2) fail(l, l.tokens[1], "vertex out of range");
    edges.push_back(std::move(edge));
  }
  try {
    return MeanPayoffGame(n1, n2, std::move(edges), start);
  } catch (const PreconditionError& e) {
    fail(h, h.tokens[0], e.what());
  }
}

Graph read_graph(Reader& r, const Line& h) {
  expect_count(h, 3, "header");
  std::size_t n = count(h, h.tokens[1]);
  std::size_t m = count(h, h.tokens[2]);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t e = 0; e < m; ++e) {
    const Line& l = r.next("an edge line");
    expect_count(l, 2, "edge line");
    std::size_t u = count(l, l.tokens[0]);
    std::size_t v = count(l, l.tokens[1]);
    if (u >= n) fail(l, l.tokens[0], "vertex out of range");
    if (v >= n) fail(l, l.tokens[1], "vertex out of range");
    edges.emplace_back(u, v);
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const PreconditionError& e) {
    fail(h, h.tokens[0], e.what());
  }
}

DimensionCertificate read_certificate(Reader& r, const Line& h) {
  expect_count(h, 2, "header");
  DimensionCertificate c;
  c.claimed_k = integer(h, h.tokens[1]);
  const Line& w = r.next("a witness line");
  keyword(w, w.tokens[0], "witness");
  for (std::size_t i = 1; i < w.tokens.size(); ++i) c.witness.push_back(entry(w, w.tokens[i]));
  const Line& b = r.next("a blocks line");
  keyword(b, b.tokens[0], "blocks");
  expect_count(b, 2, "blocks line");
  std::size_t d = count(b, b.tokens[1]);
  for (std::size_t k = 0; k < d; ++k) {
    const Line& l = r.next("a block line");
    std::vector<std::size_t> block;
    for (const Token& t : l.tokens) block.push_back(count(l, t));
    c.form.blocks.push_back(std::move(block));
  }
  const Line& rows = r.next("a rows line");
  keyword(rows, rows.tokens[0], "rows");
  for (std::size_t i = 1; i < rows.tokens.size(); ++i) {
    const Token& t = rows.tokens[i];
    c.form.rows.push_back(t.text == "-" ? kUnassigned : count(rows, t));
  }
  return c;
}

Instance read_any(std::string_view text) {
  Reader r(text);
  const Line& h = r.next("a header");
  const std::string& kind = h.tokens[0].text;
  Instance out = [&]() -> Instance {
    if (kind == "tropical") return read_tropical(r, h);
    if (kind == "minplus") return read_twosided(r, h);
    if (kind == "map") return read_map(r, h);
    if (kind == "mpg") return read_mpg(r, h);
    if (kind == "graph") return read_graph(r, h);
    if (kind == "cert") return read_certificate(r, h);
    fail(h, h.tokens[0], "unknown header '" + kind + "'");
  }();
  r.finish();
  return out;
}

template <class T>
T read_as(std::string_view text, const char* name) {
  Instance i = read_any(text);
  if (auto* p = std::get_if<T>(&i)) return std::move(*p);
  throw ParseError(1, 1, std::string("expected a ") + name + " file");
}

void emit_row(std::ostringstream& os, std::span<const ExtInt> row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j) os << ' ';
    os << row[j];
  }
  os << '\n';
}

const char* domain_suffix(Domain d, bool has_inf) {
  return (d == Domain::IntInf && !has_inf) ? " zinf" : "";
}

}  // namespace

Instance parse_instance(std::string_view text) { return read_any(text); }

TropicalSystem parse_tropical(std::string_view text) {
  return read_as<TropicalSystem>(text, "tropical");
}
TwoSidedSystem parse_twosided(std::string_view text) {
  return read_as<TwoSidedSystem>(text, "minplus");
}
MaxAtomSystem parse_map(std::string_view text) { return read_as<MaxAtomSystem>(text, "map"); }
MeanPayoffGame parse_mpg(std::string_view text) { return read_as<MeanPayoffGame>(text, "mpg"); }
Graph parse_graph(std::string_view text) { return read_as<Graph>(text, "graph"); }
DimensionCertificate parse_certificate(std::string_view text) {
  return read_as<DimensionCertificate>(text, "cert");
}

std::string emit(const TropicalSystem& a) {
  std::ostringstream os;
  os << "tropical " << a.rows() << ' ' << a.cols()
     << domain_suffix(a.domain(), a.entries().has_infinity()) << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) emit_row(os, a.row(i));
  return os.str();
}

std::string emit(const TwoSidedSystem& s) {
  std::ostringstream os;
  bool inf = s.lhs().has_infinity() || s.rhs().has_infinity();
  os << "minplus " << (s.relation() == Relation::Eq ? "eq" : "le") << ' ' << s.rows() << ' '
     << s.cols() << domain_suffix(s.domain(), inf) << '\n';
  for (std::size_t i = 0; i < s.rows(); ++i) emit_row(os, s.lhs().row(i));
  for (std::size_t i = 0; i < s.rows(); ++i) emit_row(os, s.rhs().row(i));
  return os.str();
}

std::string emit(const MaxAtomSystem& s) {
  std::ostringstream os;
  os << "map " << s.nvars() << ' ' << s.atoms().size() << '\n';
  for (const MaxAtom& a : s.atoms()) {
    os << "atom " << a.target << ' ' << a.k << ' ' << a.terms.size();
    for (const Term& t : a.terms) {
      os << ' ' << t.var;
      if (t.offset != 0) os << ':' << t.offset;
    }
    os << '\n';
  }
  return os.str();
}

std::string emit(const MeanPayoffGame& g) {
  std::ostringstream os;
  os << "mpg " << g.n1() << ' ' << g.n2() << ' ' << g.edges().size() << ' ' << g.start() << '\n';
  for (const Edge& e : g.edges()) os << e.from << ' ' << e.to << ' ' << e.weight << '\n';
  return os.str();
}

std::string emit(const Graph& g) {
  std::ostringstream os;
  os << "graph " << g.vertices() << ' ' << g.edges().size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string emit(const DimensionCertificate& c) {
  std::ostringstream os;
  os << "cert " << c.claimed_k << '\n';
  os << "witness";
  for (const ExtInt& x : c.witness) os << ' ' << x;
  os << "\nblocks " << c.form.blocks.size() << '\n';
  for (const auto& b : c.form.blocks) {
    for (std::size_t k = 0; k < b.size(); ++k) os << (k ? " " : "") << b[k];
    os << '\n';
  }
  os << "rows";
  for (std::size_t r : c.form.rows) {
    os << ' ';
    if (r == kUnassigned) {
      os << '-';
    } else {
      os << r;
    }
  }
  os << '\n';
  return os.str();
}

std::string emit(const Instance& i) {
  return std::visit([](const auto& x) { return emit(x); }, i);
}

std::string emit_vector(const Vector& x) {
  std::ostringstream os;
  for (std::size_t j = 0; j < x.size(); ++j) os << (j ? " " : "") << x[j];
  return os.str();
}

}  // namespace tropkit
