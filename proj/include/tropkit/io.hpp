#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "tropkit/dimension.hpp"
#include "tropkit/maxatom.hpp"
#include "tropkit/matrix.hpp"
#include "tropkit/mpgame.hpp"

namespace tropkit {

// Line-oriented text formats. Tokens are whitespace separated; blank lines and
// lines starting with '#' are skipped. Headers:
//
//   tropical m n [z|zinf]              m rows of n entries
//   minplus (eq|le) m n [z|zinf]       m lhs rows, then m rhs rows
//   map nvars natoms                   lines "atom z k t v1 ... vt", vi = x or x:o
//   mpg n1 n2 nE start                 nE lines "u v w"
//   graph n m                          m lines "u v"
//   cert K                             "witness x1..xn", "blocks d", d lines of
//                                      column indices, "rows b1..bm" ('-' = none)
//
// Entries are decimal integers or "inf". The domain token is only needed for
// a Z-infinity system without any inf entry.

using Instance = std::variant<TropicalSystem, TwoSidedSystem, MaxAtomSystem, MeanPayoffGame, Graph,
                              DimensionCertificate>;

/// Throws ParseError (1-based line and column) on malformed input.
Instance parse_instance(std::string_view text);

TropicalSystem parse_tropical(std::string_view text);
TwoSidedSystem parse_twosided(std::string_view text);
MaxAtomSystem parse_map(std::string_view text);
MeanPayoffGame parse_mpg(std::string_view text);
Graph parse_graph(std::string_view text);
DimensionCertificate parse_certificate(std::string_view text);

std::string emit(const TropicalSystem& a);
std::string emit(const TwoSidedSystem& s);
std::string emit(const MaxAtomSystem& s);
std::string emit(const MeanPayoffGame& g);
std::string emit(const Graph& g);
std::string emit(const DimensionCertificate& c);
std::string emit(const Instance& i);

/// Space-separated coordinates.
std::string emit_vector(const Vector& x);

}  // namespace tropkit
