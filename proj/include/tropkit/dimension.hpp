#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tropkit/matrix.hpp"
#include "tropkit/reductions.hpp"

namespace tropkit {

enum class BtfKind { Tropical, MinPlusEq, MinPlusIneq };

inline constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

/// Ordered column blocks C_1..C_d and a block index per row.
struct BlockTriangularForm {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> rows;

  std::size_t size() const noexcept { return blocks.size(); }
  friend bool operator==(const BlockTriangularForm&, const BlockTriangularForm&) = default;
};

/// Literal check of the block conditions for `kind`. Blocks partition the
/// variables of `t`; every row names a block. Throws PreconditionError on a
/// malformed partition or assignment.
bool verify_btf(const StarTable& t, const BlockTriangularForm& f, BtfKind kind);

struct BtfResult {
  std::size_t size = 0;
  BlockTriangularForm form;
};

/// Largest block triangular form; among maxima the lexicographically smallest
/// block sequence. Throws BudgetExceeded above `column_cap` variables and
/// PreconditionError when no form exists.
BtfResult max_btf(const StarTable& t, BtfKind kind, std::size_t column_cap = 16);

BtfKind kind_of(Relation r);

struct LocalDimension {
  /// Projective dimension; affine is one more.
  std::size_t projective = 0;
  /// Form over the finite coordinates of the point, in original column and row
  /// indices. Rows ignored at the point carry kUnassigned.
  BlockTriangularForm form;
};

/// Local projective dimension at a solution x. Throws PreconditionError when x
/// is not a solution.
LocalDimension local_dimension_form(const TropicalSystem& a, std::span<const ExtInt> x);
LocalDimension local_dimension_form(const TwoSidedSystem& s, std::span<const ExtInt> x);
std::size_t local_dimension(const TropicalSystem& a, std::span<const ExtInt> x);
std::size_t local_dimension(const TwoSidedSystem& s, std::span<const ExtInt> x);

struct GlobalDimension {
  std::size_t projective = 0;
  Vector witness;
  BlockTriangularForm form;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/// Maximum local dimension over all solutions, or nullopt when unsolvable.
/// Points are searched up to shifts with every gap between consecutive
/// distinct coordinates at most M + 1, which realizes every star table.
std::optional<GlobalDimension> global_dimension(const TropicalSystem& a,
                                                std::uint64_t budget = kDefaultSearchBudget);
std::optional<GlobalDimension> global_dimension(const TwoSidedSystem& s,
                                                std::uint64_t budget = kDefaultSearchBudget);

enum class Convention { Affine, Projective };

bool decide_dim_at_least(const TropicalSystem& a, const Integer& k, Convention c);
bool decide_dim_at_least(const TwoSidedSystem& s, const Integer& k, Convention c);

struct DimensionCertificate {
  Vector witness;
  BlockTriangularForm form;
  /// Projective dimension claimed.
  Integer claimed_k = 0;

  friend bool operator==(const DimensionCertificate&, const DimensionCertificate&) = default;
};

bool verify_certificate(const TropicalSystem& a, const DimensionCertificate& cert);
bool verify_certificate(const TwoSidedSystem& s, const DimensionCertificate& cert);

/// Certificate from the global maximum, or nullopt when unsolvable.
std::optional<DimensionCertificate> make_certificate(const TropicalSystem& a);
std::optional<DimensionCertificate> make_certificate(const TwoSidedSystem& s);

// ---- vertex cover ----

/// Simple undirected graph.
class Graph {
 public:
  /// Throws PreconditionError on a self-loop, duplicate edge or bad index.
  Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertices() const noexcept { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  bool connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Column 0 all zeros; entry (e, v + 1) is 0 iff v is an endpoint of e, else 1.
TropicalSystem vc_to_tropical(const Graph& g);

/// (a_0 + 1, A') . x = (a_0, A' + 1) . x for A = (a_0, A') = vc_to_tropical(g).
TwoSidedSystem vc_to_minplus(const Graph& g);

std::size_t min_vertex_cover(const Graph& g);

/// Size of the largest column subset whose tropical system is unsolvable.
std::size_t tropical_rank(const TropicalSystem& a, const TropicalDecider& decider,
                          std::size_t column_cap = 16);

}  // namespace tropkit
