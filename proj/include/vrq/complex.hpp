#pragma once

// Flag complexes on Hamming spaces and the derived constructions used by the
// homology experiments: links, vertex deletion, induced subcomplexes, star
// clusters and Kneser independence complexes.
//
// A Skeleton stores, per dimension, the sorted colexicographic ranks of its
// simplices. Vertex labels are never renumbered, so the ranks of a derived
// complex are directly comparable with those of its parent.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vrq/hamming.hpp"

namespace vrq {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;

/// Strictly increasing vertex list.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<VertexLabel> vertices);
  /// Throws InvalidArgument unless `vertices` is strictly increasing.
  explicit Simplex(std::vector<VertexLabel> vertices);
  /// Sorts and checks for duplicates.
  static Simplex from_unsorted(std::vector<VertexLabel> vertices);

  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  VertexLabel operator[](std::size_t i) const { return vertices_[i]; }
  VertexLabel back() const { return vertices_.back(); }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }
  const std::vector<VertexLabel>& vertices() const noexcept { return vertices_; }

  bool contains(VertexLabel v) const;
  Simplex with_vertex(VertexLabel v) const;
  Simplex without_index(std::size_t i) const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<VertexLabel> vertices_;
};

/// Binomial coefficients C(a, b) for a < universe, b <= max_k, saturating at
/// UINT64_MAX on overflow. Backs the combinatorial number system.
class BinomialTable {
 public:
  static constexpr std::uint64_t kOverflow = UINT64_MAX;

  BinomialTable(std::uint64_t universe, unsigned max_k);

  std::uint64_t operator()(std::uint64_t a, unsigned b) const;
  std::uint64_t universe() const noexcept { return universe_; }
  unsigned max_k() const noexcept { return max_k_; }

 private:
  std::uint64_t universe_;
  unsigned max_k_;
  bool tabulated_;
  std::vector<std::uint64_t> table_;  // row-major, (max_k + 1) per row
};

struct SimplexRank {
  unsigned dimension = 0;
  std::uint64_t rank = 0;
  friend bool operator==(const SimplexRank&, const SimplexRank&) = default;
};

/// Colex rank: sum over i of C(v_i, i + 1). Throws SizeBudgetExceeded if the
/// rank space C(universe, dim + 1) does not fit in 64 bits.
SimplexRank simplex_rank(const Simplex& sigma, std::uint64_t universe_size);
Simplex simplex_unrank(SimplexRank rank, std::uint64_t universe_size);

/// Provenance of a skeleton.
struct SkeletonSource {
  enum class Kind { metric, link, deletion, induced, star_cluster, kneser, explicit_list };

  Kind kind = Kind::explicit_list;
  std::optional<SpaceSpec> space;  // metric-sourced skeletons and their derivatives
  std::string description;
};

class Skeleton {
 public:
  Skeleton(SkeletonSource source, unsigned dim_cap, std::uint64_t universe_size,
           std::vector<std::vector<std::uint64_t>> layers, bool complete_flag, bool is_flag,
           unsigned stored_from = 0, std::vector<std::uint64_t> counts = {});

  const SkeletonSource& source() const noexcept { return source_; }
  unsigned dim_cap() const noexcept { return dim_cap_; }
  std::uint64_t universe_size() const noexcept { return universe_; }
  /// True iff no simplex of dimension dim_cap + 1 exists.
  bool complete_flag() const noexcept { return complete_; }
  /// True iff the complex is the clique complex of its 1-skeleton.
  bool is_flag() const noexcept { return flag_; }
  /// Layers below this dimension were counted but not stored.
  unsigned stored_from() const noexcept { return stored_from_; }
  bool stores(unsigned k) const noexcept { return k >= stored_from_ && k <= dim_cap_; }

  /// Sorted colex ranks of the k-simplices.
  const std::vector<std::uint64_t>& layer(unsigned k) const;
  std::uint64_t count(unsigned k) const;
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t total_count() const;
  /// Highest nonempty dimension, or -1 for the empty complex.
  int top_dimension() const;

  Simplex simplex(unsigned k, std::size_t index) const;
  std::optional<std::size_t> index_of(unsigned k, std::uint64_t rank) const;
  std::optional<std::size_t> index_of(const Simplex& sigma) const;
  bool contains(const Simplex& sigma) const;
  bool has_vertex(VertexLabel v) const;
  std::vector<VertexLabel> vertices() const;
  bool adjacent(VertexLabel a, VertexLabel b) const;

  const BinomialTable& binomial() const { return *binomial_; }
  std::uint64_t rank_of(const Simplex& sigma) const;
  Simplex unrank(unsigned k, std::uint64_t rank) const;

  /// Simplices in the same layers; provenance is ignored.
  bool same_simplices(const Skeleton& other) const;

 private:
  SkeletonSource source_;
  unsigned dim_cap_;
  std::uint64_t universe_;
  std::vector<std::vector<std::uint64_t>> layers_;
  std::vector<std::uint64_t> counts_;
  bool complete_;
  bool flag_;
  unsigned stored_from_;
  std::shared_ptr<const BinomialTable> binomial_;
};

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;  // cap on stored simplices
  unsigned threads = 1;
  unsigned store_from = 0;  // lower layers are counted, not stored
};

/// All simplices of VR(V_m; r) up to dimension dim_cap.
Skeleton enumerate_skeleton(const SpaceSpec& space, unsigned dim_cap,
                            const EnumerationOptions& options = {});

/// Clique complex on `vertices` (any order, no duplicates) with the given
/// adjacency relation. Labels must be < universe_size.
Skeleton flag_complex(std::vector<VertexLabel> vertices,
                      const std::function<bool(VertexLabel, VertexLabel)>& adjacent,
                      unsigned dim_cap, std::uint64_t universe_size, SkeletonSource source = {},
                      const EnumerationOptions& options = {});

/// Downward closure of `simplices`, truncated at dim_cap.
Skeleton from_simplices(const std::vector<Simplex>& simplices, unsigned dim_cap,
                        std::uint64_t universe_size, SkeletonSource source = {});

unsigned simplex_diameter(const Simplex& sigma);

/// Clique complex of the open neighbourhood of v; Cl(L_m^r) for v = m - 1.
Skeleton link_complex(const SpaceSpec& space, VertexLabel v, unsigned dim_cap,
                      const EnumerationOptions& options = {});

Skeleton delete_vertex(const Skeleton& skel, VertexLabel v);
Skeleton induced_subcomplex(const Skeleton& skel, const std::vector<VertexLabel>& vs);
/// Union of the vertex stars of sigma's vertices. Needs a flag skeleton.
Skeleton star_cluster(const Skeleton& skel, const Simplex& sigma);

/// I(KG_{n,2}): vertices are 2-subsets {a < b} of {0..n-1}, labelled by their
/// colex rank a + b(b-1)/2, joined when they intersect.
Skeleton kneser_independence_complex(unsigned n, unsigned dim_cap,
                                     const EnumerationOptions& options = {});

/// Text export: header "dim_cap m n r", then one simplex per line.
void write_skeleton_text(const Skeleton& skel, std::ostream& out);
Skeleton read_skeleton_text(std::istream& in);

}  // namespace vrq
