#pragma once

// Reduced homology of skeletons over GF(p) and over the integers.
//
// Boundary columns are produced on demand from simplex ranks; only reduced
// pivot columns are kept. Dimensions are processed top-down so that pivots of
// the boundary in dimension k + 1 clear the matching columns in dimension k.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vrq/complex.hpp"

namespace vrq {

using BigInt = boost::multiprecision::cpp_int;

/// Prime characteristic of the coefficient field.
class PrimeField {
 public:
  /// Throws InvalidArgument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = 2);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t reduce(std::int64_t x) const noexcept;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t p_;
};

struct MatrixEntry {
  std::uint32_t row;
  std::uint32_t coef;
  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Materialised boundary map from k-chains to (k-1)-chains. Rows and columns
/// follow the colex order of the skeleton layers.
struct SparseBoundaryMatrix {
  unsigned dimension = 0;
  std::uint32_t p = 2;
  std::size_t rows = 0;
  std::vector<std::vector<MatrixEntry>> columns;  // each sorted by row
};

struct BettiVector {
  std::uint32_t p = 2;  // 0 marks rational ranks from integer elimination
  unsigned maxdim = 0;
  std::vector<std::uint64_t> reduced_betti;  // indices 0..maxdim
  int trusted_through = -1;                  // highest certified dimension

  bool trusted(unsigned i) const noexcept { return static_cast<int>(i) <= trusted_through; }
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

struct IntegerHomologySummary {
  unsigned dimension = 0;
  std::uint64_t free_rank = 0;
  std::vector<BigInt> torsion;  // elementary divisors > 1, each dividing the next
};

SparseBoundaryMatrix boundary_matrix(const Skeleton& skel, unsigned k, const PrimeField& field);

/// Rank of the boundary in dimension k over GF(p). `cleared` lists column
/// indices known to reduce to zero; `pivot_rows`, when given, receives the
/// pivot row of every nonzero reduced column.
std::uint64_t boundary_rank(const Skeleton& skel, unsigned k, const PrimeField& field,
                            const std::vector<bool>* cleared = nullptr,
                            std::vector<bool>* pivot_rows = nullptr);

BettiVector betti_numbers(const Skeleton& skel, const PrimeField& field, unsigned maxdim);

/// beta_i of VR(space) over GF(p), enumerating only dimensions i-1..i+1.
std::uint64_t betti_single_dim(const SpaceSpec& space, unsigned i, const PrimeField& field,
                               const EnumerationOptions& options = {});

inline constexpr std::uint64_t kDenseOracleLimit = 10'000'000;

/// Rank by dense Gaussian elimination. Independent of the sparse reduction.
std::uint64_t dense_rank_oracle(const SparseBoundaryMatrix& mat);

/// Reduced Betti numbers computed with dense_rank_oracle on every boundary.
BettiVector dense_betti_oracle(const Skeleton& skel, const PrimeField& field, unsigned maxdim);

inline constexpr std::uint64_t kSnfLayerLimit = 20000;

/// H_i(skel; Z) via Smith normal form of the boundaries in dimensions i, i+1.
/// Needs dim_cap >= i + 1 unless the complex is complete.
IntegerHomologySummary integer_homology_snf(const Skeleton& skel, unsigned i);

/// Elementary divisors of an integer matrix given column-wise (dense rows x cols).
std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> dense_columns,
                                     std::size_t rows);

std::uint64_t connected_components(const Skeleton& skel);

}  // namespace vrq
