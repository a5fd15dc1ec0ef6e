#pragma once

// Executable checks built on the complex and homology layers.
//
// Results speak only about Betti numbers over a field: a passing splitting
// check is Betti additivity over GF(p), not a splitting of spaces, and a
// vanishing star cluster is acyclic, which is necessary for contractibility.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vrq/closed_forms.hpp"
#include "vrq/complex.hpp"
#include "vrq/homology.hpp"

namespace vrq {

struct SplittingReport {
  std::uint64_t m = 0;
  unsigned r = 0;
  std::uint32_t p = 2;
  unsigned maxdim = 0;
  BettiVector betti_G_m, betti_G_m_minus_1, betti_L_m;
  /// holds[i]: beta_i(G_m) == beta_i(G_{m-1}) + beta_{i-1}(L_m), for i <= trusted_through.
  std::vector<bool> holds;
  int trusted_through = -1;
  /// Set when a failure was re-checked with the dense oracle and over GF(3).
  bool reverified = false;
  std::vector<bool> holds_gf3;  // filled only when reverified
  bool all_hold() const;
};

/// The empty link counts as beta_{-1} = 1, so an isolated new vertex splits off an S^0.
SplittingReport splitting_check(std::uint64_t m, unsigned r, const PrimeField& field,
                                unsigned maxdim, const EnumerationOptions& options = {});

struct LinkReport {
  std::uint64_t m = 0;
  std::uint64_t expected_alpha = 0;
  BettiVector betti;  // Cl(L_m^2) through dimension 3
  bool passed = false;
};

LinkReport link_homotopy_check(std::uint64_t m, const PrimeField& field,
                               const EnumerationOptions& options = {});

/// True iff every trusted reduced Betti number of SC(sigma) through maxdim vanishes.
bool star_cluster_contractibility_check(const SpaceSpec& space, const Simplex& sigma,
                                        unsigned maxdim, const PrimeField& field,
                                        const EnumerationOptions& options = {});

enum class CollapseStatus { collapsed_to_target, stuck, budget_exceeded };

std::string to_string(CollapseStatus status);

struct CollapseOutcome {
  int reached_dim = -1;  // top dimension left after the moves
  CollapseStatus status = CollapseStatus::stuck;
  std::uint64_t free_face_trace_length = 0;  // elementary collapses performed
  std::optional<Skeleton> remaining;
};

/// Greedy elementary collapses, highest coface dimension first, lowest face rank
/// breaking ties. `stuck` is inconclusive: another order might still succeed.
CollapseOutcome greedy_collapse_probe(const Skeleton& skel, unsigned target_dim,
                                      std::uint64_t budget);

struct KneserReport {
  unsigned n = 0;
  std::uint64_t expected = 0;  // C(n - 1, 3)
  BettiVector betti;
  bool passed = false;
};

KneserReport kneser_check(unsigned n, const PrimeField& field,
                          const EnumerationOptions& options = {});

enum class CellStatus { match, mismatch, unknown, skipped };

std::string to_string(CellStatus status);

struct SurveyCell {
  unsigned n = 0;
  unsigned r = 0;
  CellStatus status = CellStatus::skipped;
  PredictionRecord prediction;
  std::optional<BettiVector> computed;
  std::vector<std::uint64_t> counts;
  std::string note;
};

struct SurveyReport {
  unsigned n_max = 0;
  unsigned r_max = 0;
  std::uint32_t p = 2;
  unsigned maxdim = 0;
  std::vector<SurveyCell> cells;  // row-major in r, then n

  bool any_mismatch() const;
};

/// Computes VR(Q_n, r) for n <= n_max, r <= r_max through maxdim and compares
/// with predicted_betti. Theorem cells whose asserted spheres sit above maxdim,
/// and cells that blow the budget, are skipped.
SurveyReport table_survey(unsigned n_max, unsigned r_max, const PrimeField& field, unsigned maxdim,
                          const EnumerationOptions& options = {});

/// Compares a computed vector against a prediction on the trusted, asserted
/// dimensions. Returns nullopt if nothing could be compared.
std::optional<bool> prediction_matches(const PredictionRecord& prediction,
                                       const BettiVector& computed);

}  // namespace vrq
