#pragma once

// Closed-form and conjectured homotopy types of VR(Q_n; r).

#include <cstdint>
#include <map>
#include <string>

#include "vrq/hamming.hpp"
#include "vrq/homology.hpp"

namespace vrq {

enum class PredictionStatus { theorem, observation, conjecture, unknown };

std::string to_string(PredictionStatus status);
PredictionStatus prediction_status_from_string(const std::string& name);

struct PredictionRecord {
  unsigned n = 0;
  unsigned r = 0;
  PredictionStatus status = PredictionStatus::unknown;
  /// Asserted nonzero reduced Betti numbers, by dimension.
  std::map<std::uint64_t, BigInt> predicted_reduced_betti;
  /// When true every dimension missing from the map is asserted to be zero.
  /// Conjectures only speak for the dimensions they list.
  bool exhaustive = false;
  std::string homotopy_description;

  /// Whether the record makes a claim about dimension i.
  bool asserts(std::uint64_t i) const;
  /// The asserted value in dimension i (zero for unlisted dims of an exhaustive record).
  BigInt value(std::uint64_t i) const;
};

/// Sum over s >= 3 of (s - 2)(i_s + 1) over the decreasing set bits i_1 > i_2 > ... of x.
std::uint64_t alpha(VertexLabel x);

/// Sum of alpha(k) for k < m. Linear in m.
BigInt alpha_partial_sum(std::uint64_t m);

/// sum over 0 <= j < i < n of (j + 1)(2^(n-2) - 2^(i-1)); needs n >= 3.
BigInt c_n(unsigned n);

/// Coefficient of x^k in 1/((1 - x)(1 - 2x)^4), by power-series division.
BigInt taylor_coefficient(unsigned k);

PredictionRecord predicted_betti(unsigned n, unsigned r);

}  // namespace vrq
