#pragma once

// Binary-string vertex labels under the Hamming metric.
//
// A label is a machine word whose bit i is the coefficient of 2^i. The space
// V_m is the set {0, ..., m-1}; Q_n is the special case m = 2^n.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vrq {

using VertexLabel = std::uint64_t;

/// Largest supported string length. Labels must stay below 2^63.
inline constexpr unsigned kMaxBits = 63;

/// Set bit positions of a label, strictly decreasing.
struct BitIndexSet {
  std::vector<unsigned> indices;

  std::size_t size() const noexcept { return indices.size(); }
  bool empty() const noexcept { return indices.empty(); }
  friend bool operator==(const BitIndexSet&, const BitIndexSet&) = default;
};

/// Truncated Hamming cube V_m at scale r.
class SpaceSpec {
 public:
  /// V_m with string length bit_length(m-1), or `n` if given (n >= bit_length(m-1)).
  static SpaceSpec truncated(std::uint64_t m, unsigned r, std::optional<unsigned> n = std::nullopt);
  /// Q_n, i.e. V_{2^n}.
  static SpaceSpec hypercube(unsigned n, unsigned r);

  std::uint64_t m() const noexcept { return m_; }
  unsigned n() const noexcept { return n_; }
  unsigned r() const noexcept { return r_; }

  bool is_hypercube() const noexcept { return m_ == (std::uint64_t{1} << n_); }
  bool contains(VertexLabel v) const noexcept { return v < m_; }

  SpaceSpec with_scale(unsigned r) const { return SpaceSpec(m_, n_, r); }
  /// Same string length, one fewer vertex.
  SpaceSpec without_last() const;

  std::string describe() const;

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;

 private:
  SpaceSpec(std::uint64_t m, unsigned n, unsigned r) : m_(m), n_(n), r_(r) {}

  std::uint64_t m_;
  unsigned n_;
  unsigned r_;
};

/// Number of bits needed to write x (0 for x = 0).
constexpr unsigned bit_length(std::uint64_t x) noexcept {
  return static_cast<unsigned>(std::bit_width(x));
}

constexpr unsigned hamming_distance(VertexLabel x, VertexLabel y) noexcept {
  return static_cast<unsigned>(std::popcount(x ^ y));
}

/// XOR of x with the mask of `flips`. Involutive.
VertexLabel flip_bits(VertexLabel x, const BitIndexSet& flips);

BitIndexSet bit_decomposition(VertexLabel x);

/// Open neighbourhood of v in the graph G_m^r, sorted ascending.
/// Throws VertexOutOfRange if v >= m.
std::vector<VertexLabel> neighborhood(const SpaceSpec& space, VertexLabel v);

/// Upper neighbours of v: the part of neighborhood() above v.
std::vector<VertexLabel> upper_neighborhood(const SpaceSpec& space, VertexLabel v);

}  // namespace vrq
