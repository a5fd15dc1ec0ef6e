#include "vrq/hamming.hpp"

#include <algorithm>
#include <sstream>

#include "vrq/errors.hpp"

namespace vrq {

SpaceSpec SpaceSpec::truncated(std::uint64_t m, unsigned r, std::optional<unsigned> n) {
  if (m == 0) throw InvalidArgument("space needs at least one vertex");
  const unsigned needed = bit_length(m - 1);
  const unsigned length = n.value_or(needed);
  if (length < needed) {
    throw InvalidArgument("string length " + std::to_string(length) + " too short for m = " +
                          std::to_string(m));
  }
  if (length > kMaxBits) throw InvalidArgument("string length above 63 bits");
  // n = 0 only for the single-point space V_1; keep n >= 1 so Q_n bookkeeping stays sane.
  return SpaceSpec(m, std::max(length, 1u), r);
}

SpaceSpec SpaceSpec::hypercube(unsigned n, unsigned r) {
  if (n == 0 || n > kMaxBits) throw InvalidArgument("hypercube dimension must be in 1..63");
  return SpaceSpec(std::uint64_t{1} << n, n, r);
}

SpaceSpec SpaceSpec::without_last() const {
  if (m_ <= 1) throw InvalidArgument("cannot remove the last vertex of V_1");
  return SpaceSpec(m_ - 1, n_, r_);
}

std::string SpaceSpec::describe() const {
  std::ostringstream out;
  if (is_hypercube())
    out << "VR(Q_" << n_ << ", " << r_ << ")";
  else
    out << "VR(V_" << m_ << ", " << r_ << ")";
  return out.str();
}

VertexLabel flip_bits(VertexLabel x, const BitIndexSet& flips) {
  for (unsigned i : flips.indices) x ^= VertexLabel{1} << i;
  return x;
}

BitIndexSet bit_decomposition(VertexLabel x) {
  BitIndexSet out;
  out.indices.reserve(static_cast<std::size_t>(std::popcount(x)));
  while (x != 0) {
    const unsigned top = bit_length(x) - 1;
    out.indices.push_back(top);
    x &= ~(VertexLabel{1} << top);
  }
  return out;
}

namespace {

// Number of labels within distance r of a point in Q_n, excluding the point.
// Saturates at UINT64_MAX.
std::uint64_t ball_size(unsigned n, unsigned r) {
  std::uint64_t total = 0;
  std::uint64_t term = 1;  // C(n, k)
  for (unsigned k = 1; k <= std::min(n, r); ++k) {
    term = term * (n - k + 1) / k;
    if (total > UINT64_MAX - term) return UINT64_MAX;
    total += term;
  }
  return total;
}

template <typename Keep>
void collect_by_flips(const SpaceSpec& space, VertexLabel v, Keep keep,
                      std::vector<VertexLabel>& out) {
  const unsigned n = space.n();
  for (unsigned k = 1; k <= std::min(space.r(), n); ++k) {
    // Gosper's hack over k-subsets of the n bit positions.
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
      const VertexLabel u = v ^ mask;
      if (u < space.m() && keep(u)) out.push_back(u);
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t rr = mask + c;
      if (rr == 0) break;
      mask = (((rr ^ mask) >> 2) / c) | rr;
    }
  }
  std::sort(out.begin(), out.end());
}

template <typename Keep>
std::vector<VertexLabel> collect(const SpaceSpec& space, VertexLabel v, VertexLabel scan_from,
                                 Keep keep) {
  if (!space.contains(v)) {
    throw VertexOutOfRange("vertex " + std::to_string(v) + " outside V_" +
                           std::to_string(space.m()));
  }
  std::vector<VertexLabel> out;
  if (ball_size(space.n(), space.r()) < space.m() - scan_from) {
    collect_by_flips(space, v, keep, out);
  } else {
    for (VertexLabel u = scan_from; u < space.m(); ++u)
      if (u != v && hamming_distance(u, v) <= space.r() && keep(u)) out.push_back(u);
  }
  return out;
}

}  // namespace

std::vector<VertexLabel> neighborhood(const SpaceSpec& space, VertexLabel v) {
  return collect(space, v, 0, [](VertexLabel) { return true; });
}

std::vector<VertexLabel> upper_neighborhood(const SpaceSpec& space, VertexLabel v) {
  return collect(space, v, v + 1, [v](VertexLabel u) { return u > v; });
}

}  // namespace vrq
