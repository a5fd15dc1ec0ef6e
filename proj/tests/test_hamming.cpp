#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "vrq/errors.hpp"
#include "vrq/hamming.hpp"

using namespace vrq;

namespace {

unsigned naive_distance(VertexLabel x, VertexLabel y) {
  unsigned d = 0;
  for (unsigned i = 0; i < 64; ++i) d += ((x >> i) & 1) != ((y >> i) & 1);
  return d;
}

std::uint64_t choose(unsigned n, unsigned k) {
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

TEST_CASE("hamming_distance examples") {
  CHECK(hamming_distance(0b000, 0b111) == 3);
  CHECK(hamming_distance(0b101, 0b101) == 0);
  CHECK(hamming_distance(0b001, 0b010) == 2);
}

TEST_CASE("hamming_distance agrees with a per-bit loop and obeys the metric axioms") {
  std::mt19937_64 rng(7);
  const VertexLabel mask = (VertexLabel{1} << 63) - 1;
  for (int i = 0; i < 100000; ++i) {
    const VertexLabel x = rng() & mask, y = rng() & mask, z = rng() & mask;
    REQUIRE(hamming_distance(x, y) == naive_distance(x, y));
    CHECK(hamming_distance(x, y) == hamming_distance(y, x));
    CHECK((hamming_distance(x, y) == 0) == (x == y));
    CHECK(hamming_distance(x, z) <= hamming_distance(x, y) + hamming_distance(y, z));
  }
}

TEST_CASE("flip_bits") {
  CHECK(flip_bits(0b111, BitIndexSet{{0}}) == 0b110);
  CHECK(flip_bits(0b111, BitIndexSet{{2, 1}}) == 0b001);
  CHECK(flip_bits(0b1010, BitIndexSet{}) == 0b1010);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const VertexLabel x = rng() >> 1;
    const BitIndexSet a = bit_decomposition(rng() >> 1);
    CHECK(flip_bits(flip_bits(x, a), a) == x);
    CHECK(flip_bits(0, bit_decomposition(x)) == x);
  }
}

TEST_CASE("bit_decomposition") {
  CHECK(bit_decomposition(0b1011).indices == std::vector<unsigned>{3, 1, 0});
  CHECK(bit_decomposition(0).empty());
  for (unsigned k = 0; k < 63; ++k)
    CHECK(bit_decomposition(VertexLabel{1} << k).indices == std::vector<unsigned>{k});
}

TEST_CASE("SpaceSpec construction") {
  const SpaceSpec q3 = SpaceSpec::hypercube(3, 1);
  CHECK(q3.m() == 8);
  CHECK(q3.is_hypercube());
  CHECK(SpaceSpec::truncated(8, 1) == q3);
  CHECK(SpaceSpec::truncated(5, 1).n() == 3);
  CHECK_FALSE(SpaceSpec::truncated(5, 1).is_hypercube());
  CHECK(SpaceSpec::truncated(5, 1, 6).n() == 6);
  CHECK(SpaceSpec::truncated(1, 2).m() == 1);
  CHECK_THROWS_AS(SpaceSpec::truncated(0, 1), InvalidArgument);
  CHECK_THROWS_AS(SpaceSpec::truncated(9, 1, 3), InvalidArgument);
  CHECK_THROWS_AS(SpaceSpec::hypercube(64, 1), InvalidArgument);
}

TEST_CASE("neighborhood examples") {
  CHECK(neighborhood(SpaceSpec::hypercube(3, 1), 0b000) ==
        std::vector<VertexLabel>{0b001, 0b010, 0b100});
  // Brute force over V_5 at r = 1.
  const SpaceSpec v5 = SpaceSpec::truncated(5, 1);
  std::vector<VertexLabel> brute;
  for (VertexLabel u = 0; u < 5; ++u)
    if (u != 0b100 && naive_distance(u, 0b100) <= 1) brute.push_back(u);
  CHECK(brute == std::vector<VertexLabel>{0b000});
  CHECK(neighborhood(v5, 0b100) == brute);
  CHECK_THROWS_AS(neighborhood(v5, 5), VertexOutOfRange);
}

TEST_CASE("neighborhood size in Q_n is the Hamming ball size") {
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned r = 0; r <= n + 1; ++r) {
      std::uint64_t expected = 0;
      for (unsigned k = 1; k <= std::min(r, n); ++k) expected += choose(n, k);
      const SpaceSpec q = SpaceSpec::hypercube(n, r);
      for (VertexLabel v : {VertexLabel{0}, q.m() - 1, q.m() / 3}) {
        const auto nb = neighborhood(q, v);
        CHECK(nb.size() == expected);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        CHECK(std::find(nb.begin(), nb.end(), v) == nb.end());
      }
    }
  // Large n takes the bit-flip path; r = 2 gives n + C(n, 2).
  const SpaceSpec big = SpaceSpec::hypercube(40, 2);
  CHECK(neighborhood(big, 12345).size() == 40 + 780);
}

TEST_CASE("neighborhood paths agree on truncated spaces") {
  // Flip enumeration (sparse ball) and scanning must select the same labels.
  for (std::uint64_t m : {37u, 64u, 100u, 255u})
    for (unsigned r = 0; r <= 4; ++r) {
      const SpaceSpec s = SpaceSpec::truncated(m, r, 12);
      for (VertexLabel v = 0; v < m; v += 7) {
        std::vector<VertexLabel> brute;
        for (VertexLabel u = 0; u < m; ++u)
          if (u != v && naive_distance(u, v) <= r) brute.push_back(u);
        CHECK(neighborhood(s, v) == brute);
        std::vector<VertexLabel> upper;
        for (VertexLabel u : brute)
          if (u > v) upper.push_back(u);
        CHECK(upper_neighborhood(s, v) == upper);
      }
    }
}
