#include <doctest.h>

#include <random>

#include "vrq/errors.hpp"
#include "vrq/experiments.hpp"

using namespace vrq;

TEST_CASE("splitting holds for small r = 2 and r = 3 cases") {
  const PrimeField f2(2);
  for (std::uint64_t m = 2; m <= 20; ++m) {
    const SplittingReport rep = splitting_check(m, 2, f2, 3);
    CHECK_MESSAGE(rep.all_hold(), "m = " << m);
    CHECK(rep.trusted_through >= 2);
    CHECK_FALSE(rep.reverified);
  }
  for (std::uint64_t m = 2; m <= 12; ++m) CHECK(splitting_check(m, 3, f2, 4).all_hold());
}

TEST_CASE("splitting treats an isolated new vertex as a split-off S^0") {
  // V_2 at r = 0: the new vertex has an empty link.
  const SplittingReport rep = splitting_check(2, 0, PrimeField(2), 1);
  CHECK(rep.all_hold());
  CHECK(rep.betti_G_m.reduced_betti[0] == 1);
}

TEST_CASE("link check follows alpha") {
  for (std::uint64_t m = 2; m <= 64; ++m) {
    const LinkReport rep = link_homotopy_check(m, PrimeField(2));
    CHECK_MESSAGE(rep.passed, "m = " << m);
    CHECK(rep.expected_alpha == alpha(m - 1));
  }
  CHECK(link_homotopy_check(64, PrimeField(2)).betti.reduced_betti[2] == 20);
}

TEST_CASE("Kneser independence complexes") {
  const std::vector<std::uint64_t> expected = {1, 4, 10, 20};
  for (unsigned n = 4; n <= 7; ++n) {
    const KneserReport rep = kneser_check(n, PrimeField(2));
    CHECK(rep.passed);
    CHECK(rep.expected == expected[n - 4]);
    CHECK(rep.betti.reduced_betti[2] == expected[n - 4]);
  }
}

TEST_CASE("star clusters are acyclic") {
  std::mt19937_64 rng(5);
  for (unsigned n : {3u, 4u}) {
    const SpaceSpec q = SpaceSpec::hypercube(n, 2);
    const Skeleton s = enumerate_skeleton(q, 4);
    for (int t = 0; t < 10; ++t) {
      const unsigned k = rng() % 4;
      const Simplex sigma = s.simplex(k, rng() % s.count(k));
      CHECK(star_cluster_contractibility_check(q, sigma, 3, PrimeField(2)));
    }
  }
}

TEST_CASE("greedy collapse") {
  const Skeleton simplex4 = from_simplices({Simplex{0, 1, 2, 3, 4}}, 4, 5);
  const CollapseOutcome a = greedy_collapse_probe(simplex4, 0, 1000);
  CHECK(a.status == CollapseStatus::collapsed_to_target);
  CHECK(a.reached_dim == 0);

  const Skeleton tri = from_simplices({Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}}, 1, 3);
  CHECK(greedy_collapse_probe(tri, 0, 1000).status == CollapseStatus::stuck);

  const Skeleton g8 = enumerate_skeleton(SpaceSpec::truncated(8, 2), 4);
  const CollapseOutcome c = greedy_collapse_probe(g8, 3, 1000);
  CHECK(c.status == CollapseStatus::collapsed_to_target);
  REQUIRE(c.remaining);
  CHECK(betti_numbers(*c.remaining, PrimeField(2), 3) == betti_numbers(g8, PrimeField(2), 3));

  const Skeleton q4 = enumerate_skeleton(SpaceSpec::hypercube(4, 2), 5);
  const CollapseOutcome d = greedy_collapse_probe(q4, 3, 5);
  CHECK(d.status == CollapseStatus::budget_exceeded);
  CHECK(d.free_face_trace_length == 5);
  const CollapseOutcome e = greedy_collapse_probe(q4, 3, 100000);
  REQUIRE(e.remaining);
  CHECK(betti_numbers(*e.remaining, PrimeField(2), 3).reduced_betti[3] == 9);
}

TEST_CASE("table survey on small cubes") {
  const SurveyReport rep = table_survey(4, 3, PrimeField(2), 7);
  CHECK_FALSE(rep.any_mismatch());
  std::size_t matched = 0;
  for (const SurveyCell& c : rep.cells) matched += c.status == CellStatus::match;
  CHECK(matched >= 12);
}

TEST_CASE("prediction_matches") {
  BettiVector b;
  b.maxdim = 3;
  b.reduced_betti = {0, 0, 0, 9};
  b.trusted_through = 3;
  CHECK(prediction_matches(predicted_betti(4, 2), b) == true);
  b.reduced_betti[3] = 8;
  CHECK(prediction_matches(predicted_betti(4, 2), b) == false);
  b.trusted_through = 2;
  CHECK(prediction_matches(predicted_betti(5, 3), b) == std::nullopt);
}
