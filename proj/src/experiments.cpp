#include "vrq/experiments.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "vrq/errors.hpp"

namespace vrq {

bool SplittingReport::all_hold() const {
  return std::all_of(holds.begin(), holds.end(), [](bool h) { return h; });
}

namespace {

std::vector<bool> additivity(const BettiVector& whole, const BettiVector& rest,
                             const BettiVector& link, bool link_empty, int trusted) {
  std::vector<bool> holds;
  for (int i = 0; i <= trusted; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const std::uint64_t suspended = i == 0 ? (link_empty ? 1 : 0) : link.reduced_betti[u - 1];
    holds.push_back(whole.reduced_betti[u] == rest.reduced_betti[u] + suspended);
  }
  return holds;
}

struct SplittingInputs {
  Skeleton whole, rest, link;
};

SplittingInputs splitting_inputs(std::uint64_t m, unsigned r, unsigned maxdim,
                                 const EnumerationOptions& options) {
  const SpaceSpec space = SpaceSpec::truncated(m, r);
  return {enumerate_skeleton(space, maxdim + 1, options),
          enumerate_skeleton(space.without_last(), maxdim + 1, options),
          link_complex(space, m - 1, maxdim, options)};
}

}  // namespace

SplittingReport splitting_check(std::uint64_t m, unsigned r, const PrimeField& field,
                                unsigned maxdim, const EnumerationOptions& options) {
  if (m < 2) throw InvalidArgument("splitting_check needs m >= 2");
  if (maxdim < 1) throw InvalidArgument("splitting_check needs maxdim >= 1");
  const SplittingInputs in = splitting_inputs(m, r, maxdim, options);
  SplittingReport rep;
  rep.m = m;
  rep.r = r;
  rep.p = field.p();
  rep.maxdim = maxdim;
  rep.betti_G_m = betti_numbers(in.whole, field, maxdim);
  rep.betti_G_m_minus_1 = betti_numbers(in.rest, field, maxdim);
  rep.betti_L_m = betti_numbers(in.link, field, maxdim - 1);
  rep.trusted_through = std::min({rep.betti_G_m.trusted_through,
                                  rep.betti_G_m_minus_1.trusted_through,
                                  rep.betti_L_m.trusted_through + 1});
  const bool link_empty = in.link.count(0) == 0;
  rep.holds = additivity(rep.betti_G_m, rep.betti_G_m_minus_1, rep.betti_L_m, link_empty,
                         rep.trusted_through);
  if (!rep.all_hold()) {
    // A reduction bug must not pass for a counterexample.
    const bool dense_ok = dense_betti_oracle(in.whole, field, maxdim) == rep.betti_G_m &&
                          dense_betti_oracle(in.rest, field, maxdim) == rep.betti_G_m_minus_1 &&
                          dense_betti_oracle(in.link, field, maxdim - 1) == rep.betti_L_m;
    if (!dense_ok) throw std::logic_error("sparse and dense Betti numbers disagree");
    const PrimeField gf3(3);
    rep.holds_gf3 = additivity(betti_numbers(in.whole, gf3, maxdim),
                               betti_numbers(in.rest, gf3, maxdim),
                               betti_numbers(in.link, gf3, maxdim - 1), link_empty,
                               rep.trusted_through);
    rep.reverified = true;
  }
  return rep;
}

LinkReport link_homotopy_check(std::uint64_t m, const PrimeField& field,
                               const EnumerationOptions& options) {
  if (m < 1) throw InvalidArgument("link_homotopy_check needs m >= 1");
  const SpaceSpec space = SpaceSpec::truncated(m, 2);
  const Skeleton link = link_complex(space, m - 1, 4, options);
  LinkReport rep;
  rep.m = m;
  rep.expected_alpha = alpha(m - 1);
  rep.betti = betti_numbers(link, field, 3);
  const auto& b = rep.betti.reduced_betti;
  rep.passed = rep.betti.trusted_through >= 3 && b[0] == 0 && b[1] == 0 && b[3] == 0 &&
               b[2] == rep.expected_alpha;
  return rep;
}

bool star_cluster_contractibility_check(const SpaceSpec& space, const Simplex& sigma,
                                        unsigned maxdim, const PrimeField& field,
                                        const EnumerationOptions& options) {
  const Skeleton skel = enumerate_skeleton(space, maxdim + 1, options);
  const Skeleton cluster = star_cluster(skel, sigma);
  const BettiVector b = betti_numbers(cluster, field, maxdim);
  for (unsigned i = 0; i <= maxdim; ++i)
    if (b.trusted(i) && b.reduced_betti[i] != 0) return false;
  return true;
}

std::string to_string(CollapseStatus status) {
  switch (status) {
    case CollapseStatus::collapsed_to_target: return "collapsed_to_target";
    case CollapseStatus::stuck: return "stuck";
    case CollapseStatus::budget_exceeded: return "budget_exceeded";
  }
  return "stuck";
}

CollapseOutcome greedy_collapse_probe(const Skeleton& skel, unsigned target_dim,
                                      std::uint64_t budget) {
  if (!skel.complete_flag()) throw InvalidArgument("collapse probe needs a complete skeleton");
  if (skel.stored_from() != 0) throw InvalidArgument("collapse probe needs every layer stored");
  const int top = skel.top_dimension();
  CollapseOutcome out;
  if (top < 0) {
    out.status = CollapseStatus::collapsed_to_target;
    out.remaining = skel;
    return out;
  }
  const auto dims = static_cast<unsigned>(top) + 1;
  // Incidence: facets[k][j] are indices into layer k - 1; cofaces the inverse.
  std::vector<std::vector<std::vector<std::uint32_t>>> facets(dims), cofaces(dims);
  std::vector<std::vector<bool>> alive(dims);
  std::vector<std::vector<std::uint32_t>> live_cofaces(dims);
  const PrimeField gf2(2);
  for (unsigned k = 0; k < dims; ++k) {
    const std::size_t size = skel.layer(k).size();
    alive[k].assign(size, true);
    cofaces[k].resize(size);
    live_cofaces[k].assign(size, 0);
    facets[k].resize(size);
    if (k == 0) continue;
    const SparseBoundaryMatrix mat = boundary_matrix(skel, k, gf2);
    for (std::size_t j = 0; j < size; ++j)
      for (const auto& e : mat.columns[j]) {
        facets[k][j].push_back(e.row);
        cofaces[k - 1][e.row].push_back(static_cast<std::uint32_t>(j));
        ++live_cofaces[k - 1][e.row];
      }
  }

  // (dimension of face desc, rank asc): top-down, lowest rank first.
  using Key = std::tuple<int, std::uint64_t, std::uint32_t>;
  std::set<Key> free_faces;
  auto consider = [&](unsigned k, std::uint32_t j) {
    if (k + 1 > target_dim && k + 1 < dims && alive[k][j] && live_cofaces[k][j] == 1)
      free_faces.insert({-static_cast<int>(k), skel.layer(k)[j], j});
  };
  for (unsigned k = 0; k < dims; ++k)
    for (std::uint32_t j = 0; j < alive[k].size(); ++j) consider(k, j);

  auto remove = [&](unsigned k, std::uint32_t j) {
    alive[k][j] = false;
    if (k == 0) return;
    for (std::uint32_t f : facets[k][j]) {
      --live_cofaces[k - 1][f];
      consider(k - 1, f);
    }
  };

  while (!free_faces.empty() && out.free_face_trace_length < budget) {
    const auto [neg_k, rank, j] = *free_faces.begin();
    free_faces.erase(free_faces.begin());
    const auto k = static_cast<unsigned>(-neg_k);
    if (!alive[k][j] || live_cofaces[k][j] != 1) continue;
    std::uint32_t coface = 0;
    for (std::uint32_t c : cofaces[k][j])
      if (alive[k + 1][c]) coface = c;
    remove(k + 1, coface);
    remove(k, j);
    ++out.free_face_trace_length;
  }

  std::vector<std::vector<std::uint64_t>> layers(skel.dim_cap() + 1);
  for (unsigned k = 0; k < dims; ++k)
    for (std::size_t j = 0; j < alive[k].size(); ++j)
      if (alive[k][j]) {
        layers[k].push_back(skel.layer(k)[j]);
        out.reached_dim = static_cast<int>(k);
      }
  const bool live_free = std::any_of(free_faces.begin(), free_faces.end(), [&](const Key& key) {
    const auto k = static_cast<unsigned>(-std::get<0>(key));
    const auto j = std::get<2>(key);
    return alive[k][j] && live_cofaces[k][j] == 1;
  });
  if (out.reached_dim <= static_cast<int>(target_dim))
    out.status = CollapseStatus::collapsed_to_target;
  else if (live_free)
    out.status = CollapseStatus::budget_exceeded;
  else
    out.status = CollapseStatus::stuck;
  SkeletonSource source{SkeletonSource::Kind::explicit_list, skel.source().space,
                        "greedy collapse of " + skel.source().description};
  out.remaining.emplace(std::move(source), skel.dim_cap(), skel.universe_size(), std::move(layers),
                        true, false);
  return out;
}

KneserReport kneser_check(unsigned n, const PrimeField& field, const EnumerationOptions& options) {
  if (n < 4) throw InvalidArgument("kneser_check needs n >= 4");
  KneserReport rep;
  rep.n = n;
  rep.expected = std::uint64_t{n - 1} * (n - 2) * (n - 3) / 6;
  rep.betti = betti_numbers(kneser_independence_complex(n, 4, options), field, 3);
  const auto& b = rep.betti.reduced_betti;
  rep.passed = rep.betti.trusted_through >= 3 && b[0] == 0 && b[1] == 0 && b[3] == 0 &&
               b[2] == rep.expected;
  return rep;
}

std::string to_string(CellStatus status) {
  switch (status) {
    case CellStatus::match: return "match";
    case CellStatus::mismatch: return "mismatch";
    case CellStatus::unknown: return "unknown";
    case CellStatus::skipped: return "skipped";
  }
  return "skipped";
}

bool SurveyReport::any_mismatch() const {
  return std::any_of(cells.begin(), cells.end(),
                     [](const SurveyCell& c) { return c.status == CellStatus::mismatch; });
}

std::optional<bool> prediction_matches(const PredictionRecord& prediction,
                                       const BettiVector& computed) {
  if (prediction.status == PredictionStatus::unknown) return std::nullopt;
  if (prediction.exhaustive)
    for (const auto& [dim, value] : prediction.predicted_reduced_betti)
      if (!computed.trusted(static_cast<unsigned>(std::min<std::uint64_t>(dim, UINT32_MAX))))
        return std::nullopt;
  bool compared = false;
  for (unsigned i = 0; i <= computed.maxdim; ++i) {
    if (!computed.trusted(i) || !prediction.asserts(i)) continue;
    compared = true;
    if (prediction.value(i) != computed.reduced_betti[i]) return false;
  }
  if (!compared) return std::nullopt;
  return true;
}

SurveyReport table_survey(unsigned n_max, unsigned r_max, const PrimeField& field, unsigned maxdim,
                          const EnumerationOptions& options) {
  SurveyReport rep;
  rep.n_max = n_max;
  rep.r_max = r_max;
  rep.p = field.p();
  rep.maxdim = maxdim;
  for (unsigned r = 0; r <= r_max; ++r) {
    for (unsigned n = 1; n <= n_max; ++n) {
      SurveyCell cell;
      cell.n = n;
      cell.r = r;
      cell.prediction = predicted_betti(n, r);
      const auto& pred = cell.prediction.predicted_reduced_betti;
      const bool out_of_range =
          cell.prediction.status == PredictionStatus::theorem && !pred.empty() &&
          pred.rbegin()->first > maxdim;
      if (out_of_range) {
        cell.status = CellStatus::skipped;
        cell.note = "asserted sphere above maxdim";
        rep.cells.push_back(std::move(cell));
        continue;
      }
      try {
        const Skeleton skel = enumerate_skeleton(SpaceSpec::hypercube(n, r), maxdim + 1, options);
        cell.counts = skel.counts();
        cell.computed = betti_numbers(skel, field, maxdim);
      } catch (const SizeBudgetExceeded& e) {
        cell.status = CellStatus::skipped;
        cell.note = e.what();
        rep.cells.push_back(std::move(cell));
        continue;
      }
      const auto verdict = prediction_matches(cell.prediction, *cell.computed);
      if (cell.prediction.status == PredictionStatus::unknown || !verdict)
        cell.status = CellStatus::unknown;
      else
        cell.status = *verdict ? CellStatus::match : CellStatus::mismatch;
      if (cell.prediction.status == PredictionStatus::conjecture) cell.note = "conjecture";
      rep.cells.push_back(std::move(cell));
    }
  }
  return rep;
}

}  // namespace vrq
