#include "vrq/complex.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "vrq/errors.hpp"

namespace vrq {

// ----------------------------------------------------------------------------
// Simplex

Simplex::Simplex(std::initializer_list<VertexLabel> vertices)
    : Simplex(std::vector<VertexLabel>(vertices)) {}

Simplex::Simplex(std::vector<VertexLabel> vertices) : vertices_(std::move(vertices)) {
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    if (vertices_[i - 1] >= vertices_[i])
      throw InvalidArgument("simplex vertices must be strictly increasing");
}

Simplex Simplex::from_unsorted(std::vector<VertexLabel> vertices) {
  std::sort(vertices.begin(), vertices.end());
  return Simplex(std::move(vertices));
}

bool Simplex::contains(VertexLabel v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Simplex Simplex::with_vertex(VertexLabel v) const {
  std::vector<VertexLabel> out = vertices_;
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return Simplex(std::move(out));
}

Simplex Simplex::without_index(std::size_t i) const {
  std::vector<VertexLabel> out = vertices_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  Simplex s;
  s.vertices_ = std::move(out);
  return s;
}

// ----------------------------------------------------------------------------
// Combinatorial number system

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 24;

std::uint64_t binomial_direct(std::uint64_t a, unsigned b) {
  if (b > a) return 0;
  if (b > a - b) b = static_cast<unsigned>(a - b);
  unsigned __int128 result = 1;
  for (unsigned i = 1; i <= b; ++i) {
    result = result * (a - b + i) / i;
    if (result > UINT64_MAX - 1) return BinomialTable::kOverflow;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t saturating_add(std::uint64_t x, std::uint64_t y) {
  if (x == BinomialTable::kOverflow || y == BinomialTable::kOverflow || x > UINT64_MAX - 1 - y)
    return BinomialTable::kOverflow;
  return x + y;
}

}  // namespace

BinomialTable::BinomialTable(std::uint64_t universe, unsigned max_k)
    : universe_(universe), max_k_(max_k) {
  const std::uint64_t rows = universe + 1;
  tabulated_ = rows <= kTableLimit / (max_k + 1);
  if (!tabulated_) return;
  const std::size_t width = max_k + 1;
  table_.assign(rows * width, 0);
  for (std::uint64_t a = 0; a < rows; ++a) {
    table_[a * width] = 1;
    for (unsigned b = 1; b <= std::min<std::uint64_t>(a, max_k); ++b) {
      table_[a * width + b] = a == b ? 1
                                     : saturating_add(table_[(a - 1) * width + b - 1],
                                                      table_[(a - 1) * width + b]);
    }
  }
}

std::uint64_t BinomialTable::operator()(std::uint64_t a, unsigned b) const {
  if (tabulated_ && a <= universe_ && b <= max_k_) return table_[a * (max_k_ + 1) + b];
  return binomial_direct(a, b);
}

namespace {

std::uint64_t rank_with(const BinomialTable& binom, const Simplex& sigma) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    rank = saturating_add(rank, binom(sigma[i], static_cast<unsigned>(i + 1)));
  if (rank == BinomialTable::kOverflow)
    throw SizeBudgetExceeded("simplex rank does not fit in 64 bits", 0);
  return rank;
}

Simplex unrank_with(const BinomialTable& binom, unsigned k, std::uint64_t rank,
                    std::uint64_t universe) {
  std::vector<VertexLabel> out(k + 1);
  std::uint64_t upper = universe;  // exclusive bound for the current vertex
  for (int i = static_cast<int>(k); i >= 0; --i) {
    const unsigned b = static_cast<unsigned>(i + 1);
    // Largest v in [i, upper) with C(v, b) <= rank.
    std::uint64_t lo = static_cast<std::uint64_t>(i), hi = upper - 1;
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo + 1) / 2;
      if (binom(mid, b) <= rank)
        lo = mid;
      else
        hi = mid - 1;
    }
    out[static_cast<std::size_t>(i)] = lo;
    rank -= binom(lo, b);
    upper = lo;
  }
  return Simplex(std::move(out));
}

}  // namespace

SimplexRank simplex_rank(const Simplex& sigma, std::uint64_t universe_size) {
  if (sigma.empty()) throw InvalidArgument("cannot rank the empty simplex");
  if (sigma.back() >= universe_size) throw VertexOutOfRange("simplex vertex outside universe");
  BinomialTable binom(universe_size, static_cast<unsigned>(sigma.size()));
  if (binom(universe_size, static_cast<unsigned>(sigma.size())) == BinomialTable::kOverflow)
    throw SizeBudgetExceeded("rank space does not fit in 64 bits", 0);
  return {static_cast<unsigned>(sigma.dimension()), rank_with(binom, sigma)};
}

Simplex simplex_unrank(SimplexRank rank, std::uint64_t universe_size) {
  BinomialTable binom(universe_size, rank.dimension + 1);
  if (rank.rank >= binom(universe_size, rank.dimension + 1))
    throw InvalidArgument("rank outside the combinatorial number system");
  return unrank_with(binom, rank.dimension, rank.rank, universe_size);
}

// ----------------------------------------------------------------------------
// Skeleton

Skeleton::Skeleton(SkeletonSource source, unsigned dim_cap, std::uint64_t universe_size,
                   std::vector<std::vector<std::uint64_t>> layers, bool complete_flag,
                   bool is_flag, unsigned stored_from, std::vector<std::uint64_t> counts)
    : source_(std::move(source)),
      dim_cap_(dim_cap),
      universe_(universe_size),
      layers_(std::move(layers)),
      counts_(std::move(counts)),
      complete_(complete_flag),
      flag_(is_flag),
      stored_from_(stored_from),
      binomial_(std::make_shared<BinomialTable>(universe_size, dim_cap + 2)) {
  if (layers_.size() != dim_cap_ + 1) throw InvalidArgument("skeleton needs dim_cap + 1 layers");
  if (counts_.empty()) {
    counts_.resize(layers_.size());
    for (std::size_t k = 0; k < layers_.size(); ++k) counts_[k] = layers_[k].size();
  }
  if (counts_.size() != layers_.size()) throw InvalidArgument("count vector size mismatch");
}

const std::vector<std::uint64_t>& Skeleton::layer(unsigned k) const {
  if (!stores(k)) throw InvalidArgument("layer " + std::to_string(k) + " not stored");
  return layers_[k];
}

std::uint64_t Skeleton::count(unsigned k) const { return k <= dim_cap_ ? counts_[k] : 0; }

std::uint64_t Skeleton::total_count() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

int Skeleton::top_dimension() const {
  for (int k = static_cast<int>(dim_cap_); k >= 0; --k)
    if (counts_[static_cast<std::size_t>(k)] != 0) return k;
  return -1;
}

Simplex Skeleton::simplex(unsigned k, std::size_t index) const {
  return unrank(k, layer(k).at(index));
}

std::optional<std::size_t> Skeleton::index_of(unsigned k, std::uint64_t rank) const {
  const auto& l = layer(k);
  const auto it = std::lower_bound(l.begin(), l.end(), rank);
  if (it == l.end() || *it != rank) return std::nullopt;
  return static_cast<std::size_t>(it - l.begin());
}

std::optional<std::size_t> Skeleton::index_of(const Simplex& sigma) const {
  if (sigma.empty() || sigma.dimension() > static_cast<int>(dim_cap_)) return std::nullopt;
  if (sigma.back() >= universe_) return std::nullopt;
  return index_of(static_cast<unsigned>(sigma.dimension()), rank_of(sigma));
}

bool Skeleton::contains(const Simplex& sigma) const { return index_of(sigma).has_value(); }

bool Skeleton::has_vertex(VertexLabel v) const {
  return v < universe_ && index_of(0, v).has_value();
}

std::vector<VertexLabel> Skeleton::vertices() const { return layer(0); }

bool Skeleton::adjacent(VertexLabel a, VertexLabel b) const {
  if (a == b || a >= universe_ || b >= universe_ || dim_cap_ < 1) return false;
  if (a > b) std::swap(a, b);
  return index_of(1, a + (*binomial_)(b, 2)).has_value();
}

std::uint64_t Skeleton::rank_of(const Simplex& sigma) const { return rank_with(*binomial_, sigma); }

Simplex Skeleton::unrank(unsigned k, std::uint64_t rank) const {
  return unrank_with(*binomial_, k, rank, universe_);
}

bool Skeleton::same_simplices(const Skeleton& other) const {
  return dim_cap_ == other.dim_cap_ && stored_from_ == other.stored_from_ &&
         counts_ == other.counts_ && layers_ == other.layers_;
}

// ----------------------------------------------------------------------------
// Clique enumeration

namespace {

struct EnumerationResult {
  std::vector<std::vector<std::uint64_t>> layers;
  std::vector<std::uint64_t> counts;
  bool complete = true;
};

// Depth-first clique expansion: a k-simplex is extended only by common
// neighbours above its largest vertex. `roots[i]` pairs a vertex with its
// sorted upper neighbours.
template <typename Adjacent, typename Roots>
EnumerationResult enumerate_cliques(std::size_t root_count, Roots&& upper_of, Adjacent&& adjacent,
                                    unsigned dim_cap, const BinomialTable& binom,
                                    const EnumerationOptions& options) {
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads,
                                                           static_cast<unsigned>(root_count)));
  std::atomic<std::uint64_t> stored{0};
  std::atomic<bool> abort{false};
  std::vector<EnumerationResult> partial(threads);
  std::vector<std::exception_ptr> errors(threads);

  auto work = [&](unsigned t) {
    try {
      EnumerationResult& out = partial[t];
      out.layers.assign(dim_cap + 1, {});
      out.counts.assign(dim_cap + 1, 0);
      std::vector<std::vector<VertexLabel>> cand(dim_cap + 2);
      std::uint64_t local_stored = 0;

      auto record = [&](unsigned depth, std::uint64_t rank) {
        ++out.counts[depth];
        if (depth < options.store_from) return;
        out.layers[depth].push_back(rank);
        if ((++local_stored & 0xfff) == 0) {
          if (stored.fetch_add(0x1000) + 0x1000 > options.budget) abort = true;
        }
      };

      auto expand = [&](auto&& self, unsigned depth, std::uint64_t rank) -> void {
        record(depth, rank);
        const auto& here = cand[depth];
        if (depth == dim_cap) {
          if (!here.empty()) out.complete = false;
          return;
        }
        for (std::size_t a = 0; a < here.size() && !abort.load(std::memory_order_relaxed); ++a) {
          const VertexLabel v = here[a];
          auto& next = cand[depth + 1];
          next.clear();
          for (std::size_t b = a + 1; b < here.size(); ++b)
            if (adjacent(v, here[b])) next.push_back(here[b]);
          const std::uint64_t step = binom(v, depth + 2);
          const std::uint64_t child = saturating_add(rank, step);
          if (child == BinomialTable::kOverflow)
            throw SizeBudgetExceeded("simplex rank does not fit in 64 bits", 0);
          self(self, depth + 1, child);
        }
      };

      for (std::size_t i = t; i < root_count && !abort; i += threads) {
        VertexLabel root = 0;
        cand[0] = upper_of(i, root);
        expand(expand, 0, root);
      }
      stored += local_stored & 0xfff;
    } catch (...) {
      errors[t] = std::current_exception();
      abort = true;
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  EnumerationResult merged;
  merged.layers.assign(dim_cap + 1, {});
  merged.counts.assign(dim_cap + 1, 0);
  for (auto& p : partial) {
    merged.complete = merged.complete && p.complete;
    for (unsigned k = 0; k <= dim_cap; ++k) {
      merged.counts[k] += p.counts[k];
      auto& dst = merged.layers[k];
      dst.insert(dst.end(), p.layers[k].begin(), p.layers[k].end());
      std::vector<std::uint64_t>().swap(p.layers[k]);
    }
  }
  const std::uint64_t total = std::accumulate(
      merged.layers.begin(), merged.layers.end(), std::uint64_t{0},
      [](std::uint64_t s, const auto& l) { return s + l.size(); });
  if (abort || total > options.budget) {
    throw SizeBudgetExceeded("simplex budget of " + std::to_string(options.budget) +
                                 " exceeded after " + std::to_string(total) + " simplices",
                             total);
  }
  for (auto& l : merged.layers) std::sort(l.begin(), l.end());
  return merged;
}

}  // namespace

Skeleton enumerate_skeleton(const SpaceSpec& space, unsigned dim_cap,
                            const EnumerationOptions& options) {
  auto binom = BinomialTable(space.m(), dim_cap + 2);
  const unsigned r = space.r();
  auto upper = [&](std::size_t i, VertexLabel& root) {
    root = static_cast<VertexLabel>(i);
    return upper_neighborhood(space, root);
  };
  auto adjacent = [r](VertexLabel a, VertexLabel b) { return hamming_distance(a, b) <= r; };
  auto result = enumerate_cliques(static_cast<std::size_t>(space.m()), upper, adjacent, dim_cap,
                                  binom, options);
  SkeletonSource source{SkeletonSource::Kind::metric, space, space.describe()};
  return Skeleton(std::move(source), dim_cap, space.m(), std::move(result.layers), result.complete,
                  true, options.store_from, std::move(result.counts));
}

Skeleton flag_complex(std::vector<VertexLabel> vertices,
                      const std::function<bool(VertexLabel, VertexLabel)>& adjacent,
                      unsigned dim_cap, std::uint64_t universe_size, SkeletonSource source,
                      const EnumerationOptions& options) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw InvalidArgument("duplicate vertex in flag complex");
  if (!vertices.empty() && vertices.back() >= universe_size)
    throw VertexOutOfRange("vertex label outside universe");
  auto binom = BinomialTable(universe_size, dim_cap + 2);
  auto upper = [&](std::size_t i, VertexLabel& root) {
    root = vertices[i];
    std::vector<VertexLabel> out;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(root, vertices[j])) out.push_back(vertices[j]);
    return out;
  };
  auto result = enumerate_cliques(vertices.size(), upper, adjacent, dim_cap, binom, options);
  return Skeleton(std::move(source), dim_cap, universe_size, std::move(result.layers),
                  result.complete, true, options.store_from, std::move(result.counts));
}

Skeleton from_simplices(const std::vector<Simplex>& simplices, unsigned dim_cap,
                        std::uint64_t universe_size, SkeletonSource source) {
  BinomialTable binom(universe_size, dim_cap + 2);
  std::vector<std::vector<std::uint64_t>> layers(dim_cap + 1);
  bool complete = true;
  for (const auto& s : simplices) {
    if (s.empty()) continue;
    if (s.back() >= universe_size) throw VertexOutOfRange("simplex vertex outside universe");
    if (s.dimension() > static_cast<int>(dim_cap)) complete = false;
    // Every nonempty subset of s up to dim_cap.
    const std::size_t n = s.size();
    if (n > 62) throw SizeBudgetExceeded("simplex too large to close under faces", 0);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      const auto size = static_cast<unsigned>(std::popcount(mask));
      if (size > dim_cap + 1) continue;
      std::vector<VertexLabel> face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) face.push_back(s[i]);
      layers[size - 1].push_back(rank_with(binom, Simplex(std::move(face))));
    }
  }
  for (auto& l : layers) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return Skeleton(std::move(source), dim_cap, universe_size, std::move(layers), complete, false);
}

unsigned simplex_diameter(const Simplex& sigma) {
  if (sigma.empty()) throw InvalidArgument("diameter of the empty simplex");
  unsigned d = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      d = std::max(d, hamming_distance(sigma[i], sigma[j]));
  return d;
}

Skeleton link_complex(const SpaceSpec& space, VertexLabel v, unsigned dim_cap,
                      const EnumerationOptions& options) {
  auto nbrs = neighborhood(space, v);
  const unsigned r = space.r();
  SkeletonSource source{SkeletonSource::Kind::link, space,
                        "lk(" + std::to_string(v) + ") in " + space.describe()};
  return flag_complex(
      std::move(nbrs), [r](VertexLabel a, VertexLabel b) { return hamming_distance(a, b) <= r; },
      dim_cap, space.m(), std::move(source), options);
}

// ----------------------------------------------------------------------------
// Derived complexes

namespace {

template <typename Keep>
std::vector<std::vector<std::uint64_t>> filter_layers(const Skeleton& skel, Keep keep) {
  if (skel.stored_from() != 0) throw InvalidArgument("derived complexes need all layers stored");
  std::vector<std::vector<std::uint64_t>> out(skel.dim_cap() + 1);
  for (unsigned k = 0; k <= skel.dim_cap(); ++k)
    for (std::uint64_t rank : skel.layer(k))
      if (keep(skel.unrank(k, rank))) out[k].push_back(rank);
  return out;
}

// Whether some top-layer simplex extends to a (dim_cap + 1)-simplex. In a flag
// complex any such simplex is a top simplex plus a vertex above its maximum.
template <typename InComplex>
bool has_extension(const Skeleton& parent, const std::vector<std::vector<std::uint64_t>>& layers,
                   InComplex in_complex) {
  const unsigned top = parent.dim_cap();
  if (layers[top].empty()) return false;
  const auto& verts = layers[0];
  for (std::uint64_t rank : layers[top]) {
    const Simplex tau = parent.unrank(top, rank);
    for (auto it = std::upper_bound(verts.begin(), verts.end(), tau.back()); it != verts.end();
         ++it) {
      const VertexLabel w = *it;
      if (std::all_of(tau.begin(), tau.end(),
                      [&](VertexLabel u) { return parent.adjacent(u, w); }) &&
          in_complex(tau, w))
        return true;
    }
  }
  return false;
}

SkeletonSource derived_source(const Skeleton& skel, SkeletonSource::Kind kind, std::string what) {
  return {kind, skel.source().space, std::move(what) + " of " + skel.source().description};
}

}  // namespace

Skeleton delete_vertex(const Skeleton& skel, VertexLabel v) {
  if (!skel.has_vertex(v)) throw VertexOutOfRange("vertex " + std::to_string(v) + " not present");
  auto layers = filter_layers(skel, [v](const Simplex& s) { return !s.contains(v); });
  bool complete = skel.complete_flag();
  if (!complete && skel.is_flag())
    complete = !has_extension(skel, layers, [v](const Simplex&, VertexLabel w) { return w != v; });
  return Skeleton(derived_source(skel, SkeletonSource::Kind::deletion,
                                 "deletion of " + std::to_string(v)),
                  skel.dim_cap(), skel.universe_size(), std::move(layers), complete,
                  skel.is_flag());
}

Skeleton induced_subcomplex(const Skeleton& skel, const std::vector<VertexLabel>& vs) {
  std::vector<VertexLabel> keep(vs);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (VertexLabel v : keep)
    if (!skel.has_vertex(v)) throw VertexOutOfRange("vertex " + std::to_string(v) + " not in complex");
  auto inside = [&](VertexLabel u) { return std::binary_search(keep.begin(), keep.end(), u); };
  auto layers = filter_layers(
      skel, [&](const Simplex& s) { return std::all_of(s.begin(), s.end(), inside); });
  bool complete = skel.complete_flag();
  if (!complete && skel.is_flag())
    complete =
        !has_extension(skel, layers, [&](const Simplex&, VertexLabel w) { return inside(w); });
  return Skeleton(derived_source(skel, SkeletonSource::Kind::induced, "induced subcomplex"),
                  skel.dim_cap(), skel.universe_size(), std::move(layers), complete,
                  skel.is_flag());
}

Skeleton star_cluster(const Skeleton& skel, const Simplex& sigma) {
  if (!skel.is_flag()) throw InvalidArgument("star clusters need a flag skeleton");
  if (!skel.contains(sigma)) throw InvalidArgument("simplex not in complex");
  // tau lies in st(v) iff tau + v is a clique.
  auto in_star = [&](const Simplex& tau, VertexLabel v) {
    return std::all_of(tau.begin(), tau.end(),
                       [&](VertexLabel u) { return u == v || skel.adjacent(u, v); });
  };
  auto in_cluster = [&](const Simplex& tau) {
    return std::any_of(sigma.begin(), sigma.end(),
                       [&](VertexLabel v) { return in_star(tau, v); });
  };
  auto layers = filter_layers(skel, in_cluster);
  bool complete = skel.complete_flag();
  if (!complete)
    complete = !has_extension(skel, layers, [&](const Simplex& tau, VertexLabel w) {
      return in_cluster(tau.with_vertex(w));
    });
  return Skeleton(derived_source(skel, SkeletonSource::Kind::star_cluster, "star cluster"),
                  skel.dim_cap(), skel.universe_size(), std::move(layers), complete, false);
}

Skeleton kneser_independence_complex(unsigned n, unsigned dim_cap,
                                     const EnumerationOptions& options) {
  if (n < 2) throw InvalidArgument("Kneser graph KG_{n,2} needs n >= 2");
  const std::uint64_t vertex_count = std::uint64_t{n} * (n - 1) / 2;
  std::vector<std::pair<unsigned, unsigned>> pairs(vertex_count);
  for (unsigned b = 1; b < n; ++b)
    for (unsigned a = 0; a < b; ++a) pairs[a + std::uint64_t{b} * (b - 1) / 2] = {a, b};
  std::vector<VertexLabel> vertices(vertex_count);
  std::iota(vertices.begin(), vertices.end(), VertexLabel{0});
  auto intersect = [&pairs](VertexLabel x, VertexLabel y) {
    const auto [a, b] = pairs[x];
    const auto [c, d] = pairs[y];
    return a == c || a == d || b == c || b == d;
  };
  SkeletonSource source{SkeletonSource::Kind::kneser, std::nullopt,
                        "I(KG_{" + std::to_string(n) + ",2})"};
  return flag_complex(std::move(vertices), intersect, dim_cap, vertex_count, std::move(source),
                      options);
}

// ----------------------------------------------------------------------------
// Text export

void write_skeleton_text(const Skeleton& skel, std::ostream& out) {
  const auto& space = skel.source().space;
  out << skel.dim_cap() << ' ' << skel.universe_size() << ' '
      << (space ? space->n() : bit_length(skel.universe_size() - 1)) << ' '
      << (space ? space->r() : 0) << '\n';
  for (unsigned k = skel.stored_from(); k <= skel.dim_cap(); ++k) {
    for (std::uint64_t rank : skel.layer(k)) {
      const Simplex s = skel.unrank(k, rank);
      for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
      out << '\n';
    }
  }
}

Skeleton read_skeleton_text(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("missing skeleton header");
  std::istringstream header(line);
  unsigned dim_cap = 0, n = 0, r = 0;
  std::uint64_t m = 0;
  if (!(header >> dim_cap >> m >> n >> r) || m == 0)
    throw InvalidArgument("malformed skeleton header: " + line);
  std::vector<Simplex> simplices;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::vector<VertexLabel> vs;
    VertexLabel v;
    while (row >> v) vs.push_back(v);
    if (vs.empty()) continue;
    if (vs.size() > dim_cap + 1) throw InvalidArgument("simplex above dim_cap: " + line);
    simplices.emplace_back(std::move(vs));
  }
  SkeletonSource source{SkeletonSource::Kind::explicit_list,
                        SpaceSpec::truncated(m, r, std::max(n, bit_length(m - 1))), "imported"};
  Skeleton closed = from_simplices(simplices, dim_cap, m, source);
  std::vector<std::vector<std::uint64_t>> layers(dim_cap + 1);
  for (unsigned k = 0; k <= dim_cap; ++k) layers[k] = closed.layer(k);
  const bool complete = layers[dim_cap].empty();
  return Skeleton(std::move(source), dim_cap, m, std::move(layers), complete, false);
}

}  // namespace vrq
