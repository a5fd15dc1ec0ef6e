#include "vrq/homology.hpp"

#include <algorithm>
#include <numeric>

#include "vrq/errors.hpp"

namespace vrq {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  bool prime = p >= 2 && p < (std::uint32_t{1} << 31);
  for (std::uint32_t d = 2; prime && std::uint64_t{d} * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not a prime");
}

std::uint32_t PrimeField::reduce(std::int64_t x) const noexcept {
  const std::int64_t r = x % static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
}

std::uint32_t PrimeField::add(std::uint32_t a, std::uint32_t b) const noexcept {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
}

std::uint32_t PrimeField::mul(std::uint32_t a, std::uint32_t b) const noexcept {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw InvalidArgument("zero has no inverse");
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a % p_, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

namespace {

// Produces boundary columns of the k-simplices of a skeleton on demand.
class BoundaryColumns {
 public:
  BoundaryColumns(const Skeleton& skel, unsigned k) : skel_(skel), k_(k) {
    if (k == 0 || k > skel.dim_cap()) throw InvalidArgument("boundary dimension out of range");
    if (!skel.stores(k) || !skel.stores(k - 1))
      throw InvalidArgument("boundary needs layers " + std::to_string(k - 1) + " and " +
                            std::to_string(k));
  }

  std::size_t cols() const { return skel_.layer(k_).size(); }
  std::size_t rows() const { return skel_.layer(k_ - 1).size(); }

  // Entries (row, sign) with sign = (-1)^j for the facet omitting vertex j.
  void column(std::size_t j, std::vector<std::pair<std::uint32_t, int>>& out) const {
    out.clear();
    const Simplex s = skel_.unrank(k_, skel_.layer(k_)[j]);
    const auto& binom = skel_.binomial();
    // prefix[j] = sum_{i<j} C(v_i, i+1), shifted[j] = sum_{i>j} C(v_i, i)
    std::vector<std::uint64_t> shifted(k_ + 2, 0);
    for (int i = static_cast<int>(k_); i >= 0; --i)
      shifted[static_cast<std::size_t>(i)] =
          shifted[static_cast<std::size_t>(i) + 1] +
          (i > 0 ? binom(s[static_cast<std::size_t>(i)], static_cast<unsigned>(i)) : 0);
    std::uint64_t prefix = 0;
    for (unsigned i = 0; i <= k_; ++i) {
      const std::uint64_t facet = prefix + shifted[i + 1];
      const auto row = skel_.index_of(k_ - 1, facet);
      if (!row) throw InvalidArgument("skeleton is not closed under faces");
      out.emplace_back(static_cast<std::uint32_t>(*row), (i % 2 == 0) ? 1 : -1);
      prefix += binom(s[i], i + 1);
    }
    std::sort(out.begin(), out.end());
  }

 private:
  const Skeleton& skel_;
  unsigned k_;
};

using Column = std::vector<MatrixEntry>;

// target -= factor * source, both sorted by row.
void axpy(Column& target, const Column& source, std::uint32_t factor, const PrimeField& field,
          Column& scratch) {
  scratch.clear();
  const std::uint32_t neg = field.neg(factor);
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->row < b->row)) {
      scratch.push_back(*a++);
    } else if (a == target.end() || b->row < a->row) {
      scratch.push_back({b->row, field.mul(neg, b->coef)});
      ++b;
    } else {
      const std::uint32_t c = field.add(a->coef, field.mul(neg, b->coef));
      if (c != 0) scratch.push_back({a->row, c});
      ++a;
      ++b;
    }
  }
  target.swap(scratch);
}

}  // namespace

SparseBoundaryMatrix boundary_matrix(const Skeleton& skel, unsigned k, const PrimeField& field) {
  BoundaryColumns cols(skel, k);
  SparseBoundaryMatrix mat;
  mat.dimension = k;
  mat.p = field.p();
  mat.rows = cols.rows();
  mat.columns.resize(cols.cols());
  std::vector<std::pair<std::uint32_t, int>> raw;
  for (std::size_t j = 0; j < cols.cols(); ++j) {
    cols.column(j, raw);
    for (auto [row, sign] : raw) mat.columns[j].push_back({row, field.reduce(sign)});
  }
  return mat;
}

std::uint64_t boundary_rank(const Skeleton& skel, unsigned k, const PrimeField& field,
                            const std::vector<bool>* cleared, std::vector<bool>* pivot_rows) {
  BoundaryColumns cols(skel, k);
  const std::size_t rows = cols.rows();
  if (pivot_rows) pivot_rows->assign(rows, false);
  // Reduced column owning each pivot row.
  std::vector<Column> by_pivot(rows);
  std::vector<bool> has_pivot(rows, false);
  std::vector<std::pair<std::uint32_t, int>> raw;
  Column col, scratch;
  std::uint64_t rank = 0;
  for (std::size_t j = 0; j < cols.cols(); ++j) {
    if (cleared && (*cleared)[j]) continue;
    cols.column(j, raw);
    col.clear();
    for (auto [row, sign] : raw) col.push_back({row, field.reduce(sign)});
    while (!col.empty()) {
      const MatrixEntry low = col.back();
      if (!has_pivot[low.row]) {
        // Normalise so the pivot coefficient is 1.
        const std::uint32_t scale = field.inv(low.coef);
        for (auto& e : col) e.coef = field.mul(e.coef, scale);
        by_pivot[low.row] = col;
        has_pivot[low.row] = true;
        if (pivot_rows) (*pivot_rows)[low.row] = true;
        ++rank;
        break;
      }
      axpy(col, by_pivot[low.row], low.coef, field, scratch);
    }
  }
  return rank;
}

namespace {

// Reduced Betti numbers for dimensions lo..hi. Layers lo-1..hi+1 (as far as
// they exist) must be stored.
std::vector<std::uint64_t> betti_range(const Skeleton& skel, const PrimeField& field, unsigned lo,
                                       unsigned hi) {
  const unsigned top = std::min(hi + 1, skel.dim_cap());
  std::vector<std::uint64_t> rank(top + 2, 0);  // rank[k] = rank of boundary k
  std::vector<bool> pivots;
  std::vector<bool> cleared;
  bool have_cleared = false;
  for (unsigned k = top; k >= std::max(lo, 1u); --k) {
    rank[k] = boundary_rank(skel, k, field, have_cleared ? &cleared : nullptr, &pivots);
    cleared.swap(pivots);
    have_cleared = true;
    if (k == 1) break;
  }
  if (lo == 0) rank[0] = skel.count(0) > 0 ? 1 : 0;
  std::vector<std::uint64_t> out;
  for (unsigned i = lo; i <= hi; ++i)
    out.push_back(skel.count(i) - rank[i] - (i + 1 <= top ? rank[i + 1] : 0));
  return out;
}

int trusted_through(const Skeleton& skel, unsigned maxdim) {
  if (skel.complete_flag() || maxdim < skel.dim_cap()) return static_cast<int>(maxdim);
  return static_cast<int>(skel.dim_cap()) - 1;
}

void check_maxdim(const Skeleton& skel, unsigned maxdim) {
  if (maxdim > skel.dim_cap())
    throw InvalidArgument("maxdim " + std::to_string(maxdim) + " above skeleton dim_cap " +
                          std::to_string(skel.dim_cap()));
  if (skel.stored_from() != 0) throw InvalidArgument("betti_numbers needs every layer stored");
}

}  // namespace

BettiVector betti_numbers(const Skeleton& skel, const PrimeField& field, unsigned maxdim) {
  check_maxdim(skel, maxdim);
  BettiVector out;
  out.p = field.p();
  out.maxdim = maxdim;
  out.reduced_betti = betti_range(skel, field, 0, maxdim);
  out.trusted_through = trusted_through(skel, maxdim);
  return out;
}

std::uint64_t betti_single_dim(const SpaceSpec& space, unsigned i, const PrimeField& field,
                               const EnumerationOptions& options) {
  if (i == 0) throw InvalidArgument("betti_single_dim needs i >= 1");
  EnumerationOptions layered = options;
  layered.store_from = i - 1;
  const Skeleton skel = enumerate_skeleton(space, i + 1, layered);
  return betti_range(skel, field, i, i).front();
}

std::uint64_t dense_rank_oracle(const SparseBoundaryMatrix& mat) {
  const std::size_t rows = mat.rows, cols = mat.columns.size();
  if (rows != 0 && cols > kDenseOracleLimit / rows)
    throw SizeBudgetExceeded("dense oracle limited to 1e7 entries", rows * cols);
  const PrimeField field(mat.p);
  // Row-major dense copy.
  std::vector<std::uint32_t> a(rows * cols, 0);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& e : mat.columns[j]) a[e.row * cols + j] = e.coef % mat.p;
  std::uint64_t rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && a[r * cols + c] == 0) ++r;
    if (r == rows) continue;
    if (r != pivot_row)
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(r * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(pivot_row * cols));
    const std::uint32_t inv = field.inv(a[pivot_row * cols + c]);
    for (std::size_t x = pivot_row + 1; x < rows; ++x) {
      const std::uint32_t f = field.mul(a[x * cols + c], inv);
      if (f == 0) continue;
      const std::uint32_t nf = field.neg(f);
      for (std::size_t y = c; y < cols; ++y)
        a[x * cols + y] = field.add(a[x * cols + y], field.mul(nf, a[pivot_row * cols + y]));
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

BettiVector dense_betti_oracle(const Skeleton& skel, const PrimeField& field, unsigned maxdim) {
  check_maxdim(skel, maxdim);
  const unsigned top = std::min(maxdim + 1, skel.dim_cap());
  std::vector<std::uint64_t> rank(top + 2, 0);
  rank[0] = skel.count(0) > 0 ? 1 : 0;
  for (unsigned k = 1; k <= top; ++k) rank[k] = dense_rank_oracle(boundary_matrix(skel, k, field));
  BettiVector out;
  out.p = field.p();
  out.maxdim = maxdim;
  for (unsigned i = 0; i <= maxdim; ++i)
    out.reduced_betti.push_back(skel.count(i) - rank[i] - (i + 1 <= top ? rank[i + 1] : 0));
  out.trusted_through = trusted_through(skel, maxdim);
  return out;
}

std::uint64_t connected_components(const Skeleton& skel) {
  const auto& verts = skel.layer(0);
  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::uint64_t components = verts.size();
  if (skel.dim_cap() >= 1) {
    for (std::uint64_t rank : skel.layer(1)) {
      const Simplex e = skel.unrank(1, rank);
      const auto a = find(*skel.index_of(0, e[0]));
      const auto b = find(*skel.index_of(0, e[1]));
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components;
}

}  // namespace vrq
