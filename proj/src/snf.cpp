// Integer homology by Smith normal form.
//
// Boundary matrices are first shrunk by sparse elimination on unit pivots,
// which is exact over Z and leaves the nontrivial invariants untouched. The
// remainder, usually empty, goes through a dense Smith normal form on
// arbitrary-precision integers.

#include <algorithm>
#include <map>
#include <set>

#include "vrq/errors.hpp"
#include "vrq/homology.hpp"

namespace vrq {

namespace {

bool is_unit(const BigInt& x) { return x == 1 || x == -1; }

struct SmithSummary {
  std::uint64_t rank = 0;
  std::vector<BigInt> nontrivial;  // invariants > 1
};

// Column-major sparse integer matrix with row occupancy for elimination.
class SparseIntMatrix {
 public:
  SparseIntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  void set(std::size_t r, std::size_t c, BigInt v) {
    if (v == 0) return;
    cols_[c][static_cast<std::uint32_t>(r)] = std::move(v);
    rows_[r].insert(static_cast<std::uint32_t>(c));
  }

  // Unit-pivot elimination. Returns the number of pivots removed.
  std::uint64_t eliminate_units() {
    std::uint64_t pivots = 0;
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t c = 0; c < cols_.size(); ++c) {
        auto& col = cols_[c];
        if (col.empty()) continue;
        // Unit entry whose row is sparsest.
        std::uint32_t best_row = 0;
        std::size_t best_fill = SIZE_MAX;
        for (const auto& [r, v] : col) {
          if (is_unit(v) && rows_[r].size() < best_fill) {
            best_fill = rows_[r].size();
            best_row = r;
          }
        }
        if (best_fill == SIZE_MAX) continue;
        pivot(best_row, static_cast<std::uint32_t>(c));
        ++pivots;
        progress = true;
      }
    }
    return pivots;
  }

  std::vector<std::vector<BigInt>> dense_remainder(std::size_t& out_rows) const {
    std::vector<std::uint32_t> live_rows;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (!rows_[r].empty()) live_rows.push_back(static_cast<std::uint32_t>(r));
    std::map<std::uint32_t, std::size_t> row_index;
    for (std::size_t i = 0; i < live_rows.size(); ++i) row_index[live_rows[i]] = i;
    std::vector<std::vector<BigInt>> dense;
    for (const auto& col : cols_) {
      if (col.empty()) continue;
      std::vector<BigInt> d(live_rows.size(), 0);
      for (const auto& [r, v] : col) d[row_index.at(r)] = v;
      dense.push_back(std::move(d));
    }
    out_rows = live_rows.size();
    return dense;
  }

 private:
  // Clear row `r` with column operations, then drop row r and column c.
  void pivot(std::uint32_t r, std::uint32_t c) {
    const BigInt a = cols_[c].at(r);  // +-1
    const std::vector<std::uint32_t> others(rows_[r].begin(), rows_[r].end());
    for (std::uint32_t c2 : others) {
      if (c2 == c) continue;
      const BigInt factor = cols_[c2].at(r) * a;  // a^-1 == a for units
      for (const auto& [row, v] : cols_[c]) {
        BigInt& slot = cols_[c2][row];
        slot -= factor * v;
        if (slot == 0) {
          cols_[c2].erase(row);
          rows_[row].erase(c2);
        } else {
          rows_[row].insert(c2);
        }
      }
    }
    for (const auto& [row, v] : cols_[c]) rows_[row].erase(c);
    cols_[c].clear();
  }

  std::vector<std::map<std::uint32_t, BigInt>> cols_;
  std::vector<std::set<std::uint32_t>> rows_;
};

SmithSummary boundary_smith(const Skeleton& skel, unsigned k) {
  SmithSummary out;
  if (k == 0 || k > skel.dim_cap() || skel.count(k) == 0) return out;
  for (unsigned d : {k - 1, k})
    if (skel.count(d) > kSnfLayerLimit)
      throw SizeBudgetExceeded("integer homology limited to 20000 simplices per layer",
                               skel.count(d));
  const SparseBoundaryMatrix mat = boundary_matrix(skel, k, PrimeField(2147483647u));
  SparseIntMatrix m(mat.rows, mat.columns.size());
  for (std::size_t j = 0; j < mat.columns.size(); ++j)
    for (const auto& e : mat.columns[j]) m.set(e.row, j, e.coef == 1 ? BigInt(1) : BigInt(-1));
  out.rank = m.eliminate_units();
  std::size_t rows = 0;
  auto rest = m.dense_remainder(rows);
  for (BigInt& d : smith_invariants(std::move(rest), rows)) {
    ++out.rank;
    if (d > 1) out.nontrivial.push_back(std::move(d));
  }
  return out;
}

}  // namespace

std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> a, std::size_t rows) {
  // a[c][r]; operate in place.
  const std::size_t cols = a.size();
  std::vector<BigInt> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero magnitude in the trailing block.
    std::size_t pr = 0, pc = 0;
    bool found = false;
    BigInt best;
    for (std::size_t c = t; c < cols; ++c)
      for (std::size_t r = t; r < rows; ++r)
        if (a[c][r] != 0 && (!found || abs(a[c][r]) < best)) {
          best = abs(a[c][r]);
          pr = r;
          pc = c;
          found = true;
        }
    if (!found) break;
    std::swap(a[t], a[pc]);
    for (auto& col : a) std::swap(col[t], col[pr]);

    bool clean = false;
    while (!clean) {
      clean = true;
      // Rows below the pivot.
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[t][r] == 0) continue;
        const BigInt q = a[t][r] / a[t][t];
        for (std::size_t c = t; c < cols; ++c) a[c][r] -= q * a[c][t];
        if (a[t][r] != 0) {
          for (auto& col : a) std::swap(col[t], col[r]);
          clean = false;
        }
      }
      // Columns right of the pivot.
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a[c][t] == 0) continue;
        const BigInt q = a[c][t] / a[t][t];
        for (std::size_t r = t; r < rows; ++r) a[c][r] -= q * a[t][r];
        if (a[c][t] != 0) {
          std::swap(a[t], a[c]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: fold a violating row into the pivot row and retry.
      for (std::size_t c = t + 1; c < cols && clean; ++c)
        for (std::size_t r = t + 1; r < rows && clean; ++r)
          if (a[c][r] % a[t][t] != 0) {
            for (std::size_t c2 = t; c2 < cols; ++c2) a[c2][t] += a[c2][r];
            clean = false;
          }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

IntegerHomologySummary integer_homology_snf(const Skeleton& skel, unsigned i) {
  if (skel.stored_from() != 0) throw InvalidArgument("integer homology needs every layer stored");
  if (i > skel.dim_cap()) throw InvalidArgument("dimension above skeleton dim_cap");
  if (i == skel.dim_cap() && !skel.complete_flag())
    throw InvalidArgument("integer homology in the top dimension of a truncated skeleton");
  if (skel.count(i) > kSnfLayerLimit)
    throw SizeBudgetExceeded("integer homology limited to 20000 simplices per layer",
                             skel.count(i));
  const SmithSummary below = boundary_smith(skel, i);
  const SmithSummary above = boundary_smith(skel, i + 1);
  IntegerHomologySummary out;
  out.dimension = i;
  // Unreduced: the boundary of a vertex is zero.
  out.free_rank = skel.count(i) - below.rank - above.rank;
  out.torsion = above.nontrivial;
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

}  // namespace vrq
