#include "vrq/closed_forms.hpp"

#include <vector>

#include "vrq/errors.hpp"

namespace vrq {

std::string to_string(PredictionStatus status) {
  switch (status) {
    case PredictionStatus::theorem: return "theorem";
    case PredictionStatus::observation: return "observation";
    case PredictionStatus::conjecture: return "conjecture";
    case PredictionStatus::unknown: return "unknown";
  }
  return "unknown";
}

PredictionStatus prediction_status_from_string(const std::string& name) {
  for (auto s : {PredictionStatus::theorem, PredictionStatus::observation,
                 PredictionStatus::conjecture, PredictionStatus::unknown})
    if (to_string(s) == name) return s;
  throw InvalidArgument("unknown prediction status '" + name + "'");
}

bool PredictionRecord::asserts(std::uint64_t i) const {
  if (status == PredictionStatus::unknown) return false;
  return exhaustive || predicted_reduced_betti.count(i) != 0;
}

BigInt PredictionRecord::value(std::uint64_t i) const {
  const auto it = predicted_reduced_betti.find(i);
  return it == predicted_reduced_betti.end() ? BigInt(0) : it->second;
}

std::uint64_t alpha(VertexLabel x) {
  const BitIndexSet bits = bit_decomposition(x);
  std::uint64_t total = 0;
  // indices[s - 1] is i_s
  for (std::size_t s = 3; s <= bits.size(); ++s) total += (s - 2) * (bits.indices[s - 1] + 1);
  return total;
}

BigInt alpha_partial_sum(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("alpha_partial_sum needs m >= 1");
  std::uint64_t total = 0;  // at most m * 63^2, fine well past any feasible m
  for (std::uint64_t k = 0; k < m; ++k) total += alpha(k);
  return BigInt(total);
}

BigInt c_n(unsigned n) {
  if (n < 3) throw InvalidArgument("c_n is defined for n >= 3");
  const BigInt quarter = BigInt(1) << (n - 2);
  BigInt total = 0;
  for (unsigned i = 1; i < n; ++i) {
    const BigInt weight = quarter - (BigInt(1) << (i - 1));
    for (unsigned j = 0; j < i; ++j) total += (j + 1) * weight;
  }
  return total;
}

BigInt taylor_coefficient(unsigned k) {
  // Denominator (1 - x)(1 - 2x)^4 as a polynomial, then long division of 1.
  std::vector<BigInt> den{1};
  auto times = [&](const BigInt& c) {  // multiply by (1 + c x)
    std::vector<BigInt> out(den.size() + 1, 0);
    for (std::size_t i = 0; i < den.size(); ++i) {
      out[i] += den[i];
      out[i + 1] += c * den[i];
    }
    den = std::move(out);
  };
  times(-1);
  for (int i = 0; i < 4; ++i) times(-2);
  std::vector<BigInt> q(k + 1, 0);
  for (unsigned i = 0; i <= k; ++i) {
    BigInt acc = i == 0 ? BigInt(1) : BigInt(0);
    for (std::size_t j = 1; j < den.size() && j <= i; ++j) acc -= den[j] * q[i - j];
    q[i] = acc;  // den[0] == 1
  }
  return q[k];
}

namespace {

BigInt pow2(std::uint64_t e) { return BigInt(1) << static_cast<unsigned>(e); }

BigInt choose(unsigned a, unsigned b) {
  if (b > a) return 0;
  BigInt out = 1;
  for (unsigned i = 1; i <= b; ++i) out = out * (a - b + i) / i;
  return out;
}

std::string wedge(const BigInt& count, std::uint64_t dim) {
  const std::string sphere = "S^" + std::to_string(dim);
  if (count == 0) return "contractible";
  if (count == 1) return sphere;
  return "wedge of " + count.str() + " copies of " + sphere;
}

}  // namespace

PredictionRecord predicted_betti(unsigned n, unsigned r) {
  if (n == 0 || n > kMaxBits) throw InvalidArgument("n must be in 1..63");
  PredictionRecord rec;
  rec.n = n;
  rec.r = r;
  auto theorem = [&](std::uint64_t dim, BigInt count) {
    rec.status = PredictionStatus::theorem;
    rec.exhaustive = true;
    rec.homotopy_description = wedge(count, dim);
    if (count != 0) rec.predicted_reduced_betti[dim] = std::move(count);
  };
  if (r >= n) {
    theorem(0, 0);
    rec.homotopy_description = "contractible (simplex)";
  } else if (r == 0) {
    theorem(0, pow2(n) - 1);
  } else if (r == 1) {
    theorem(1, BigInt(n - 2) * pow2(n - 1) + 1);
  } else if (r == 2) {
    theorem(3, c_n(n));
  } else if (r == n - 1) {
    theorem(pow2(n - 1).convert_to<std::uint64_t>() - 1, 1);
    rec.homotopy_description += " (boundary of the " + pow2(n - 1).str() + "-dimensional cross-polytope)";
  } else if (r == 3 && n >= 5) {
    rec.status = PredictionStatus::conjecture;
    rec.exhaustive = false;
    BigInt h4 = 0;
    for (unsigned i = 4; i <= n - 1; ++i) h4 += pow2(i - 4) * choose(i, 4);
    rec.predicted_reduced_betti[4] = h4;
    rec.predicted_reduced_betti[7] = pow2(n - 4) * choose(n, 4);
    rec.homotopy_description = "conjectured: rank " + h4.str() + " in dimension 4, rank " +
                               rec.predicted_reduced_betti[7].str() +
                               " in dimension 7; other dimensions unasserted";
  } else {
    rec.status = PredictionStatus::unknown;
    rec.homotopy_description = "unknown";
  }
  return rec;
}

}  // namespace vrq
