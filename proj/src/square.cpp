#include "lsqmc/square.hpp"

#include <stdexcept>
#include <vector>

#include "lsqmc/partition.hpp"
#include "lsqmc/sequence.hpp"

namespace lsqmc {

PointList2D vdc_set(LSParams params, std::size_t count) {
  if (count == 0) throw std::invalid_argument("point set size must be at least 1");
  PointList1D ys = sequence_prefix(params, count);
  std::vector<QuadNum> xs;
  xs.reserve(count);
  const BigInt denom(static_cast<unsigned long>(count));
  for (std::size_t i = 0; i < count; ++i) {
    xs.emplace_back(params, Rational(BigInt(static_cast<unsigned long>(i)), denom), 0);
  }
  return PointList2D(Construction::van_der_corput, PointList1D(params, std::move(xs)), std::move(ys));
}

PointList2D halton_pair(LSParams first, LSParams second, std::size_t count) {
  if (count == 0) throw std::invalid_argument("point set size must be at least 1");
  return PointList2D(Construction::halton, sequence_prefix(first, count),
                     sequence_prefix(second, count));
}

bool counts_related(LSParams first, LSParams second, int k, int depth) {
  if (k < 1 || depth < 0) throw std::invalid_argument("count relation needs k >= 1, depth >= 0");
  const CountSequence lhs = counts(second, depth);
  const CountSequence rhs = counts(first, k * depth);
  for (int n = 0; n <= depth; ++n) {
    if (lhs.values[n] != rhs.values[k * n]) return false;
  }
  return true;
}

ResonanceResult detect_resonance(LSParams first, LSParams second, int max_exp) {
  if (max_exp < 1) throw std::invalid_argument("max_exp must be at least 1");
  ResonanceResult result;
  result.field_match = first.squarefree_part() == second.squarefree_part();
  if (!result.field_match) return result;

  std::vector<SqrtNum> lhs;
  std::vector<SqrtNum> rhs;
  {
    const auto g1 = gamma_powers(first, static_cast<unsigned>(max_exp));
    const auto g2 = gamma_powers(second, static_cast<unsigned>(max_exp));
    for (int e = 0; e <= max_exp; ++e) {
      lhs.push_back(to_sqrt_form(g1[e]));
      rhs.push_back(to_sqrt_form(g2[e]));
    }
  }

  for (int total = 2; total <= 2 * max_exp && !result.related; ++total) {
    for (int p = std::max(1, total - max_exp); p <= std::min(max_exp, total - 1); ++p) {
      const int q = total - p;
      if (lhs[p] == rhs[q]) {
        result.related = true;
        result.p = p;
        result.q = q;
        break;
      }
    }
  }
  if (!result.related) return result;

  result.count_checked_upto = kCountRelationDepth;
  if (result.q == 1 && counts_related(first, second, result.p)) {
    result.count_relation = result.p;
  } else if (result.p == 1 && counts_related(second, first, result.q)) {
    result.count_relation = result.q;
  }
  return result;
}

}  // namespace lsqmc
