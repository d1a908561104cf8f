#pragma once

// Two-dimensional LS constructions and resonance detection.
//
//   vdc_set       ((n-1)/N, xi_n),            n = 1..N
//   halton_pair   (xi_n over p1, xi_n over p2), n = 1..N
//
// Two LS-sequences resonate when their ratios satisfy g1^p = g2^q exactly;
// the pair (1,1),(4,1) is the classical example with g1^3 = g2, which also
// ties their interval counts by t'_n = t_{3n}.

#include <cstddef>
#include <optional>

#include "lsqmc/points.hpp"
#include "lsqmc/quadfield.hpp"

namespace lsqmc {

PointList2D vdc_set(LSParams params, std::size_t count);

PointList2D halton_pair(LSParams first, LSParams second, std::size_t count);

struct ResonanceResult {
  bool related = false;
  // smallest (p, q) with g1^p == g2^q, ordered by p + q then p
  int p = 0;
  int q = 0;
  bool field_match = false;
  // k such that the count sequence of the higher-power side equals the other
  // sampled every k levels (t2_n = t1_{k n} when q == 1, t1_n = t2_{k n}
  // when p == 1), verified for n <= count_checked_upto.
  std::optional<int> count_relation;
  int count_checked_upto = 0;
};

inline constexpr int kCountRelationDepth = 30;

/// Throws std::invalid_argument if max_exp < 1.
ResonanceResult detect_resonance(LSParams first, LSParams second, int max_exp = 12);

/// t2_n == t1_{k n} for all 0 <= n <= depth, exact big-integer check.
bool counts_related(LSParams first, LSParams second, int k, int depth = kCountRelationDepth);

}  // namespace lsqmc
