#pragma once

// LS-sequences of partitions: successive refinements of [0,1[ in which every
// interval of maximal length g^n is split into L pieces of length g^(n+1)
// followed by S pieces of length g^(n+2).

#include <cstddef>
#include <string>
#include <vector>

#include "lsqmc/errors.hpp"
#include "lsqmc/points.hpp"
#include "lsqmc/quadfield.hpp"

namespace lsqmc {

/// Default cap on the number of intervals materialized by partition_at:
/// 10^6, or the value of LSQMC_MAX_INTERVALS when set to a positive integer.
std::size_t default_max_intervals();

struct Interval {
  QuadNum left;
  int len_exp;  // length is g^len_exp
};

class LSPartition {
 public:
  /// The trivial partition {[0,1[}.
  explicit LSPartition(LSParams params);

  LSParams params() const noexcept { return params_; }
  int level() const noexcept { return level_; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  std::size_t size() const noexcept { return intervals_.size(); }

  std::size_t long_count() const;
  std::size_t short_count() const;

 private:
  friend LSPartition refine(const LSPartition& partition);
  LSPartition(LSParams params, int level, std::vector<Interval> intervals);

  LSParams params_;
  int level_;
  std::vector<Interval> intervals_;
};

LSPartition refine(const LSPartition& partition);

/// n-fold refinement of the trivial partition. Throws ResourceLimitError if
/// t_n exceeds max_intervals and std::invalid_argument if n < 0.
LSPartition partition_at(LSParams params, int n, std::size_t max_intervals = default_max_intervals());

/// Left endpoints in left-to-right order.
PointList1D left_endpoints(const LSPartition& partition);

struct CountSequence {
  LSParams params;
  std::vector<BigInt> values;  // t_0 .. t_n
};

/// t_0 = 1, t_1 = L+S, t_n = L t_{n-1} + S t_{n-2}.
CountSequence counts(LSParams params, int n);

}  // namespace lsqmc
