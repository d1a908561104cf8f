#include "lsqmc/partition.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>

namespace lsqmc {

std::size_t default_max_intervals() {
  constexpr std::size_t kDefault = 1'000'000;
  const char* env = std::getenv("LSQMC_MAX_INTERVALS");
  if (env == nullptr || *env == '\0') return kDefault;
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || v == 0) return kDefault;
  return static_cast<std::size_t>(v);
}

LSPartition::LSPartition(LSParams params) : params_(params), level_(0) {
  intervals_.push_back({QuadNum(params), 0});
}

LSPartition::LSPartition(LSParams params, int level, std::vector<Interval> intervals)
    : params_(params), level_(level), intervals_(std::move(intervals)) {}

std::size_t LSPartition::long_count() const {
  return static_cast<std::size_t>(std::count_if(
      intervals_.begin(), intervals_.end(), [&](const Interval& i) { return i.len_exp == level_; }));
}

std::size_t LSPartition::short_count() const { return size() - long_count(); }

LSPartition refine(const LSPartition& partition) {
  const LSParams params = partition.params();
  const int n = partition.level();
  const auto longs = static_cast<std::size_t>(params.long_count());
  const auto shorts = static_cast<std::size_t>(params.short_count());

  const std::vector<QuadNum> powers = gamma_powers(params, static_cast<unsigned>(n + 2));
  const QuadNum& long_len = powers[n + 1];
  const QuadNum& short_len = powers[n + 2];

  std::vector<Interval> out;
  out.reserve(partition.long_count() * (longs + shorts) + partition.short_count());
  for (const Interval& interval : partition.intervals()) {
    if (interval.len_exp != n) {
      out.push_back(interval);
      continue;
    }
    QuadNum left = interval.left;
    for (std::size_t j = 0; j < longs; ++j) {
      out.push_back({left, n + 1});
      left += long_len;
    }
    for (std::size_t j = 0; j < shorts; ++j) {
      out.push_back({left, n + 2});
      left += short_len;
    }
  }
  return LSPartition(params, n + 1, std::move(out));
}

LSPartition partition_at(LSParams params, int n, std::size_t max_intervals) {
  if (n < 0) throw std::invalid_argument("partition level must be non-negative");
  const BigInt total = counts(params, n).values.back();
  if (cmp(total, BigInt(static_cast<unsigned long>(max_intervals))) > 0) {
    throw ResourceLimitError("partition level " + std::to_string(n) + " for (" +
                             params.to_string() + ") has " + total.get_str() +
                             " intervals, above the cap of " + std::to_string(max_intervals) +
                             " (set LSQMC_MAX_INTERVALS to raise it)");
  }
  LSPartition partition(params);
  for (int level = 0; level < n; ++level) partition = refine(partition);
  return partition;
}

PointList1D left_endpoints(const LSPartition& partition) {
  std::vector<QuadNum> points;
  points.reserve(partition.size());
  for (const Interval& interval : partition.intervals()) points.push_back(interval.left);
  return PointList1D(partition.params(), std::move(points));
}

CountSequence counts(LSParams params, int n) {
  if (n < 0) throw std::invalid_argument("count index must be non-negative");
  CountSequence seq{params, {}};
  seq.values.reserve(static_cast<std::size_t>(n) + 1);
  seq.values.emplace_back(1);
  if (n >= 1) seq.values.emplace_back(static_cast<long>(params.base()));
  const BigInt longs(static_cast<long>(params.long_count()));
  const BigInt shorts(static_cast<long>(params.short_count()));
  for (int k = 2; k <= n; ++k) {
    seq.values.push_back(longs * seq.values[k - 1] + shorts * seq.values[k - 2]);
  }
  return seq;
}

}  // namespace lsqmc
