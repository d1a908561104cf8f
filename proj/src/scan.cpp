#include "lsqmc/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lsqmc/discrepancy.hpp"
#include "lsqmc/partition.hpp"
#include "lsqmc/sequence.hpp"
#include "lsqmc/square.hpp"

namespace lsqmc {

Regime regime(LSParams params) {
  if (params.short_count() <= params.long_count()) return Regime::bounded;
  if (params.short_count() == params.long_count() + 1) return Regime::logarithmic;
  return Regime::power;
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::bounded: return "bounded";
    case Regime::logarithmic: return "logarithmic";
    case Regime::power: return "power";
  }
  return "unknown";
}

double one_minus_tau(LSParams params) {
  const double g = params.gamma_float();
  return -std::log(static_cast<double>(params.short_count()) * g) / std::log(g);
}

std::string to_string(ScanTarget target) {
  switch (target) {
    case ScanTarget::partition_extreme: return "partition";
    case ScanTarget::sequence_star: return "seq-star";
    case ScanTarget::sequence_extreme: return "seq-extreme";
    case ScanTarget::vdc_star: return "vdc";
    case ScanTarget::halton_star: return "halton";
  }
  return "unknown";
}

ScanTarget scan_target_from_string(const std::string& name) {
  for (ScanTarget t : {ScanTarget::partition_extreme, ScanTarget::sequence_star,
                       ScanTarget::sequence_extreme, ScanTarget::vdc_star, ScanTarget::halton_star}) {
    if (to_string(t) == name) return t;
  }
  throw std::invalid_argument("unknown scan target '" + name + "'");
}

ScanRow scan_row(std::size_t n, double d, LSParams params) {
  ScanRow row;
  row.n = n;
  row.d = d;
  const double big_n = static_cast<double>(n);
  row.nd = big_n * d;
  const double log_n = std::log(big_n);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  row.nd_log = log_n > 0.0 ? row.nd / log_n : nan;
  row.nd_log2 = log_n > 0.0 ? row.nd / (log_n * log_n) : nan;
  row.nd_pow = row.nd / std::pow(big_n, one_minus_tau(params));
  return row;
}

std::vector<ScanRow> run_scan(ScanTarget target, LSParams params, LSParams second,
                              const std::vector<std::size_t>& grid) {
  std::vector<ScanRow> rows;
  if (grid.empty()) return rows;
  for (std::size_t g : grid) {
    if (g == 0 && target != ScanTarget::partition_extreme) {
      throw std::invalid_argument("scan grid values must be positive");
    }
  }
  const std::size_t largest = *std::max_element(grid.begin(), grid.end());

  switch (target) {
    case ScanTarget::partition_extreme: {
      for (std::size_t level : grid) {
        const LSPartition part = partition_at(params, static_cast<int>(level));
        const DiscrepancyReport r = extreme_disc_1d(left_endpoints(part));
        ScanRow row = scan_row(part.size(), r.value, params);
        row.level = static_cast<int>(level);
        rows.push_back(row);
      }
      break;
    }
    case ScanTarget::sequence_star:
    case ScanTarget::sequence_extreme: {
      const PointList1D all = sequence_prefix(params, largest);
      for (std::size_t n : grid) {
        const PointList1D pts = all.prefix(n);
        const DiscrepancyReport r = target == ScanTarget::sequence_star ? star_disc_1d(pts)
                                                                        : extreme_disc_1d(pts);
        rows.push_back(scan_row(n, r.value, params));
      }
      break;
    }
    case ScanTarget::vdc_star: {
      for (std::size_t n : grid) {
        rows.push_back(scan_row(n, star_disc_2d(vdc_set(params, n)).value, params));
      }
      break;
    }
    case ScanTarget::halton_star: {
      const PointList1D xs = sequence_prefix(params, largest);
      const PointList1D ys = sequence_prefix(second, largest);
      for (std::size_t n : grid) {
        const PointList2D pts(Construction::halton, xs.prefix(n), ys.prefix(n));
        rows.push_back(scan_row(n, star_disc_2d(pts).value, params));
      }
      break;
    }
  }
  return rows;
}

double kendall_tau(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("kendall_tau needs paired samples");
  const std::size_t n = x.size();
  long long concordant = 0;
  long long discordant = 0;
  long long ties_x = 0;
  long long ties_y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = x[j] - x[i];
      const double dy = y[j] - y[i];
      if (dx == 0.0 && dy == 0.0) continue;
      if (dx == 0.0) { ++ties_x; continue; }
      if (dy == 0.0) { ++ties_y; continue; }
      if ((dx > 0.0) == (dy > 0.0)) ++concordant; else ++discordant;
    }
  }
  const double n1 = static_cast<double>(concordant + discordant + ties_x);
  const double n2 = static_cast<double>(concordant + discordant + ties_y);
  if (n1 == 0.0 || n2 == 0.0) return 0.0;
  return static_cast<double>(concordant - discordant) / std::sqrt(n1 * n2);
}

}  // namespace lsqmc
