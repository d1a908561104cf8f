#pragma once

// Discrepancy growth scans. Each row carries N*D normalized by the three
// growth laws an LS construction can follow: constant (S <= L), log N
// (S = L+1) and N^(1-tau) with 1-tau = -log(S g) / log g (S >= L+2).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lsqmc/quadfield.hpp"

namespace lsqmc {

enum class Regime { bounded, logarithmic, power };

Regime regime(LSParams params);
std::string to_string(Regime regime);

/// -log(S g) / log g. Positive only in the power regime.
double one_minus_tau(LSParams params);

enum class ScanTarget {
  partition_extreme,  // extreme discrepancy of partition level n, N = t_n
  sequence_star,      // star discrepancy of the first N sequence points
  sequence_extreme,   // extreme discrepancy of the first N sequence points
  vdc_star,           // 2D star discrepancy of the van der Corput set of order N
  halton_star,        // 2D star discrepancy of the first N Halton-pair points
};

std::string to_string(ScanTarget target);
ScanTarget scan_target_from_string(const std::string& name);

struct ScanRow {
  std::size_t n = 0;      // point count
  int level = -1;         // partition level, or -1
  double d = 0.0;
  double nd = 0.0;        // N * D
  double nd_log = 0.0;    // N * D / log N       (NaN when N == 1)
  double nd_log2 = 0.0;   // N * D / log^2 N     (NaN when N == 1)
  double nd_pow = 0.0;    // N * D / N^(1-tau)
};

ScanRow scan_row(std::size_t n, double d, LSParams params);

/// For partition_extreme `grid` holds levels; otherwise point counts. The
/// halton target reads `second`; the others ignore it. `params` drives the
/// normalization columns.
std::vector<ScanRow> run_scan(ScanTarget target, LSParams params, LSParams second,
                              const std::vector<std::size_t>& grid);

/// Kendall rank correlation (tau-b) of paired samples.
double kendall_tau(std::span<const double> x, std::span<const double> y);

}  // namespace lsqmc
