#pragma once

// Exact discrepancy of finite point sets. Point order along each axis is
// decided in exact arithmetic; lengths and areas are then evaluated in double.
//
//   star     sup over anchored boxes [0,a[ (x [0,b[)  |count/N - volume|
//   extreme  sup over arbitrary intervals [a,b[        |count/N - (b - a)|
//
// Half-open boxes make the sup a limit; every routine evaluates both the
// "closed" count (boundary points included) and the "open" count (excluded)
// at each critical value, which turns the limit into a finite maximum.

#include <cstddef>
#include <string>

#include "lsqmc/points.hpp"

namespace lsqmc {

enum class Method { formula, grid_scan, brute_force };
enum class DiscrepancyKind { star, extreme };

std::string to_string(Method method);
std::string to_string(DiscrepancyKind kind);

/// Box attaining the reported value. `count` is the number of points
/// credited to the box in the limit; value == |count/N - volume()|.
struct Box {
  double x_lo = 0.0;
  double x_hi = 1.0;
  double y_lo = 0.0;
  double y_hi = 1.0;
  std::size_t count = 0;

  double volume() const { return (x_hi - x_lo) * (y_hi - y_lo); }
  double local_discrepancy(std::size_t n) const;
};

struct DiscrepancyReport {
  std::size_t n = 0;
  double value = 0.0;
  Box witness;
  Method method = Method::formula;
  DiscrepancyKind kind = DiscrepancyKind::star;
  int dimension = 1;
};

inline constexpr std::size_t kBruteForce1dLimit = 5000;
inline constexpr std::size_t kStar2dLimit = 100000;

/// max_i max(i/N - x_(i), x_(i) - (i-1)/N). Throws std::invalid_argument on
/// empty input.
DiscrepancyReport star_disc_1d(const PointList1D& points);

/// 1/N + max_i (i/N - x_(i)) - min_i (i/N - x_(i)). The closed form is
/// checked once per process against the critical-interval scan; if that
/// check ever fails the scan is used instead (method == grid_scan).
DiscrepancyReport extreme_disc_1d(const PointList1D& points);

/// Enumerates every critical interval. Throws ResourceLimitError above
/// kBruteForce1dLimit points.
DiscrepancyReport brute_force_1d(const PointList1D& points, DiscrepancyKind kind);

/// Anchored-box sweep over the critical grid, O(N^2). Throws
/// ResourceLimitError above kStar2dLimit points.
DiscrepancyReport star_disc_2d(const PointList2D& points);

/// True when the extreme-discrepancy closed form matched the scan on the
/// built-in validation battery.
bool extreme_formula_validated();

}  // namespace lsqmc
