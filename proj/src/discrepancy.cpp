#include "lsqmc/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "lsqmc/errors.hpp"

namespace lsqmc {

std::string to_string(Method method) {
  switch (method) {
    case Method::formula: return "formula";
    case Method::grid_scan: return "grid_scan";
    case Method::brute_force: return "brute_force";
  }
  return "unknown";
}

std::string to_string(DiscrepancyKind kind) {
  return kind == DiscrepancyKind::star ? "star" : "extreme";
}

double Box::local_discrepancy(std::size_t n) const {
  return std::abs(static_cast<double>(count) / static_cast<double>(n) - volume());
}

namespace {

// Exact order of one axis.
struct AxisOrder {
  std::vector<std::size_t> order;         // point indices, ascending by value
  std::vector<double> sorted;             // shadow values in that order
  std::vector<std::size_t> rank;          // per point: index into distinct
  std::vector<double> distinct;           // distinct values ascending
  std::vector<std::size_t> below;         // below[k] = #points < distinct[k]; below[m] = N
  bool has_zero = false;                  // distinct[0] is exactly 0
};

AxisOrder order_axis(const PointList1D& points) {
  const std::vector<QuadNum>& xs = points.points();
  const std::size_t n = xs.size();
  AxisOrder axis;
  axis.order.resize(n);
  std::iota(axis.order.begin(), axis.order.end(), std::size_t{0});
  std::sort(axis.order.begin(), axis.order.end(),
            [&](std::size_t i, std::size_t j) { return compare(xs[i], xs[j]) < 0; });

  axis.sorted.reserve(n);
  axis.rank.assign(n, 0);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t idx = axis.order[pos];
    axis.sorted.push_back(points.shadow()[idx]);
    if (pos == 0 || xs[axis.order[pos - 1]] != xs[idx]) {
      axis.distinct.push_back(points.shadow()[idx]);
      axis.below.push_back(pos);
    }
    axis.rank[idx] = axis.distinct.size() - 1;
  }
  axis.below.push_back(n);
  axis.has_zero = n > 0 && xs[axis.order[0]].is_zero();
  return axis;
}

void require_nonempty(std::size_t n) {
  if (n == 0) throw std::invalid_argument("discrepancy of an empty point set is undefined");
}

double inv(std::size_t n) { return 1.0 / static_cast<double>(n); }

DiscrepancyReport extreme_formula(const AxisOrder& axis, std::size_t n) {
  const double scale = inv(n);
  std::size_t i_max = 0;
  std::size_t i_min = 0;
  double u_max = -2.0;
  double u_min = 2.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = static_cast<double>(i + 1) * scale - axis.sorted[i];
    if (u > u_max) { u_max = u; i_max = i; }
    if (u < u_min) { u_min = u; i_min = i; }
  }
  DiscrepancyReport report;
  report.n = n;
  report.kind = DiscrepancyKind::extreme;
  report.method = Method::formula;
  report.value = scale + u_max - u_min;
  if (i_max >= i_min) {
    // points i_min..i_max with both ends included
    report.witness = {axis.sorted[i_min], axis.sorted[i_max], 0.0, 1.0, i_max - i_min + 1};
  } else {
    // open gap strictly between the two points
    report.witness = {axis.sorted[i_max], axis.sorted[i_min], 0.0, 1.0, i_min - i_max - 1};
  }
  return report;
}

// Exhaustive scan over candidate endpoints {0} U points U {1}.
DiscrepancyReport critical_scan_1d(const AxisOrder& axis, std::size_t n, DiscrepancyKind kind) {
  const std::size_t m = axis.distinct.size();
  const double scale = inv(n);

  // Candidate c in [0, m] is distinct[c] (c < m) or 1 (c == m); candidate
  // "origin" is 0.
  auto value_at = [&](std::size_t c) { return c < m ? axis.distinct[c] : 1.0; };
  auto lt = [&](std::size_t c) { return c < m ? axis.below[c] : n; };
  auto le = [&](std::size_t c) { return c < m ? axis.below[c + 1] : n; };
  const std::size_t lt_origin = 0;
  const std::size_t le_origin = axis.has_zero ? axis.below[1] : 0;

  DiscrepancyReport report;
  report.n = n;
  report.kind = kind;
  report.method = Method::brute_force;
  report.value = -1.0;

  auto consider = [&](double lo, double hi, std::size_t count, bool excess) {
    const double length = hi - lo;
    const double v = excess ? static_cast<double>(count) * scale - length
                            : length - static_cast<double>(count) * scale;
    if (v > report.value) {
      report.value = v;
      report.witness = {lo, hi, 0.0, 1.0, count};
    }
  };

  for (std::size_t b = 0; b <= m; ++b) {
    const double hi = value_at(b);
    // Intervals starting at the origin: [0, hi] and [0, hi[.
    consider(0.0, hi, le(b) - lt_origin, true);
    consider(0.0, hi, lt(b) - lt_origin, false);
    if (kind == DiscrepancyKind::star) continue;
    // Open-at-origin variant ]0, hi[ excludes a point sitting at 0.
    if (lt(b) >= le_origin) consider(0.0, hi, lt(b) - le_origin, false);
    for (std::size_t a = 0; a <= b && a < m; ++a) {
      const double lo = value_at(a);
      consider(lo, hi, le(b) - lt(a), true);
      if (a < b) consider(lo, hi, lt(b) - le(a), false);
    }
  }
  return report;
}

bool run_extreme_validation() {
  std::mt19937_64 rng(0x5eed1234ULL);
  std::vector<std::vector<Rational>> battery = {
      {Rational(1, 2)},
      {Rational(1, 4), Rational(3, 4)},
      {Rational(0), Rational(0), Rational(1, 3)},
      {Rational(0), Rational(1, 7), Rational(2, 7), Rational(6, 7)},
  };
  for (int trial = 0; trial < 24; ++trial) {
    std::uniform_int_distribution<int> size_dist(1, 40);
    std::uniform_int_distribution<long> value_dist(0, 96);
    std::vector<Rational> values;
    const int size = size_dist(rng);
    for (int i = 0; i < size; ++i) values.emplace_back(value_dist(rng), 97);
    battery.push_back(std::move(values));
  }
  for (const auto& values : battery) {
    const PointList1D points = PointList1D::from_rationals(values);
    const AxisOrder axis = order_axis(points);
    const double formula = extreme_formula(axis, points.size()).value;
    const double scan = critical_scan_1d(axis, points.size(), DiscrepancyKind::extreme).value;
    if (std::abs(formula - scan) > 1e-12) return false;
  }
  return true;
}

}  // namespace

bool extreme_formula_validated() {
  static std::once_flag once;
  static bool ok = false;
  std::call_once(once, [] { ok = run_extreme_validation(); });
  return ok;
}

DiscrepancyReport star_disc_1d(const PointList1D& points) {
  const std::size_t n = points.size();
  require_nonempty(n);
  const AxisOrder axis = order_axis(points);
  const double scale = inv(n);

  DiscrepancyReport report;
  report.n = n;
  report.kind = DiscrepancyKind::star;
  report.method = Method::formula;
  report.value = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = axis.sorted[i];
    const double excess = static_cast<double>(i + 1) * scale - x;  // [0, x] holds i+1 points
    const double deficit = x - static_cast<double>(i) * scale;     // [0, x[ holds i points
    if (excess > report.value) {
      report.value = excess;
      report.witness = {0.0, x, 0.0, 1.0, i + 1};
    }
    if (deficit > report.value) {
      report.value = deficit;
      report.witness = {0.0, x, 0.0, 1.0, i};
    }
  }
  return report;
}

DiscrepancyReport extreme_disc_1d(const PointList1D& points) {
  const std::size_t n = points.size();
  require_nonempty(n);
  const AxisOrder axis = order_axis(points);
  if (!extreme_formula_validated()) {
    DiscrepancyReport report = critical_scan_1d(axis, n, DiscrepancyKind::extreme);
    report.method = Method::grid_scan;
    return report;
  }
  return extreme_formula(axis, n);
}

DiscrepancyReport brute_force_1d(const PointList1D& points, DiscrepancyKind kind) {
  const std::size_t n = points.size();
  require_nonempty(n);
  if (n > kBruteForce1dLimit) {
    throw ResourceLimitError("brute-force 1D discrepancy is limited to " +
                             std::to_string(kBruteForce1dLimit) + " points");
  }
  return critical_scan_1d(order_axis(points), n, kind);
}

DiscrepancyReport star_disc_2d(const PointList2D& points) {
  const std::size_t n = points.size();
  require_nonempty(n);
  if (n > kStar2dLimit) {
    throw ResourceLimitError("2D star discrepancy is limited to " + std::to_string(kStar2dLimit) +
                             " points");
  }
  const AxisOrder ax = order_axis(points.x());
  const AxisOrder ay = order_axis(points.y());
  const std::size_t mx = ax.distinct.size();
  const std::size_t my = ay.distinct.size();
  const double scale = inv(n);

  // Point indices grouped by x rank.
  std::vector<std::vector<std::size_t>> by_x(mx);
  for (std::size_t i = 0; i < n; ++i) by_x[ax.rank[i]].push_back(i);

  std::vector<std::uint32_t> open_cnt(my, 0);   // per y rank, points with x < a
  std::vector<std::uint32_t> extra_cnt(my, 0);  // per y rank, points with x == a

  DiscrepancyReport report;
  report.n = n;
  report.kind = DiscrepancyKind::star;
  report.method = Method::grid_scan;
  report.dimension = 2;
  report.value = -1.0;

  for (std::size_t k = 0; k <= mx; ++k) {
    const double a = k < mx ? ax.distinct[k] : 1.0;
    if (k < mx) {
      for (std::size_t i : by_x[k]) ++extra_cnt[ay.rank[i]];
    }
    std::size_t open_prefix = 0;    // x < a, y < b
    std::size_t closed_prefix = 0;  // x <= a, y <= b
    for (std::size_t m = 0; m <= my; ++m) {
      double b;
      std::size_t open_count;
      std::size_t closed_count;
      if (m < my) {
        b = ay.distinct[m];
        open_count = open_prefix;
        closed_prefix += open_cnt[m] + extra_cnt[m];
        closed_count = closed_prefix;
        open_prefix += open_cnt[m];
      } else {
        b = 1.0;
        open_count = open_prefix;
        closed_count = closed_prefix;
      }
      const double area = a * b;
      const double excess = static_cast<double>(closed_count) * scale - area;
      const double deficit = area - static_cast<double>(open_count) * scale;
      if (excess > report.value) {
        report.value = excess;
        report.witness = {0.0, a, 0.0, b, closed_count};
      }
      if (deficit > report.value) {
        report.value = deficit;
        report.witness = {0.0, a, 0.0, b, open_count};
      }
    }
    if (k < mx) {
      for (std::size_t i : by_x[k]) {
        --extra_cnt[ay.rank[i]];
        ++open_cnt[ay.rank[i]];
      }
    }
  }
  return report;
}

}  // namespace lsqmc
