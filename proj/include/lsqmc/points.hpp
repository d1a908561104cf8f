#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lsqmc/quadfield.hpp"

namespace lsqmc {

/// Ordered points of [0,1[ with exact coordinates and a double shadow.
class PointList1D {
 public:
  PointList1D(LSParams params, std::vector<QuadNum> points);

  /// Rational points carried as QuadNum with zero g-coefficient.
  static PointList1D from_rationals(const std::vector<Rational>& values);

  LSParams params() const noexcept { return params_; }
  const std::vector<QuadNum>& points() const noexcept { return points_; }
  const std::vector<double>& shadow() const noexcept { return shadow_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  /// First n points (n clamped to size()).
  PointList1D prefix(std::size_t n) const;

 private:
  LSParams params_;
  std::vector<QuadNum> points_;
  std::vector<double> shadow_;
};

enum class Construction { van_der_corput, halton, generic };

/// Ordered points of [0,1[^2, stored per axis. Each axis is exact in its own
/// field; x_params() and y_params() name those fields.
class PointList2D {
 public:
  /// Throws std::invalid_argument when the axes differ in length.
  PointList2D(Construction kind, PointList1D xs, PointList1D ys);

  Construction kind() const noexcept { return kind_; }
  LSParams x_params() const noexcept { return x_.params(); }
  LSParams y_params() const noexcept { return y_.params(); }
  const PointList1D& x() const noexcept { return x_; }
  const PointList1D& y() const noexcept { return y_; }
  std::size_t size() const noexcept { return x_.size(); }
  bool empty() const noexcept { return x_.empty(); }

  std::pair<double, double> point(std::size_t i) const {
    return {x_.shadow()[i], y_.shadow()[i]};
  }

 private:
  Construction kind_;
  PointList1D x_;
  PointList1D y_;
};

/// Carrier params for rational-only point sets; g never appears.
LSParams rational_carrier();

}  // namespace lsqmc
