#include "lsqmc/points.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsqmc {

PointList1D::PointList1D(LSParams params, std::vector<QuadNum> points)
    : params_(params), points_(std::move(points)) {
  shadow_.reserve(points_.size());
  const QuadNum one(params_, 1, 0);
  for (const QuadNum& x : points_) {
    if (!(x.params() == params_)) {
      throw std::invalid_argument("point list mixes LS parameters");
    }
    if (x.sign() < 0 || compare(x, one) != std::strong_ordering::less) {
      throw std::invalid_argument("point " + x.to_string() + " lies outside [0,1[");
    }
    shadow_.push_back(x.to_double());
  }
}

PointList1D PointList1D::from_rationals(const std::vector<Rational>& values) {
  const LSParams carrier = rational_carrier();
  std::vector<QuadNum> points;
  points.reserve(values.size());
  for (const Rational& v : values) points.emplace_back(carrier, v, 0);
  return PointList1D(carrier, std::move(points));
}

PointList1D PointList1D::prefix(std::size_t n) const {
  n = std::min(n, points_.size());
  PointList1D out = *this;
  out.points_.resize(n, QuadNum(params_));
  out.shadow_.resize(n);
  return out;
}

PointList2D::PointList2D(Construction kind, PointList1D xs, PointList1D ys)
    : kind_(kind), x_(std::move(xs)), y_(std::move(ys)) {
  if (x_.size() != y_.size()) {
    throw std::invalid_argument("2D point list axes differ in length");
  }
}

LSParams rational_carrier() {
  // (1,2) has g = 1/2, so every element folds to a plain rational.
  return make_params(1, 2);
}

}  // namespace lsqmc
