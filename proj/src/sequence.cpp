#include "lsqmc/sequence.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "lsqmc/errors.hpp"

namespace lsqmc {

DigitVector DigitVector::from_integer(LSParams params, std::uint64_t n) {
  DigitVector v{params, {}};
  const auto base = static_cast<std::uint64_t>(params.base());
  while (n != 0) {
    v.digits.push_back(static_cast<unsigned>(n % base));
    n /= base;
  }
  return v;
}

std::uint64_t DigitVector::value() const {
  const auto base = static_cast<std::uint64_t>(params.base());
  std::uint64_t n = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) n = n * base + *it;
  return n;
}

bool is_admissible(const DigitVector& v) {
  const auto longs = static_cast<unsigned>(v.params.long_count());
  for (std::size_t k = 0; k + 1 < v.digits.size(); ++k) {
    if (v.digits[k] >= longs && v.digits[k + 1] >= 1) return false;
  }
  return true;
}

bool is_admissible(LSParams params, std::uint64_t n) {
  const auto base = static_cast<std::uint64_t>(params.base());
  const auto longs = static_cast<std::uint64_t>(params.long_count());
  while (n >= base) {
    const std::uint64_t low = n % base;
    n /= base;
    if (low >= longs && n % base >= 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> admissible_indices(LSParams params, std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint64_t n = 0; out.size() < count; ++n) {
    if (n == std::numeric_limits<std::uint64_t>::max()) {
      throw ResourceLimitError("admissible index enumeration overflowed 64 bits");
    }
    if (is_admissible(params, n)) out.push_back(n);
  }
  return out;
}

PhiMap::PhiMap(LSParams params, unsigned max_digits)
    : params_(params), powers_(gamma_powers(params, max_digits + 1)) {}

QuadNum PhiMap::operator()(std::uint64_t n) const {
  const DigitVector v = DigitVector::from_integer(params_, n);
  if (!is_admissible(v)) {
    throw std::invalid_argument(std::to_string(n) + " is not admissible for (" +
                                params_.to_string() + ")");
  }
  if (v.digits.size() + 1 >= powers_.size()) {
    throw std::invalid_argument("digit map built for too few digits");
  }
  const auto longs = static_cast<unsigned>(params_.long_count());
  QuadNum sum(params_);
  for (std::size_t k = 0; k < v.digits.size(); ++k) {
    const unsigned a = v.digits[k];
    if (a == 0) continue;
    if (a < longs) {
      sum += QuadNum(params_, a, 0) * powers_[k + 1];
    } else {
      // (L + g (a - L)) g^(k+1)
      sum += QuadNum(params_, longs, 0) * powers_[k + 1];
      if (a > longs) sum += QuadNum(params_, a - longs, 0) * powers_[k + 2];
    }
  }
  return sum;
}

QuadNum phi(LSParams params, std::uint64_t n) { return PhiMap(params)(n); }

PointList1D sequence_prefix(LSParams params, std::size_t count) {
  if (count == 0) throw std::invalid_argument("sequence prefix length must be at least 1");
  const std::vector<std::uint64_t> indices = admissible_indices(params, count);
  const DigitVector widest = DigitVector::from_integer(params, indices.back());
  const PhiMap map(params, static_cast<unsigned>(widest.digits.size()) + 1);
  std::vector<QuadNum> points;
  points.reserve(count);
  for (std::uint64_t n : indices) points.push_back(map(n));
  return PointList1D(params, std::move(points));
}

}  // namespace lsqmc
