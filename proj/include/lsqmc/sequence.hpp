#pragma once

// LS-sequences of points: an integer n is admissible when its base-(L+S)
// expansion never puts a digit >= L directly below a nonzero digit. The
// admissible integers, taken in increasing order (0 first), are mapped to
// [0,1[ by a radical-inverse style digit map with weights g^(k+1).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lsqmc/points.hpp"
#include "lsqmc/quadfield.hpp"

namespace lsqmc {

/// Little-endian base-(L+S) digits; empty for 0.
struct DigitVector {
  LSParams params;
  std::vector<unsigned> digits;

  static DigitVector from_integer(LSParams params, std::uint64_t n);
  std::uint64_t value() const;
};

bool is_admissible(const DigitVector& v);
bool is_admissible(LSParams params, std::uint64_t n);

/// First `count` elements of {0} together with the admissible positive
/// integers, increasing.
std::vector<std::uint64_t> admissible_indices(LSParams params, std::size_t count);

/// Evaluates the digit map with cached powers of g. Immutable once built.
class PhiMap {
 public:
  explicit PhiMap(LSParams params, unsigned max_digits = 64);

  /// Throws std::invalid_argument for inadmissible n.
  QuadNum operator()(std::uint64_t n) const;

  LSParams params() const noexcept { return params_; }

 private:
  LSParams params_;
  std::vector<QuadNum> powers_;  // g^0 .. g^(max_digits+1)
};

QuadNum phi(LSParams params, std::uint64_t n);

/// (xi_1, ..., xi_count): the digit map applied to admissible_indices.
PointList1D sequence_prefix(LSParams params, std::size_t count);

}  // namespace lsqmc
