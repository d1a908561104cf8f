#pragma once

// Exact arithmetic in the real quadratic field Q(g), where g is the positive
// root of  L*g + S*g^2 = 1.  Elements are stored as p + q*g with arbitrary
// precision rationals; products are reduced with g^2 = (1 - L*g) / S so that
// the representation stays canonical.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lsqmc {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parameter pair (L, S) of an LS construction together with the derived
/// constants of its scaling ratio g.
///
/// Instances are interned: two handles made from the same pair share one
/// immutable record, so copying is free and equality is identity.
class LSParams {
 public:
  /// Largest accepted L or S.
  static constexpr std::int64_t kMaxComponent = std::int64_t{1} << 20;

  /// Throws std::invalid_argument if L or S is outside [1, kMaxComponent].
  static LSParams make(std::int64_t long_count, std::int64_t short_count);

  std::int64_t long_count() const noexcept;
  std::int64_t short_count() const noexcept;
  std::int64_t base() const noexcept;  // L + S
  std::int64_t disc() const noexcept;  // L^2 + 4S

  // disc = root_factor^2 * squarefree_part
  std::int64_t squarefree_part() const noexcept;
  std::int64_t root_factor() const noexcept;

  /// True when disc is a perfect square, i.e. g is rational and Q(g) = Q.
  bool rational_gamma() const noexcept;
  /// Exact value of g when rational_gamma(); zero otherwise.
  const Rational& gamma_rational() const noexcept;

  /// Nearest double to g. Display only.
  double gamma_float() const noexcept;

  std::string to_string() const;  // "L,S"

  friend bool operator==(const LSParams& a, const LSParams& b) noexcept {
    return a.data_ == b.data_;
  }

 private:
  struct Data;
  explicit LSParams(const Data* data) noexcept : data_(data) {}
  const Data* data_;
};

LSParams make_params(std::int64_t long_count, std::int64_t short_count);

/// a + b*sqrt(d) with d squarefree; d == 1 means the value is rational and b
/// is folded into a, so equality is componentwise.
class SqrtNum {
 public:
  SqrtNum(Rational a, Rational b, std::int64_t d);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  std::int64_t d() const noexcept { return d_; }

  int sign() const;
  double to_double() const;
  std::string to_string() const;

  friend SqrtNum operator+(const SqrtNum& x, const SqrtNum& y);
  friend SqrtNum operator-(const SqrtNum& x, const SqrtNum& y);
  friend SqrtNum operator*(const SqrtNum& x, const SqrtNum& y);
  friend bool operator==(const SqrtNum& x, const SqrtNum& y);

 private:
  void normalize();

  Rational a_;
  Rational b_;
  std::int64_t d_;
};

/// Element p + q*g of Q(g).
class QuadNum {
 public:
  explicit QuadNum(LSParams params, Rational rational_part = 0, Rational gamma_coeff = 0);

  static QuadNum gamma(LSParams params);

  const Rational& rational_part() const noexcept { return p_; }
  const Rational& gamma_coeff() const noexcept { return q_; }
  LSParams params() const noexcept { return params_; }

  bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
  int sign() const;

  double to_double() const;
  std::string to_string() const;  // "p + q*g"

  QuadNum operator-() const;
  QuadNum& operator+=(const QuadNum& y);
  QuadNum& operator-=(const QuadNum& y);
  QuadNum& operator*=(const QuadNum& y);

  friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
  friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
  friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }

  /// Throws std::invalid_argument on mismatched params.
  friend bool operator==(const QuadNum& x, const QuadNum& y);
  friend std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y);

 private:
  void fold_rational();

  Rational p_;
  Rational q_;
  LSParams params_;
};

/// Exact three-way comparison; never consults floating point.
std::strong_ordering compare(const QuadNum& x, const QuadNum& y);

QuadNum pow(const QuadNum& x, unsigned exponent);

/// g^0, g^1, ..., g^max_exponent.
std::vector<QuadNum> gamma_powers(LSParams params, unsigned max_exponent);

/// Rewrites p + q*g as a + b*sqrt(d), d the squarefree part of L^2 + 4S.
SqrtNum to_sqrt_form(const QuadNum& x);

/// Sign of a + b*sqrt(d) for squarefree d >= 1, exact.
int sign_of_sqrt_expr(const Rational& a, const Rational& b, std::int64_t d);

std::ostream& operator<<(std::ostream& os, const LSParams& params);
std::ostream& operator<<(std::ostream& os, const QuadNum& x);
std::ostream& operator<<(std::ostream& os, const SqrtNum& x);

}  // namespace lsqmc
