#include "lsqmc/quadfield.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lsqmc {

namespace {

constexpr mp_bitcnt_t kFloatBits = 256;

std::int64_t isqrt(std::int64_t n) {
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), BigInt(static_cast<long>(n)).get_mpz_t());
  return root.get_si();
}

// value = a + b*sqrt(d), evaluated in 256-bit binary floating point.
double sqrt_expr_to_double(const Rational& a, const Rational& b, std::int64_t d) {
  mpf_class fa(a, kFloatBits);
  mpf_class fb(b, kFloatBits);
  mpf_class root(static_cast<long>(d), kFloatBits);
  root = sqrt(root);
  mpf_class v(fa + fb * root, kFloatBits);
  return v.get_d();
}

std::string rational_string(const Rational& r) { return r.get_str(); }

}  // namespace

struct LSParams::Data {
  std::int64_t long_count;
  std::int64_t short_count;
  std::int64_t disc;
  std::int64_t squarefree;
  std::int64_t root_factor;
  bool rational;
  Rational gamma_rational;
  double gamma_float;
};

LSParams LSParams::make(std::int64_t long_count, std::int64_t short_count) {
  if (long_count < 1 || short_count < 1 || long_count > kMaxComponent ||
      short_count > kMaxComponent) {
    throw std::invalid_argument("LS parameters must satisfy 1 <= L, S <= 2^20 (got " +
                                std::to_string(long_count) + "," +
                                std::to_string(short_count) + ")");
  }

  static std::mutex mutex;
  static std::map<std::pair<std::int64_t, std::int64_t>, std::unique_ptr<const Data>> registry;

  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(long_count, short_count);
  if (auto it = registry.find(key); it != registry.end()) return LSParams(it->second.get());

  auto data = std::make_unique<Data>();
  data->long_count = long_count;
  data->short_count = short_count;
  data->disc = long_count * long_count + 4 * short_count;

  // disc = f^2 * d with d squarefree.
  std::int64_t rest = data->disc;
  std::int64_t factor = 1;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      factor *= p;
    }
  }
  data->squarefree = rest;
  data->root_factor = factor;
  data->rational = (rest == 1);

  const std::int64_t root = isqrt(data->disc);
  if (data->rational != (root * root == data->disc)) {
    throw std::logic_error("squarefree decomposition disagrees with integer square root");
  }
  if (data->rational) {
    data->gamma_rational = Rational(root - long_count, 2 * short_count);
    data->gamma_rational.canonicalize();
  }
  data->gamma_float = sqrt_expr_to_double(Rational(-long_count, 2 * short_count),
                                          Rational(factor, 2 * short_count), data->squarefree);

  const Data* raw = data.get();
  registry.emplace(key, std::move(data));
  return LSParams(raw);
}

LSParams make_params(std::int64_t long_count, std::int64_t short_count) {
  return LSParams::make(long_count, short_count);
}

std::int64_t LSParams::long_count() const noexcept { return data_->long_count; }
std::int64_t LSParams::short_count() const noexcept { return data_->short_count; }
std::int64_t LSParams::base() const noexcept { return data_->long_count + data_->short_count; }
std::int64_t LSParams::disc() const noexcept { return data_->disc; }
std::int64_t LSParams::squarefree_part() const noexcept { return data_->squarefree; }
std::int64_t LSParams::root_factor() const noexcept { return data_->root_factor; }
bool LSParams::rational_gamma() const noexcept { return data_->rational; }
const Rational& LSParams::gamma_rational() const noexcept { return data_->gamma_rational; }
double LSParams::gamma_float() const noexcept { return data_->gamma_float; }

std::string LSParams::to_string() const {
  return std::to_string(long_count()) + "," + std::to_string(short_count());
}

// ---------------------------------------------------------------------------
// SqrtNum

SqrtNum::SqrtNum(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ < 1) throw std::invalid_argument("SqrtNum radicand must be positive");
  normalize();
}

void SqrtNum::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
}

int SqrtNum::sign() const { return sign_of_sqrt_expr(a_, b_, d_); }

double SqrtNum::to_double() const { return sqrt_expr_to_double(a_, b_, d_); }

std::string SqrtNum::to_string() const {
  return rational_string(a_) + " + " + rational_string(b_) + "*sqrt(" + std::to_string(d_) + ")";
}

static void require_same_radicand(const SqrtNum& x, const SqrtNum& y) {
  if (x.d() != y.d()) throw std::invalid_argument("SqrtNum operands live in different fields");
}

SqrtNum operator+(const SqrtNum& x, const SqrtNum& y) {
  require_same_radicand(x, y);
  return SqrtNum(x.a_ + y.a_, x.b_ + y.b_, x.d_);
}

SqrtNum operator-(const SqrtNum& x, const SqrtNum& y) {
  require_same_radicand(x, y);
  return SqrtNum(x.a_ - y.a_, x.b_ - y.b_, x.d_);
}

SqrtNum operator*(const SqrtNum& x, const SqrtNum& y) {
  require_same_radicand(x, y);
  Rational a = x.a_ * y.a_ + x.b_ * y.b_ * Rational(x.d_);
  Rational b = x.a_ * y.b_ + x.b_ * y.a_;
  return SqrtNum(std::move(a), std::move(b), x.d_);
}

bool operator==(const SqrtNum& x, const SqrtNum& y) {
  return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
}

int sign_of_sqrt_expr(const Rational& a, const Rational& b, std::int64_t d) {
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (d == 1) return sgn(Rational(a + b));
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(d), decided by a^2 vs b^2*d. Equality is
  // impossible because d is squarefree and > 1.
  const int cmp_sq = cmp(Rational(a * a), Rational(b * b * Rational(d)));
  return cmp_sq > 0 ? sa : sb;
}

// ---------------------------------------------------------------------------
// QuadNum

QuadNum::QuadNum(LSParams params, Rational rational_part, Rational gamma_coeff)
    : p_(std::move(rational_part)), q_(std::move(gamma_coeff)), params_(params) {
  p_.canonicalize();
  q_.canonicalize();
  fold_rational();
}

QuadNum QuadNum::gamma(LSParams params) { return QuadNum(params, 0, 1); }

void QuadNum::fold_rational() {
  if (params_.rational_gamma() && sgn(q_) != 0) {
    p_ += q_ * params_.gamma_rational();
    q_ = 0;
  }
}

static void require_same_params(const QuadNum& x, const QuadNum& y) {
  if (!(x.params() == y.params())) {
    throw std::invalid_argument("QuadNum operands use different LS parameters (" +
                                x.params().to_string() + " vs " + y.params().to_string() + ")");
  }
}

QuadNum QuadNum::operator-() const { return QuadNum(params_, -p_, -q_); }

QuadNum& QuadNum::operator+=(const QuadNum& y) {
  require_same_params(*this, y);
  p_ += y.p_;
  q_ += y.q_;
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& y) {
  require_same_params(*this, y);
  p_ -= y.p_;
  q_ -= y.q_;
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& y) {
  require_same_params(*this, y);
  // (p1 + q1 g)(p2 + q2 g) with g^2 = (1 - L g) / S
  const Rational qq = q_ * y.q_;
  const Rational shorts(params_.short_count());
  const Rational longs(params_.long_count());
  Rational p = p_ * y.p_ + qq / shorts;
  Rational q = p_ * y.q_ + q_ * y.p_ - longs * qq / shorts;
  p_ = std::move(p);
  q_ = std::move(q);
  fold_rational();
  return *this;
}

int QuadNum::sign() const {
  // p + q g = ((2Sp - qL) + q f sqrt(d)) / (2S)
  const Rational two_s(2 * params_.short_count());
  Rational a = two_s * p_ - q_ * Rational(params_.long_count());
  Rational b = q_ * Rational(params_.root_factor());
  return sign_of_sqrt_expr(a, b, params_.squarefree_part());
}

double QuadNum::to_double() const {
  const SqrtNum s = to_sqrt_form(*this);
  return s.to_double();
}

std::string QuadNum::to_string() const {
  return rational_string(p_) + " + " + rational_string(q_) + "*g";
}

bool operator==(const QuadNum& x, const QuadNum& y) {
  require_same_params(x, y);
  return x.p_ == y.p_ && x.q_ == y.q_;
}

std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y) { return compare(x, y); }

std::strong_ordering compare(const QuadNum& x, const QuadNum& y) {
  require_same_params(x, y);
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

QuadNum pow(const QuadNum& x, unsigned exponent) {
  QuadNum result(x.params(), 1, 0);
  QuadNum base = x;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::vector<QuadNum> gamma_powers(LSParams params, unsigned max_exponent) {
  std::vector<QuadNum> powers;
  powers.reserve(max_exponent + 1);
  powers.emplace_back(params, 1, 0);
  const QuadNum g = QuadNum::gamma(params);
  for (unsigned k = 1; k <= max_exponent; ++k) powers.push_back(powers.back() * g);
  return powers;
}

SqrtNum to_sqrt_form(const QuadNum& x) {
  const LSParams params = x.params();
  // g = (-L + f sqrt(d)) / (2S)
  const Rational two_s(2 * params.short_count());
  Rational a = x.rational_part() - x.gamma_coeff() * Rational(params.long_count()) / two_s;
  Rational b = x.gamma_coeff() * Rational(params.root_factor()) / two_s;
  return SqrtNum(std::move(a), std::move(b), params.squarefree_part());
}

std::ostream& operator<<(std::ostream& os, const LSParams& params) {
  return os << "(" << params.to_string() << ")";
}

std::ostream& operator<<(std::ostream& os, const QuadNum& x) { return os << x.to_string(); }

std::ostream& operator<<(std::ostream& os, const SqrtNum& x) { return os << x.to_string(); }

}  // namespace lsqmc
