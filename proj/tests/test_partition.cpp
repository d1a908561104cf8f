#include <doctest.h>

#include <cstdlib>
#include <set>
#include <stdexcept>

#include "lsqmc/partition.hpp"

using namespace lsqmc;

namespace {

QuadNum length_of(const Interval& interval, const std::vector<QuadNum>& powers) {
  return powers.at(static_cast<std::size_t>(interval.len_exp));
}

// Exact tiling of [0,1[: first left 0, consecutive lefts differ by the
// interval length, last right endpoint 1.
void check_tiling(const LSPartition& part) {
  const LSParams params = part.params();
  const auto powers = gamma_powers(params, static_cast<unsigned>(part.level() + 1));
  const auto& ivs = part.intervals();
  REQUIRE(!ivs.empty());
  CHECK(ivs.front().left.is_zero());
  QuadNum total(params);
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    CHECK((ivs[i].len_exp == part.level() || ivs[i].len_exp == part.level() + 1));
    const QuadNum right = ivs[i].left + length_of(ivs[i], powers);
    if (i + 1 < ivs.size()) CHECK(right == ivs[i + 1].left);
    total += length_of(ivs[i], powers);
  }
  CHECK(ivs.back().left + length_of(ivs.back(), powers) == QuadNum(params, 1, 0));
  CHECK(total == QuadNum(params, 1, 0));
}

}  // namespace

TEST_CASE("refine examples over (1,1)") {
  const LSParams params = make_params(1, 1);
  const QuadNum g = QuadNum::gamma(params);
  const LSPartition level0(params);
  REQUIRE(level0.size() == 1);
  CHECK(level0.intervals()[0].left.is_zero());
  CHECK(level0.intervals()[0].len_exp == 0);

  const LSPartition level1 = refine(level0);
  REQUIRE(level1.size() == 2);
  CHECK(level1.level() == 1);
  CHECK(level1.intervals()[0].left.is_zero());
  CHECK(level1.intervals()[0].len_exp == 1);
  CHECK(level1.intervals()[1].left == g);
  CHECK(level1.intervals()[1].len_exp == 2);

  const LSPartition level2 = refine(level1);
  REQUIRE(level2.size() == 3);
  CHECK(level2.intervals()[0].left.is_zero());
  CHECK(level2.intervals()[1].left == g * g);
  CHECK(level2.intervals()[2].left == g);
  // [g^2, g[ has length g^3 = g - g^2
  CHECK(level2.intervals()[1].len_exp == 3);
  CHECK(g - g * g == g * g * g);
  check_tiling(level2);
}

TEST_CASE("refine of (2,1) level 0") {
  const LSParams params = make_params(2, 1);
  const QuadNum g = QuadNum::gamma(params);
  const LSPartition level1 = refine(LSPartition(params));
  REQUIRE(level1.size() == 3);
  CHECK(level1.intervals()[0].left.is_zero());
  CHECK(level1.intervals()[1].left == g);
  CHECK(level1.intervals()[2].left == g + g);
  CHECK(level1.long_count() == 2);
  CHECK(level1.short_count() == 1);
  CHECK(params.gamma_float() == doctest::Approx(0.41421356).epsilon(1e-8));
}

TEST_CASE("partition_at sizes") {
  CHECK(partition_at(make_params(1, 1), 3).size() == 5);
  CHECK(partition_at(make_params(4, 1), 2).size() == 21);
  for (long l = 1; l <= 3; ++l) {
    const LSPartition p = partition_at(make_params(l, 2), 0);
    REQUIRE(p.size() == 1);
    CHECK(p.intervals()[0].left.is_zero());
  }
  CHECK_THROWS_AS(partition_at(make_params(1, 1), -1), std::invalid_argument);
}

TEST_CASE("partition_at honours the interval cap") {
  // t_20 for (1,1) is 17711
  CHECK_THROWS_AS(partition_at(make_params(1, 1), 20, 10000), ResourceLimitError);
  CHECK(partition_at(make_params(1, 1), 20, 17711).size() == 17711);
}

TEST_CASE("LSQMC_MAX_INTERVALS overrides the default cap") {
  CHECK(default_max_intervals() == 1000000);
  setenv("LSQMC_MAX_INTERVALS", "50", 1);
  CHECK(default_max_intervals() == 50);
  CHECK_THROWS_AS(partition_at(make_params(1, 1), 10), ResourceLimitError);
  setenv("LSQMC_MAX_INTERVALS", "junk", 1);
  CHECK(default_max_intervals() == 1000000);
  unsetenv("LSQMC_MAX_INTERVALS");
}

TEST_CASE("left endpoints") {
  const LSParams params = make_params(1, 1);
  const QuadNum g = QuadNum::gamma(params);
  const PointList1D two = left_endpoints(partition_at(params, 2));
  REQUIRE(two.size() == 3);
  CHECK(two.points()[0].is_zero());
  CHECK(two.points()[1] == g * g);
  CHECK(two.points()[2] == g);
  const PointList1D zero = left_endpoints(partition_at(make_params(3, 2), 0));
  REQUIRE(zero.size() == 1);
  CHECK(zero.points()[0].is_zero());
  // level 3: 0, g^3, g^2, g, g + g^3
  const PointList1D three = left_endpoints(partition_at(params, 3));
  REQUIRE(three.size() == 5);
  CHECK(three.points()[1] == g * g * g);
  CHECK(three.points()[2] == g * g);
  CHECK(three.points()[3] == g);
  CHECK(three.points()[4] == g + g * g * g);
}

TEST_CASE("counts examples") {
  const CountSequence fib = counts(make_params(1, 1), 9);
  REQUIRE(fib.values.size() == 10);
  CHECK(fib.values.back() == 89);
  const CountSequence four_one = counts(make_params(4, 1), 3);
  CHECK(four_one.values == std::vector<BigInt>{1, 5, 21, 89});
  const CountSequence three_two = counts(make_params(3, 2), 2);
  CHECK(three_two.values == std::vector<BigInt>{1, 5, 17});
  CHECK(counts(make_params(2, 2), 0).values == std::vector<BigInt>{1});
}

TEST_CASE("tiling, counts and nesting for small parameters") {
  for (long l = 1; l <= 5; ++l) {
    for (long s = 1; s <= 5; ++s) {
      const LSParams params = make_params(l, s);
      CAPTURE(params.to_string());
      LSPartition part(params);
      std::set<std::pair<std::string, std::string>> previous{{"0", "0"}};
      for (int n = 1;; ++n) {
        const CountSequence t = counts(params, n);
        if (t.values.back() > 100000) break;
        part = refine(part);
        CHECK(BigInt(static_cast<unsigned long>(part.size())) == t.values.back());
        check_tiling(part);

        std::set<std::pair<std::string, std::string>> current;
        for (const Interval& iv : part.intervals()) {
          current.emplace(iv.left.rational_part().get_str(), iv.left.gamma_coeff().get_str());
        }
        for (const auto& endpoint : previous) CHECK(current.count(endpoint) == 1);
        previous = std::move(current);
      }
    }
  }
}
