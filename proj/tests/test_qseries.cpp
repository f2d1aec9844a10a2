#include "klein/qseries.hpp"

#include "klein/oracle.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace klein;

namespace {

QSeries<BigInt> zseries(std::vector<long long> coeffs) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return QSeries<BigInt>(static_cast<int>(coeffs.size()) - 1, std::move(c));
}

QSeries<BigInt> random_series(int order, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(-9, 9);
  std::vector<BigInt> c;
  for (int i = 0; i <= order; ++i) c.emplace_back(d(rng));
  return QSeries<BigInt>(order, std::move(c));
}

}  // namespace

TEST_CASE("series construction checks") {
  CHECK_THROWS(QSeries<BigInt>(2, {BigInt(1)}));
  CHECK(QSeries<BigInt>::constant(BigInt(5), 3).coefficient(0) == 5);
  CHECK(QSeries<BigInt>::constant(BigInt(5), 3).coefficient(3) == 0);
}

TEST_CASE("multiplication basics") {
  auto one_plus = zseries({1, 1, 0});
  auto one_minus = zseries({1, -1, 0});
  CHECK(one_plus * one_minus == zseries({1, 0, -1}));

  auto a = zseries({3, -2, 7, 1});
  CHECK(a * QSeries<BigInt>::constant(BigInt(1), 3) == a);

  // geometric series times (1 - q) telescopes
  auto geo = zseries({1, 1, 1, 1, 1, 1});
  auto inv = zseries({1, -1, 0, 0, 0, 0});
  CHECK(geo * inv == zseries({1, 0, 0, 0, 0, 0}));
}

TEST_CASE("multiplication truncates to the shorter input") {
  auto a = zseries({1, 2, 3, 4, 5});
  auto b = zseries({1, 1});
  CHECK((a * b).truncation() == 1);
  CHECK((a * b) == zseries({1, 3}));
}

TEST_CASE("Euler factors against the partition oracle") {
  auto e1 = euler_factor_inverse_power(1, 6);
  CHECK(e1 == zseries({1, 1, 2, 3, 5, 7, 11}));
  for (int k = 0; k <= 6; ++k) CHECK(e1.coefficient(k) == oracle::count_partitions(k));

  auto e2 = euler_factor_inverse_power(2, 4);
  CHECK(e2 == zseries({1, 2, 5, 10, 20}));

  CHECK(euler_factor_inverse_power(0, 5) == zseries({1, 0, 0, 0, 0, 0}));

  for (int e = 0; e <= 3; ++e)
    for (int k = 0; k <= 10; ++k)
      CHECK(euler_factor_inverse_power(e, 10).coefficient(k) ==
            oracle::count_colored_partitions(k, e));
}

TEST_CASE("smooth surface series") {
  CHECK(smooth_surface_series(1, 5) == zseries({1, 1, 2, 3, 5, 7}));
  CHECK(smooth_surface_series(0, 5) == zseries({1, 0, 0, 0, 0, 0}));
  // pentagonal-number expansion of prod (1-q^m)
  CHECK(smooth_surface_series(-1, 5) == zseries({1, -1, -1, 0, 0, 1}));
  CHECK(smooth_surface_series(-1, 12) ==
        zseries({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
}

TEST_CASE("exponent additivity of the surface series") {
  for (int a = -2; a <= 3; ++a)
    for (int b = -2; b <= 3; ++b)
      CHECK(smooth_surface_series(a + b, 14) ==
            smooth_surface_series(a, 14) * smooth_surface_series(b, 14));
}

TEST_CASE("smooth curve series") {
  CHECK(smooth_curve_series(2, 3) == zseries({1, 2, 3, 4}));
  CHECK(smooth_curve_series(0, 3) == zseries({1, 0, 0, 0}));
  CHECK(smooth_curve_series(-2, 3) == zseries({1, -2, 1, 0}));
}

TEST_CASE("mul is associative and commutative") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 30; ++iter) {
    auto a = random_series(8, rng);
    auto b = random_series(8, rng);
    auto c = random_series(8, rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("promotion and demotion round trip") {
  auto a = zseries({1, 1, 0, 4});
  auto up = promote_to_cyclotomic(a, 3);
  CHECK(demote_to_integer(up) == a);
}

TEST_CASE("demotion failure reports the offending degree") {
  auto up = promote_to_cyclotomic(zseries({1, 1, 2}), 3);
  // corrupt degree 1 with a genuinely irrational coefficient
  std::vector<CyclotomicInteger> coeffs = up.coefficients();
  coeffs[1] += zeta_power(3, 1);
  auto bad = QSeries<CyclotomicInteger>(2, std::move(coeffs));
  auto result = try_demote_to_integer(bad);
  CHECK(!result.ok());
  CHECK(result.first_failure_degree == 1);
  REQUIRE(result.offending_coefficient.has_value());
  CHECK_THROWS_AS(demote_to_integer(bad), IntegralityViolationError);
  try {
    demote_to_integer(bad);
  } catch (const IntegralityViolationError& e) {
    CHECK(e.degree() == 1);
  }
}

TEST_CASE("demotion accepts a vanishing cyclotomic combination") {
  // coefficient zeta + zeta^2 + 1 = 0 at q^2 demotes to 0
  auto up = promote_to_cyclotomic(zseries({1, 1, 0}), 3);
  std::vector<CyclotomicInteger> coeffs = up.coefficients();
  coeffs[2] += CyclotomicInteger(3, BigInt(1)) + zeta_power(3, 1) + zeta_power(3, 2);
  auto result = try_demote_to_integer(QSeries<CyclotomicInteger>(2, std::move(coeffs)));
  REQUIRE(result.ok());
  CHECK(result.series->coefficient(2) == 0);
}

TEST_CASE("cyclotomic series with mismatched orders are rejected") {
  auto a = promote_to_cyclotomic(zseries({1, 1}), 3);
  auto b = promote_to_cyclotomic(zseries({1, 1}), 7);
  CHECK_THROWS_AS(a * b, IncompatibleRingError);
  CHECK_THROWS_AS(a + b, IncompatibleRingError);
}

TEST_CASE("coefficients exceed 64 bits without loss") {
  auto big = euler_factor_inverse_power(9, 60);
  CHECK(big.coefficient(60) > BigInt("9223372036854775807"));  // > int64 max
  CHECK(big.coefficient(60) == oracle::count_colored_partitions(60, 9));
}
