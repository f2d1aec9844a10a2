#include "klein/zeta_series.hpp"

#include "klein/oracle.hpp"

#include <catch_amalgamated.hpp>

#include <vector>

using namespace klein;

namespace {

QSeries<BigInt> zseries(std::vector<long long> coeffs) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return QSeries<BigInt>(static_cast<int>(coeffs.size()) - 1, std::move(c));
}

}  // namespace

TEST_CASE("A1 local series: two independent routes") {
  auto r = local_series(DynkinType(Series::A, 1), 4);
  REQUIRE(r.certificate.ok);
  REQUIRE(r.series.has_value());

  // route (i): hand Cauchy product of (1,2,5,10,20) and (1,-1,0,0,-1)
  CHECK(*r.series == zseries({1, 1, 3, 5, 9}));

  // route (ii): the co-ideal counting oracle
  CHECK(*r.series == oracle::typeA_series_oracle(2, 4));
}

TEST_CASE("local series q^0 and q^1 coefficients are 1 for every type") {
  for (const char* name : {"A1", "A2", "A5", "D4", "D5", "E6", "E7", "E8"}) {
    auto r = local_series(DynkinType::parse(name), 1);
    REQUIRE(r.certificate.ok);
    INFO(name);
    CHECK(r.series->coefficient(0) == 1);
    CHECK(r.series->coefficient(1) == 1);
  }
}

TEST_CASE("type A local series match the fixed-point oracle") {
  for (int r = 2; r <= 4; ++r) {
    auto formula = local_series(DynkinType(Series::A, r - 1), 8);
    REQUIRE(formula.certificate.ok);
    INFO("r = " << r);
    CHECK(*formula.series == oracle::typeA_series_oracle(r, 8));
  }
}

TEST_CASE("integrality certificates at moderate order") {
  for (const char* name : {"A3", "D4", "D6", "E6", "E7"}) {
    auto r = local_series(DynkinType::parse(name), 25);
    INFO(name);
    CHECK(r.certificate.ok);
    CHECK(!r.cyclotomic_series.has_value());
  }
}

TEST_CASE("pre-demotion fault produces a failed certificate with the cyclotomic series") {
  LocalSeriesHooks hooks;
  hooks.pre_demotion = [](QSeries<CyclotomicInteger>& s) {
    std::vector<CyclotomicInteger> c = s.coefficients();
    c[2] += zeta_power(c[2].order(), 1);
    s = QSeries<CyclotomicInteger>(s.truncation(), std::move(c));
  };
  auto r = local_series(DynkinType(Series::A, 1), 5, 1, hooks);
  CHECK(!r.certificate.ok);
  CHECK(r.certificate.first_failure_degree == 2);
  REQUIRE(r.certificate.offending_coefficient.has_value());
  CHECK(!r.series.has_value());
  REQUIRE(r.cyclotomic_series.has_value());
  // the reported offending coefficient is the corrupted one
  CHECK(r.cyclotomic_series->coefficient(2) == *r.certificate.offending_coefficient);
}

TEST_CASE("surface series of a smooth surface is the partition series") {
  auto s = surface_series(SurfaceSpec(1, {}), 6);
  CHECK(s == zseries({1, 1, 2, 3, 5, 7, 11}));
}

TEST_CASE("surface with chi 0 and one A1 point equals the local series") {
  auto s = surface_series(SurfaceSpec(0, {DynkinType(Series::A, 1)}), 4);
  CHECK(s == zseries({1, 1, 3, 5, 9}));
}

TEST_CASE("q^1 coefficient of a surface series is chi(S)") {
  // chi(S) = chi_smooth + number of singular points
  auto a1 = DynkinType(Series::A, 1);
  auto d4 = DynkinType(Series::D, 4);
  CHECK(surface_series(SurfaceSpec(2, {a1, a1}), 1).coefficient(1) == 4);
  CHECK(surface_series(SurfaceSpec(0, {a1, d4}), 1).coefficient(1) == 2);
  CHECK(surface_series(SurfaceSpec(-3, {d4}), 1).coefficient(1) == -2);
}

TEST_CASE("surface series multiplicativity over disjoint unions") {
  auto a2 = DynkinType(Series::A, 2);
  auto d4 = DynkinType(Series::D, 4);
  SurfaceSpec left(1, {a2});
  SurfaceSpec right(2, {d4, a2});
  SurfaceSpec both(3, {a2, d4, a2});
  const int N = 12;
  CHECK(surface_series(both, N) == surface_series(left, N) * surface_series(right, N));
}

TEST_CASE("stratification identity") {
  auto a1 = DynkinType(Series::A, 1);
  CHECK(stratification_check(SurfaceSpec(1, {}), 6));
  CHECK(stratification_check(SurfaceSpec(0, {a1}), 4));
  CHECK(stratification_check(SurfaceSpec(1, {a1, a1}), 6));
  CHECK(stratification_check(SurfaceSpec(2, {a1, DynkinType(Series::A, 2)}), 6));
  CHECK_THROWS(stratification_check(SurfaceSpec(1, {a1, a1, a1}), 4));
}

TEST_CASE("negative chi surfaces stay exact") {
  auto s = surface_series(SurfaceSpec(-1, {DynkinType(Series::A, 1)}), 5);
  // (prod(1-q^m)) * local(A1): (1,-1,-1,0,0,1) * (1,1,3,5,9,14)
  CHECK(s.coefficient(0) == 1);
  CHECK(s.coefficient(1) == 0);   // 1*1 + (-1)*1
  CHECK(s.coefficient(2) == 1);   // 3 - 1 - 1
}

TEST_CASE("surface result document fields") {
  auto r = surface_series_result(SurfaceSpec(0, {DynkinType(Series::A, 1)}), 3);
  CHECK(r.certificate.ok);
  CHECK(!r.failed_type.has_value());
  REQUIRE(r.series.has_value());

  LocalSeriesHooks hooks;
  hooks.pre_demotion = [](QSeries<CyclotomicInteger>& s) {
    std::vector<CyclotomicInteger> c = s.coefficients();
    c[1] += zeta_power(c[1].order(), 1);
    s = QSeries<CyclotomicInteger>(s.truncation(), std::move(c));
  };
  auto bad = surface_series_result(SurfaceSpec(0, {DynkinType(Series::A, 1)}), 3, 1, hooks);
  CHECK(!bad.certificate.ok);
  REQUIRE(bad.failed_type.has_value());
  CHECK(bad.failed_type->to_string() == "A1");
  CHECK(bad.certificate.first_failure_degree == 1);
}
