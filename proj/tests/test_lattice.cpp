#include "klein/lattice.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

using namespace klein;

namespace {

// Enumeration oracle: plain box scan over |m_i| <= halfside with an exact
// norm filter. The halfside equal to the norm bound is generous for every
// rank <= 4 Cartan matrix (smallest form eigenvalue is far above B/B^2).
std::vector<std::vector<int>> box_enumerate(const CartanMatrix& c, long long bound,
                                            int halfside) {
  const int n = c.rank();
  std::vector<std::vector<int>> found;
  std::vector<int> v(n, -halfside);
  while (true) {
    if (c.norm(v) <= bound) found.push_back(v);
    int i = 0;
    while (i < n && v[i] == halfside) v[i++] = -halfside;
    if (i == n) break;
    ++v[i];
  }
  std::sort(found.begin(), found.end());
  return found;
}

CyclotomicInteger cyc(int m, std::vector<long long> coeffs) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return CyclotomicInteger(m, std::move(c));
}

QSeries<BigInt> zseries(std::vector<long long> coeffs) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return QSeries<BigInt>(static_cast<int>(coeffs.size()) - 1, std::move(c));
}

}  // namespace

TEST_CASE("A1 vectors of norm <= 8") {
  auto e = enumerate_vectors(cartan_matrix(DynkinType(Series::A, 1)), 8);
  REQUIRE(e.vectors.size() == 5);
  CHECK(e.vectors == std::vector<std::vector<int>>{{-2}, {-1}, {0}, {1}, {2}});
}

TEST_CASE("A2 vectors of norm <= 2: zero plus six roots") {
  auto e = enumerate_vectors(cartan_matrix(DynkinType(Series::A, 2)), 2);
  CHECK(e.vectors.size() == 7);
}

TEST_CASE("D4 vectors of norm <= 2: zero plus 24 roots") {
  auto e = enumerate_vectors(cartan_matrix(DynkinType(Series::D, 4)), 2);
  CHECK(e.vectors.size() == 25);
  auto rd = root_datum(cartan_matrix(DynkinType(Series::D, 4)));
  CHECK(e.vectors.size() == 2 * rd.positive_roots.size() + 1);
}

TEST_CASE("enumeration agrees with the box oracle") {
  for (const char* name : {"A1", "A2", "A3", "A4", "D4"}) {
    auto t = DynkinType::parse(name);
    auto gram = cartan_matrix(t);
    for (long long bound : {0LL, 2LL, 6LL, 12LL}) {
      INFO(name << " bound " << bound);
      auto fp = enumerate_vectors(gram, bound);
      CHECK(fp.vectors == box_enumerate(gram, bound, static_cast<int>(bound)));
    }
  }
}

TEST_CASE("enumeration contains zero and is closed under negation") {
  for (const char* name : {"A3", "D5", "E6"}) {
    auto gram = cartan_matrix(DynkinType::parse(name));
    auto e = enumerate_vectors(gram, 8);
    std::set<std::vector<int>> all(e.vectors.begin(), e.vectors.end());
    CHECK(all.size() == e.vectors.size());  // no duplicates
    CHECK(all.count(std::vector<int>(gram.rank(), 0)) == 1);
    for (const auto& v : e.vectors) {
      std::vector<int> neg(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
      CHECK(all.count(neg) == 1);
    }
  }
}

TEST_CASE("every enumerated vector has even norm") {
  for (const char* name : {"A5", "D6", "E7", "E8"}) {
    auto gram = cartan_matrix(DynkinType::parse(name));
    auto e = enumerate_vectors(gram, 10);
    for (const auto& v : e.vectors) CHECK(gram.norm(v) % 2 == 0);
  }
}

TEST_CASE("odd or negative bounds are rejected") {
  auto gram = cartan_matrix(DynkinType(Series::A, 2));
  CHECK_THROWS_AS(enumerate_vectors(gram, 7), EnumerationError);
  CHECK_THROWS_AS(enumerate_vectors(gram, -2), EnumerationError);
}

TEST_CASE("parallel enumeration is deterministic") {
  auto gram = cartan_matrix(DynkinType(Series::D, 5));
  auto one = enumerate_vectors(gram, 12, 1);
  for (int workers : {2, 4, 8}) {
    auto many = enumerate_vectors(gram, 12, workers);
    CHECK(many.vectors == one.vectors);
  }
  for (int workers : {1, 4, 8})
    CHECK(twisted_theta(DynkinType(Series::D, 5), 7, workers) ==
          twisted_theta(DynkinType(Series::D, 5), 7, 1));
}

TEST_CASE("twisted theta of A1") {
  // zeta of order 3: coefficients 1, -1, 0, 0, -1 (spec-s hand reduction)
  auto th = twisted_theta(DynkinType(Series::A, 1), 4);
  CHECK(th.coefficient(0) == cyc(3, {1, 0}));
  CHECK(th.coefficient(1) == cyc(3, {-1, 0}));
  CHECK(th.coefficient(2) == cyc(3, {0, 0}));
  CHECK(th.coefficient(3) == cyc(3, {0, 0}));
  CHECK(th.coefficient(4) == cyc(3, {-1, 0}));
}

TEST_CASE("twisted theta of A2 at q^1 is -2") {
  auto th = twisted_theta(DynkinType(Series::A, 2), 1);
  CHECK(th.coefficient(0) == cyc(4, {1, 0}));
  CHECK(th.coefficient(1) == cyc(4, {-2, 0}));
}

TEST_CASE("twisted theta constant coefficient is 1 for all types") {
  for (const char* name : {"A1", "A4", "D4", "D6", "E6", "E7", "E8"}) {
    auto th = twisted_theta(DynkinType::parse(name), 2);
    auto one = th.coefficient(0).as_rational_integer();
    REQUIRE(one.has_value());
    CHECK(*one == 1);
  }
}

TEST_CASE("twisted theta is fixed by conjugation") {
  for (const char* name : {"A2", "A3", "D4", "E6"}) {
    auto th = twisted_theta(DynkinType::parse(name), 10);
    for (int k = 0; k <= th.truncation(); ++k)
      CHECK(th.coefficient(k).conjugate() == th.coefficient(k));
  }
}

TEST_CASE("untwisted theta counts norm shells") {
  CHECK(theta_untwisted(DynkinType(Series::A, 1), 4) == zseries({1, 2, 0, 0, 2}));
  CHECK(theta_untwisted(DynkinType(Series::A, 2), 1) == zseries({1, 6}));
  CHECK(theta_untwisted(DynkinType(Series::D, 4), 1) == zseries({1, 24}));
  // E8 theta: 1, 240, 2160, 6720 (number of roots then deeper shells)
  CHECK(theta_untwisted(DynkinType(Series::E, 8), 3) == zseries({1, 240, 2160, 6720}));
}

TEST_CASE("shell counts CSV rows") {
  auto rows = shell_counts(cartan_matrix(DynkinType(Series::A, 1)), 8);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::pair<long long, long long>{0, 1});
  CHECK(rows[1] == std::pair<long long, long long>{2, 2});
  CHECK(rows[4] == std::pair<long long, long long>{8, 2});
}

TEST_CASE("theta series of sublattice-scale truncations stay exact") {
  // spot check: A3 untwisted theta coefficient of q^k counts norm-2k vectors,
  // cross-checked against the box oracle
  auto gram = cartan_matrix(DynkinType(Series::A, 3));
  auto th = theta_untwisted(DynkinType(Series::A, 3), 6);
  auto box = box_enumerate(gram, 12, 12);
  std::vector<long long> shells(7, 0);
  for (const auto& v : box) shells[static_cast<std::size_t>(gram.norm(v) / 2)] += 1;
  for (int k = 0; k <= 6; ++k) CHECK(th.coefficient(k) == shells[k]);
}
