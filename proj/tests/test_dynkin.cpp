#include "klein/dynkin.hpp"

#include <catch_amalgamated.hpp>

#include <set>
#include <vector>

using namespace klein;

namespace {

// Independent ground truth: all norm-2 vectors found by scanning a box whose
// side is generous for the small ranks used here. Positive roots are the
// norm-2 vectors with nonnegative coordinates.
std::vector<std::vector<int>> box_norm2_vectors(const CartanMatrix& c, int halfside) {
  const int n = c.rank();
  std::vector<std::vector<int>> found;
  std::vector<int> v(n, -halfside);
  while (true) {
    if (c.norm(v) == 2) found.push_back(v);
    int i = 0;
    while (i < n && v[i] == halfside) v[i++] = -halfside;
    if (i == n) break;
    ++v[i];
  }
  return found;
}

int box_positive_root_count(const DynkinType& t, int halfside) {
  auto all = box_norm2_vectors(cartan_matrix(t), halfside);
  int pos = 0;
  for (const auto& v : all) {
    bool nonneg = true;
    for (int x : v) nonneg &= (x >= 0);
    if (nonneg) ++pos;
  }
  return pos;
}

}  // namespace

TEST_CASE("Dynkin type parsing and validation") {
  CHECK(DynkinType::parse("A1").to_string() == "A1");
  CHECK(DynkinType::parse("D4").to_string() == "D4");
  CHECK(DynkinType::parse("E8").to_string() == "E8");
  CHECK(DynkinType::parse("A13").rank == 13);
  CHECK_THROWS_AS(DynkinType::parse("B2"), ClassificationError);
  CHECK_THROWS_AS(DynkinType::parse("D3"), ClassificationError);
  CHECK_THROWS_AS(DynkinType::parse("E9"), ClassificationError);
  CHECK_THROWS_AS(DynkinType::parse("A0"), ClassificationError);
  CHECK_THROWS_AS(DynkinType::parse("A"), ClassificationError);
  CHECK_THROWS_AS(DynkinType::parse("A1x"), ClassificationError);
}

TEST_CASE("Cartan matrices of small types") {
  CHECK(cartan_matrix(DynkinType(Series::A, 1)).at(0, 0) == 2);

  auto a2 = cartan_matrix(DynkinType(Series::A, 2));
  CHECK(a2.at(0, 1) == -1);
  CHECK(a2.at(1, 0) == -1);

  // D4: node 2 is trivalent, adjacent to 1, 3, 4 (Bourbaki labels)
  auto d4 = cartan_matrix(DynkinType(Series::D, 4));
  CHECK(d4.at(1, 0) == -1);
  CHECK(d4.at(1, 2) == -1);
  CHECK(d4.at(1, 3) == -1);
  CHECK(d4.at(0, 2) == 0);
  CHECK(d4.at(2, 3) == 0);

  // E8: branch node 4 adjacent to 2, 3, 5 (1-based)
  auto e8 = cartan_matrix(DynkinType(Series::E, 8));
  CHECK(e8.at(3, 1) == -1);
  CHECK(e8.at(3, 2) == -1);
  CHECK(e8.at(3, 4) == -1);
  CHECK(e8.at(0, 2) == -1);
  CHECK(e8.at(0, 1) == 0);
}

TEST_CASE("Cartan matrix validation rejects bad input") {
  CHECK_THROWS_AS(CartanMatrix(2, {2, -1, 0, 2}), NotCartanError);   // asymmetric
  CHECK_THROWS_AS(CartanMatrix(2, {1, 0, 0, 2}), NotCartanError);    // diagonal
  CHECK_THROWS_AS(CartanMatrix(2, {2, -2, -2, 2}), NotCartanError);  // entry range
  // affine 3-cycle: Cartan-shaped but singular
  CHECK_THROWS_AS(CartanMatrix(3, {2, -1, -1, -1, 2, -1, -1, -1, 2}), NotCartanError);
}

TEST_CASE("positive definiteness check") {
  for (const char* name : {"A1", "A2", "A5", "D4", "D7", "E6", "E7", "E8"})
    CHECK(cartan_matrix(DynkinType::parse(name)).positive_definite());
}

TEST_CASE("root data of A1") {
  auto rd = root_datum(cartan_matrix(DynkinType(Series::A, 1)));
  REQUIRE(rd.positive_roots.size() == 1);
  CHECK(rd.positive_roots[0] == std::vector<int>{1});
  CHECK(rd.highest_root == std::vector<int>{1});
  CHECK(rd.coxeter_number == 2);
}

TEST_CASE("root data matches the box-search oracle at small rank") {
  for (const char* name : {"A1", "A2", "A3", "A4", "D4"}) {
    auto t = DynkinType::parse(name);
    auto rd = root_datum(cartan_matrix(t));
    INFO(name);
    CHECK(static_cast<int>(rd.positive_roots.size()) == box_positive_root_count(t, 6));
    // both signs: 2x positive roots
    CHECK(box_norm2_vectors(cartan_matrix(t), 6).size() == 2 * rd.positive_roots.size());
  }
}

TEST_CASE("Coxeter numbers reproduce the classical values") {
  auto h = [](const char* name) {
    return root_datum(cartan_matrix(DynkinType::parse(name))).coxeter_number;
  };
  CHECK(h("A1") == 2);
  CHECK(h("A2") == 3);
  CHECK(h("A7") == 8);   // A_n -> n+1
  CHECK(h("D4") == 6);
  CHECK(h("D8") == 14);  // D_n -> 2n-2
  CHECK(h("E6") == 12);
  CHECK(h("E7") == 18);
  CHECK(h("E8") == 30);
}

TEST_CASE("root counts and norms") {
  SECTION("D4 has 12 positive roots") {
    auto rd = root_datum(cartan_matrix(DynkinType(Series::D, 4)));
    CHECK(rd.positive_roots.size() == 12);
  }
  SECTION("E8 has 120 positive roots, h = 30, and n*h/2 holds") {
    auto rd = root_datum(cartan_matrix(DynkinType(Series::E, 8)));
    CHECK(rd.positive_roots.size() == 120);
    CHECK(rd.coxeter_number == 30);
    CHECK(8 * rd.coxeter_number / 2 == 120);
  }
  SECTION("every positive root has Cartan norm 2") {
    for (const char* name : {"A3", "D5", "E6"}) {
      auto c = cartan_matrix(DynkinType::parse(name));
      for (const auto& r : root_datum(c).positive_roots) CHECK(c.norm(r) == 2);
    }
  }
  SECTION("highest root height is h - 1") {
    auto rd = root_datum(cartan_matrix(DynkinType(Series::E, 7)));
    int height = 0;
    for (int x : rd.highest_root) height += x;
    CHECK(height == rd.coxeter_number - 1);
  }
}

TEST_CASE("root_datum rejects reducible diagrams") {
  // A1 x A1: block diagonal, positive definite, but not irreducible
  CHECK_THROWS_AS(root_datum(CartanMatrix(2, {2, 0, 0, 2})), NotCartanError);
}

TEST_CASE("zeta orders") {
  CHECK(zeta_order(DynkinType::parse("A1")) == 3);
  CHECK(zeta_order(DynkinType::parse("D4")) == 7);
  CHECK(zeta_order(DynkinType::parse("E8")) == 31);
  CHECK(zeta_order(DynkinType::parse("A8")) == 10);
  CHECK(zeta_order(DynkinType::parse("D8")) == 15);
}
