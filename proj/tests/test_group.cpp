#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "grouplet/group.hpp"

using namespace grouplet;

namespace {

// Klein four-group, indices 0=e, 1=a, 2=b, 3=ab.
const std::vector<std::vector<int>> kKleinTable = {
    {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};

std::string write_temp_json(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/grouplet_test_") + name + ".json";
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("from_table accepts the Klein four-group") {
  FiniteGroup g = FiniteGroup::from_table(4, kKleinTable, "V4");
  CHECK(g.order() == 4);
  CHECK(g.label() == "V4");
  for (int i = 0; i < 4; ++i) CHECK(g.inverse_index(i) == i);  // every element self-inverse
}

TEST_CASE("from_table accepts the trivial group") {
  FiniteGroup g = FiniteGroup::from_table(1, {{0}}, "C1");
  CHECK(g.order() == 1);
  CHECK(g.inverse_index(0) == 0);
}

TEST_CASE("from_table rejects a repeated entry in a row") {
  std::vector<std::vector<int>> bad = {{0, 1}, {1, 1}};
  CHECK_THROWS_WITH_AS(FiniteGroup::from_table(2, bad, "bad"),
                       "row 2 of the Cayley table is not a permutation", ValidationError);
}

TEST_CASE("from_table rejects identity away from index 0 with a reorder hint") {
  // C3 with the identity moved to index 1
  std::vector<std::vector<int>> shifted = {{2, 0, 1}, {0, 1, 2}, {1, 2, 0}};
  try {
    FiniteGroup::from_table(3, shifted, "bad");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    std::string msg = e.what();
    CHECK(msg.find("index 2") != std::string::npos);
    CHECK(msg.find("reorder") != std::string::npos);
  }
}

TEST_CASE("from_table rejects a non-associative loop naming a triple") {
  // Latin square with two-sided identity that is not a group (order 5).
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 3, 4, 0, 1},
                                        {3, 4, 1, 2, 0},
                                        {4, 2, 0, 1, 3}};
  try {
    FiniteGroup::from_table(5, loop, "loop5");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("associativity fails on the triple") != std::string::npos);
  }
}

TEST_CASE("from_table rejects out-of-range entries and bad shapes") {
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {{0, 5}, {1, 0}}, "bad"), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {{0, 1}}, "bad"), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_table(0, {}, "bad"), ValidationError);
}

TEST_CASE("cyclic groups use the power ordering") {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  CHECK(c3.order() == 3);
  CHECK(c3.op(1, 2) == 0);  // g * g^2 = 1
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(c3.op(i, j) == (i + j) % 3);
  CHECK(c3.inverse_index(1) == 2);
  CHECK(c3.inverse_index(0) == 0);

  CHECK_THROWS_AS(FiniteGroup::cyclic(0), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::cyclic(129), CapacityError);
}

TEST_CASE("dihedral groups satisfy the defining relations") {
  FiniteGroup d4 = FiniteGroup::dihedral(4);
  CHECK(d4.order() == 8);
  // r has order 4: walk powers of the element at index 1
  int r = 1, acc = 0;
  for (int k = 0; k < 4; ++k) acc = d4.op(acc, r);
  CHECK(acc == 0);
  // s^2 = 1 for the reflection at index 4
  CHECK(d4.op(4, 4) == 0);
  // s r s = r^{-1}
  int srs = d4.op(d4.op(4, 1), 4);
  CHECK(srs == d4.inverse_index(1));
}

TEST_CASE("symmetric group ordering is lexicographic with identity first") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  FiniteGroup s5 = FiniteGroup::symmetric(5);
  CHECK(s5.order() == 120);
  CHECK_THROWS_AS(FiniteGroup::symmetric(6), CapacityError);
}

TEST_CASE("quaternion group has a unique non-identity self-inverse element") {
  FiniteGroup q8 = FiniteGroup::quaternion8();
  CHECK(q8.order() == 8);
  int self_inverse = -1;
  int count = 0;
  for (int i = 1; i < 8; ++i) {
    if (q8.inverse_index(i) == i) {
      self_inverse = i;
      ++count;
    }
  }
  CHECK(count == 1);  // only -1 squares to the identity
  CHECK(q8.inverse_index(self_inverse) == self_inverse);
  // i^2 = j^2 = k^2 = -1
  CHECK(q8.op(1, 1) == self_inverse);
  CHECK(q8.op(2, 2) == self_inverse);
  CHECK(q8.op(3, 3) == self_inverse);
}

TEST_CASE("direct products project onto their factors") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  FiniteGroup klein = FiniteGroup::direct_product(c2, c2);
  CHECK(klein.order() == 4);
  CHECK(klein.label() == "C2xC2");
  for (int i = 0; i < 4; ++i) CHECK(klein.inverse_index(i) == i);

  FiniteGroup c3 = FiniteGroup::cyclic(3);
  FiniteGroup prod = FiniteGroup::direct_product(c2, c3);
  CHECK(prod.order() == 6);
  // index of (i, j) is i*3 + j; products act coordinatewise
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 3; ++j1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < 3; ++j2) {
          CHECK(prod.op(i1 * 3 + j1, i2 * 3 + j2) ==
                c2.op(i1, i2) * 3 + c3.op(j1, j2));
        }

  CHECK_THROWS_AS(FiniteGroup::direct_product(FiniteGroup::cyclic(64), FiniteGroup::cyclic(3)),
                  CapacityError);
}

TEST_CASE("inverse_index is an involution on the catalog") {
  for (const FiniteGroup& g : catalog_groups(24)) {
    for (int i = 0; i < g.order(); ++i) {
      CHECK(g.inverse_index(g.inverse_index(i)) == i);
      CHECK(g.op(i, g.inverse_index(i)) == 0);
      CHECK(g.op(g.inverse_index(i), i) == 0);
    }
  }
}

TEST_CASE("validation covers orders above the exhaustive-associativity bound") {
  FiniteGroup c100 = FiniteGroup::cyclic(100);
  CHECK(c100.order() == 100);
  FiniteGroup big = FiniteGroup::direct_product(FiniteGroup::cyclic(10), FiniteGroup::cyclic(10));
  CHECK(big.order() == 100);

  // Tamper with a 70x70 cyclic table by an intercalate swap: rows/columns
  // stay permutations but the result is no longer associative, so the
  // generator-based test must reject it.
  const int n = 70;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  int i1 = 1, i2 = 1 + n / 2, j1 = 2, j2 = 2 + n / 2;
  std::swap(table[i1][j1], table[i1][j2]);
  std::swap(table[i2][j1], table[i2][j2]);
  try {
    FiniteGroup::from_table(n, table, "tampered");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("associativity fails") != std::string::npos);
  }
}

TEST_CASE("group spec parsing") {
  CHECK(parse_group_spec("C3").order() == 3);
  CHECK(parse_group_spec("D4").order() == 8);
  CHECK(parse_group_spec("S4").order() == 24);
  CHECK(parse_group_spec("Q8").order() == 8);
  CHECK(parse_group_spec("C2xC2").order() == 4);
  CHECK(parse_group_spec("C2xC2xC2").order() == 8);
  CHECK(parse_group_spec("C2xC2xC2").label() == "C2xC2xC2");

  CHECK_THROWS_AS(parse_group_spec(""), ValidationError);
  CHECK_THROWS_AS(parse_group_spec("Z5"), ValidationError);
  CHECK_THROWS_AS(parse_group_spec("C"), ValidationError);
  CHECK_THROWS_AS(parse_group_spec("CxC"), ValidationError);
  CHECK_THROWS_AS(parse_group_spec("S6"), CapacityError);
  CHECK_THROWS_AS(parse_group_spec("C200"), CapacityError);
}

TEST_CASE("group files load and re-validate") {
  std::string good = write_temp_json(
      "klein", R"({"n": 4, "label": "V4", "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]})");
  FiniteGroup g = parse_group_spec("@" + good);
  CHECK(g.order() == 4);
  CHECK(g.label() == "V4");

  std::string bad_json = write_temp_json("badjson", "{not json");
  CHECK_THROWS_AS(parse_group_spec("@" + bad_json), ValidationError);

  std::string bad_table = write_temp_json(
      "badtable", R"({"n": 2, "label": "bad", "table": [[0,1],[1,1]]})");
  CHECK_THROWS_AS(parse_group_spec("@" + bad_table), ValidationError);

  CHECK_THROWS_AS(parse_group_spec("@/tmp/grouplet_no_such_file.json"), ValidationError);

  std::remove(good.c_str());
  std::remove(bad_json.c_str());
  std::remove(bad_table.c_str());
}

TEST_CASE("catalog contents") {
  auto small = catalog_groups(12);
  CHECK(small.size() == 21);  // C1..C12, D3..D6, S3, Q8, C2xC2, C2xC4, C2xC2xC2
  for (const FiniteGroup& g : small) CHECK(g.order() <= 12);

  auto full = catalog_groups(24);
  CHECK(full.size() == 22);  // adds S4
  CHECK(full.back().label() == "S4");
}
