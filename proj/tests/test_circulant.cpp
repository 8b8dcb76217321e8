#include <doctest.h>

#include <string>
#include <vector>

#include "grouplet/circulant.hpp"
#include "grouplet/sampling.hpp"

using namespace grouplet;

namespace {

ExactMatrix make(const FieldSpec& spec, int n, const std::vector<std::int64_t>& flat) {
  std::vector<Scalar> entries;
  for (std::int64_t v : flat) entries.push_back(Scalar::from_integer(spec, v));
  return ExactMatrix(spec, n, n, std::move(entries));
}

// A^g straight from the defining Kronecker delta, entry by entry.
ExactMatrix rep_from_definition(const FiniteGroup& g, int elem, const FieldSpec& spec) {
  int n = g.order();
  ExactMatrix m(spec, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.op(i, elem) == j) m.at(i, j) = Scalar::one(spec);
  return m;
}

// The O(n^4) quadruple condition, independent of the class-lookup shortcut.
bool circulant_by_quadruples(const ExactMatrix& m, const FiniteGroup& g) {
  int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (g.op(g.inverse_index(i), j) == g.op(g.inverse_index(k), l) &&
              m.at(i, j) != m.at(k, l)) {
            return false;
          }
        }
  return true;
}

std::vector<std::pair<FiniteGroup, FieldSpec>> corpus() {
  std::vector<std::pair<FiniteGroup, FieldSpec>> out;
  out.emplace_back(FiniteGroup::cyclic(5), FieldSpec::rationals());
  out.emplace_back(FiniteGroup::symmetric(3), FieldSpec::prime_field(2));
  out.emplace_back(FiniteGroup::quaternion8(), FieldSpec::prime_field(3));
  out.emplace_back(FiniteGroup::dihedral(4), FieldSpec::prime_field(7));
  return out;
}

}  // namespace

TEST_CASE("regular representation matches the definition") {
  FieldSpec q = FieldSpec::rationals();
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  FiniteGroup c2 = FiniteGroup::cyclic(2);

  CHECK(RegularRepMatrix(c3, 0).densify(q) == ExactMatrix::identity(q, 3));
  CHECK(RegularRepMatrix(c3, 1).densify(q) == make(q, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0}));
  CHECK(RegularRepMatrix(c2, 1).densify(q) == make(q, 2, {0, 1, 1, 0}));

  for (const auto& [g, spec] : corpus()) {
    for (int e = 0; e < g.order(); ++e) {
      CHECK(RegularRepMatrix(g, e).densify(spec) == rep_from_definition(g, e, spec));
    }
  }
  CHECK_THROWS_AS(RegularRepMatrix(c3, 3), ValidationError);
}

TEST_CASE("A^g is a fixed-point-free permutation for g != 1") {
  for (const FiniteGroup& g : catalog_groups(12)) {
    for (int e = 1; e < g.order(); ++e) {
      RegularRepMatrix rep(g, e);
      for (int i = 0; i < g.order(); ++i) {
        CHECK(rep.perm()[static_cast<std::size_t>(i)] != i);
      }
    }
  }
}

TEST_CASE("embed produces the classical circulant for cyclic groups") {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  FieldSpec q = FieldSpec::rationals();
  GroupRingElement x = GroupRingElement::parse(c3, q, "1,2,3");
  CHECK(embed(x) == make(q, 3, {1, 2, 3, 3, 1, 2, 2, 3, 1}));

  CHECK(embed(GroupRingElement::identity(c3, q)) == ExactMatrix::identity(q, 3));
  CHECK(embed(GroupRingElement::zero(c3, q)).is_zero());
}

TEST_CASE("embed agrees with the summation definition") {
  Rng rng(kDefaultSeed + 11);
  for (const auto& [g, spec] : corpus()) {
    for (int trial = 0; trial < 30; ++trial) {
      GroupRingElement x = random_element(rng, g, spec);
      ExactMatrix sum(spec, g.order(), g.order());
      for (int e = 0; e < g.order(); ++e) {
        sum = sum + RegularRepMatrix(g, e).densify(spec).scaled(x.coeff(e));
      }
      CHECK(embed(x) == sum);
    }
  }
}

TEST_CASE("every diagonal entry of embed(x) is the identity coefficient") {
  Rng rng(kDefaultSeed + 12);
  for (const auto& [g, spec] : corpus()) {
    for (int trial = 0; trial < 20; ++trial) {
      GroupRingElement x = random_element(rng, g, spec);
      ExactMatrix m = embed(x);
      for (int i = 0; i < g.order(); ++i) CHECK(m.at(i, i) == x.coeff(0));
    }
  }
}

TEST_CASE("embed is an injective algebra homomorphism") {
  Rng rng(kDefaultSeed + 13);
  for (const auto& [g, spec] : corpus()) {
    for (int trial = 0; trial < 30; ++trial) {
      GroupRingElement x = random_element(rng, g, spec);
      GroupRingElement y = random_element(rng, g, spec);
      CHECK(embed(x * y) == embed(x) * embed(y));
      CHECK(embed(x + y) == embed(x) + embed(y));
      CHECK(mat_trace(embed(x)) == x.tau());
      if (embed(x).is_zero()) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("the n representation matrices have pairwise disjoint supports") {
  for (const FiniteGroup& g : catalog_groups(12)) {
    int n = g.order();
    std::vector<int> hits(static_cast<std::size_t>(n) * n, 0);
    for (int e = 0; e < n; ++e) {
      RegularRepMatrix rep(g, e);
      for (int i = 0; i < n; ++i) {
        ++hits[static_cast<std::size_t>(i) * n + rep.perm()[static_cast<std::size_t>(i)]];
      }
    }
    // disjoint supports partitioning all n^2 cells
    for (int cell : hits) CHECK(cell == 1);
  }
}

TEST_CASE("is_g_circulant recognizes and rejects") {
  FieldSpec q = FieldSpec::rationals();
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  FiniteGroup c3 = FiniteGroup::cyclic(3);

  CHECK_FALSE(is_g_circulant(make(q, 2, {1, 0, 0, 0}), c2));
  CHECK(is_g_circulant(make(q, 3, {1, 2, 3, 3, 1, 2, 2, 3, 1}), c3));
  CHECK_FALSE(is_g_circulant(make(q, 3, {1, 2, 3, 3, 1, 2, 2, 1, 3}), c3));
  CHECK_THROWS_AS(is_g_circulant(make(q, 2, {1, 0, 0, 1}), c3), ValidationError);

  Rng rng(kDefaultSeed + 14);
  for (const auto& [g, spec] : corpus()) {
    for (int trial = 0; trial < 20; ++trial) {
      GroupRingElement x = random_element(rng, g, spec);
      ExactMatrix m = embed(x);
      CHECK(is_g_circulant(m, g));
      CHECK(circulant_by_quadruples(m, g));

      int n = g.order();
      int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
      if (c >= r) ++c;
      m.at(r, c) += Scalar::one(spec);
      CHECK_FALSE(is_g_circulant(m, g));
      CHECK_FALSE(circulant_by_quadruples(m, g));
    }
  }
}

TEST_CASE("extract inverts embed") {
  FieldSpec q = FieldSpec::rationals();
  FiniteGroup c3 = FiniteGroup::cyclic(3);

  CHECK(extract(ExactMatrix::identity(q, 3), c3) == GroupRingElement::identity(c3, q));
  CHECK(extract(make(q, 3, {4, 5, 6, 6, 4, 5, 5, 6, 4}), c3) ==
        GroupRingElement::parse(c3, q, "4,5,6"));

  Rng rng(kDefaultSeed + 15);
  for (const auto& [g, spec] : corpus()) {
    for (int trial = 0; trial < 30; ++trial) {
      GroupRingElement x = random_element(rng, g, spec);
      ExactMatrix m = embed(x);
      CHECK(extract(m, g) == x);
      CHECK(embed(extract(m, g)) == m);
    }
  }
}

TEST_CASE("extract names a violating quadruple on non-circulant input") {
  FieldSpec q = FieldSpec::rationals();
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  try {
    extract(make(q, 2, {1, 0, 0, 0}), c2);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    std::string msg = e.what();
    CHECK(msg.find("not C2-circulant") != std::string::npos);
    CHECK(msg.find("(2,2)") != std::string::npos);  // the offending entry, 1-based
    CHECK(msg.find("(1,1)") != std::string::npos);  // its class representative in row 1
  }
  CHECK_THROWS_AS(extract(ExactMatrix(q, 2, 3), c2), ValidationError);
}

TEST_CASE("representation product identity") {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  CHECK(rep_product_identity(1, 1, c3));  // A^g A^g = A^{g^2}: (0->1->2->0) twice
  CHECK(rep_product_identity(1, 2, c3));  // A^g A^{g^-1} = I
  CHECK(rep_product_identity(0, 2, c3));  // A^1 A^h = A^h

  for (const FiniteGroup& g : catalog_groups(12)) {
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) REQUIRE(rep_product_identity(a, b, g));
  }
}
