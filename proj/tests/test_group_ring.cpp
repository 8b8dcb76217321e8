#include <doctest.h>

#include <vector>

#include "grouplet/group_ring.hpp"
#include "grouplet/sampling.hpp"

using namespace grouplet;

namespace {

GroupRingElement make(const FiniteGroup& g, const FieldSpec& spec,
                      const std::vector<std::int64_t>& coeffs) {
  std::vector<Scalar> out;
  for (std::int64_t c : coeffs) out.push_back(Scalar::from_integer(spec, c));
  return GroupRingElement(g, spec, std::move(out));
}

// Convolution done longhand over the Cayley table, independent of the
// implementation's skip logic.
GroupRingElement naive_mul(const GroupRingElement& x, const GroupRingElement& y) {
  const FiniteGroup& g = x.group();
  std::vector<Scalar> out(static_cast<std::size_t>(g.order()), Scalar::zero(x.spec()));
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j)
      out[static_cast<std::size_t>(g.op(i, j))] += x.coeff(i) * y.coeff(j);
  return GroupRingElement(g, x.spec(), std::move(out));
}

}  // namespace

TEST_CASE("additive structure") {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  FieldSpec f3 = FieldSpec::prime_field(3);
  FieldSpec q = FieldSpec::rationals();

  GroupRingElement x = make(c3, q, {1, 2, 3});
  CHECK(x + GroupRingElement::zero(c3, q) == x);
  CHECK(x.scaled(Scalar::zero(q)) == GroupRingElement::zero(c3, q));
  CHECK(make(c3, f3, {1, 2, 0}) + make(c3, f3, {2, 1, 0}) == GroupRingElement::zero(c3, f3));
  CHECK((x - x).is_zero());
}

TEST_CASE("multiplication is convolution over the Cayley table") {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  FieldSpec q = FieldSpec::rationals();

  // (1 + g)(1 + g^2) = 1 + g^2 + g + g^3 = 2 + g + g^2, expanded by hand
  CHECK(make(c3, q, {1, 1, 0}) * make(c3, q, {1, 0, 1}) == make(c3, q, {2, 1, 1}));

  FiniteGroup c2 = FiniteGroup::cyclic(2);
  FieldSpec f2 = FieldSpec::prime_field(2);
  // (1 + g)^2 = 1 + 2g + g^2 = 2 + 2g = 0 mod 2
  GroupRingElement one_plus_g = make(c2, f2, {1, 1});
  CHECK((one_plus_g * one_plus_g).is_zero());

  FiniteGroup q8 = FiniteGroup::quaternion8();
  FieldSpec f5 = FieldSpec::prime_field(5);
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 50; ++i) {
    GroupRingElement x = random_element(rng, q8, f5);
    CHECK(x * GroupRingElement::identity(q8, f5) == x);
    CHECK(GroupRingElement::identity(q8, f5) * x == x);
  }
}

TEST_CASE("multiplication agrees with the longhand convolution") {
  Rng rng(kDefaultSeed + 7);
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  for (const FieldSpec& spec : {FieldSpec::rationals(), FieldSpec::prime_field(3)}) {
    for (int i = 0; i < 50; ++i) {
      GroupRingElement x = random_element(rng, s3, spec);
      GroupRingElement y = random_element(rng, s3, spec);
      CHECK(x * y == naive_mul(x, y));
    }
  }
}

TEST_CASE("associativity and distributivity on sampled triples") {
  Rng rng(kDefaultSeed + 2);
  std::vector<std::pair<FiniteGroup, FieldSpec>> corpus;
  corpus.emplace_back(FiniteGroup::symmetric(3), FieldSpec::prime_field(2));
  corpus.emplace_back(FiniteGroup::quaternion8(), FieldSpec::rationals());
  corpus.emplace_back(FiniteGroup::cyclic(6), FieldSpec::prime_field(5));
  corpus.emplace_back(FiniteGroup::dihedral(4), FieldSpec::prime_field(3));
  for (const auto& [g, spec] : corpus) {
    for (int i = 0; i < 40; ++i) {
      GroupRingElement x = random_element(rng, g, spec);
      GroupRingElement y = random_element(rng, g, spec);
      GroupRingElement z = random_element(rng, g, spec);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x + y) * z == x * z + y * z);
    }
  }
}

TEST_CASE("translate moves the chosen coefficient onto the identity") {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  FieldSpec q = FieldSpec::rationals();

  // (0 + 5g + 0) * g^{-1} = 5, i.e. coefficients (5, 0, 0)
  CHECK(make(c3, q, {0, 5, 0}).translate(1) == make(c3, q, {5, 0, 0}));

  Rng rng(kDefaultSeed + 3);
  FiniteGroup d4 = FiniteGroup::dihedral(4);
  FieldSpec f3 = FieldSpec::prime_field(3);
  for (int i = 0; i < 60; ++i) {
    GroupRingElement x = random_element(rng, d4, f3);
    CHECK(x.translate(0) == x);
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(d4.order())));
    CHECK(x.translate(j).coeff(0) == x.coeff(j));
    // translation is multiplication by a group element
    CHECK(x.translate(j) == x * GroupRingElement::basis(d4, f3, d4.inverse_index(j)));
  }
}

TEST_CASE("tau is n times the identity coefficient") {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  FieldSpec q = FieldSpec::rationals();
  CHECK(make(c3, q, {2, 5, 7}).tau() == Scalar::from_integer(q, 6));
  CHECK(GroupRingElement::identity(c3, q).tau() == Scalar::from_integer(q, 3));

  // char 2 with even order: n = 0 in k, so tau vanishes identically
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  FieldSpec f2 = FieldSpec::prime_field(2);
  Rng rng(kDefaultSeed + 4);
  for (int i = 0; i < 20; ++i) CHECK(random_element(rng, c2, f2).tau().is_zero());
}

TEST_CASE("tau is linear and symmetric under products") {
  Rng rng(kDefaultSeed + 5);
  FiniteGroup d4 = FiniteGroup::dihedral(4);
  for (const FieldSpec& spec : {FieldSpec::rationals(), FieldSpec::prime_field(3)}) {
    for (int i = 0; i < 50; ++i) {
      GroupRingElement x = random_element(rng, d4, spec);
      GroupRingElement y = random_element(rng, d4, spec);
      Scalar a = random_scalar(rng, spec);
      Scalar b = random_scalar(rng, spec);
      CHECK((x.scaled(a) + y.scaled(b)).tau() == a * x.tau() + b * y.tau());
      CHECK((x * y).tau() == (y * x).tau());
    }
  }
}

TEST_CASE("sigma is central and square-zero exactly in the modular case") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  FieldSpec f2 = FieldSpec::prime_field(2);
  FieldSpec f3 = FieldSpec::prime_field(3);
  FieldSpec q = FieldSpec::rationals();

  GroupRingElement sigma_f2 = GroupRingElement::sigma(c2, f2);
  CHECK(sigma_f2 == make(c2, f2, {1, 1}));
  CHECK((sigma_f2 * sigma_f2).is_zero());

  GroupRingElement sigma_f3 = GroupRingElement::sigma(c3, f3);
  CHECK((sigma_f3 * sigma_f3).is_zero());

  GroupRingElement sigma_q = GroupRingElement::sigma(c2, q);
  CHECK(sigma_q * sigma_q == sigma_q.scaled(Scalar::from_integer(q, 2)));
  CHECK_FALSE((sigma_q * sigma_q).is_zero());

  Rng rng(kDefaultSeed + 6);
  for (const auto& [g, spec] :
       std::vector<std::pair<FiniteGroup, FieldSpec>>{{FiniteGroup::symmetric(3), f3},
                                                      {FiniteGroup::quaternion8(), q},
                                                      {FiniteGroup::dihedral(5), f2}}) {
    GroupRingElement sigma = GroupRingElement::sigma(g, spec);
    Scalar n = Scalar::from_integer(spec, g.order());
    CHECK(sigma * sigma == sigma.scaled(n));
    for (int i = 0; i < 30; ++i) {
      GroupRingElement x = random_element(rng, g, spec);
      CHECK(sigma * x == x * sigma);
      CHECK(sigma * x == sigma.scaled(x.augmentation()));
    }
  }
}

TEST_CASE("element literal parsing") {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  FieldSpec q = FieldSpec::rationals();
  GroupRingElement x = GroupRingElement::parse(c3, q, "1/2,0,-3");
  CHECK(x.coeff(0) == Scalar::parse(q, "1/2"));
  CHECK(x.coeff(2) == Scalar::parse(q, "-3"));

  CHECK_THROWS_AS(GroupRingElement::parse(c3, q, "1,2"), ValidationError);
  CHECK_THROWS_AS(GroupRingElement::parse(c3, q, "1,2,3,4"), ValidationError);
  CHECK_THROWS_AS(GroupRingElement::parse(c3, q, "1,x,3"), ValidationError);
}

TEST_CASE("display uses 1-based paper notation") {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  FieldSpec q = FieldSpec::rationals();
  CHECK(make(c3, q, {2, 5, 7}).to_string() == "2*1 + 5*g2 + 7*g3");
  CHECK(make(c3, q, {1, 0, -1}).to_string() == "1 - g3");
  CHECK(make(c3, q, {0, 1, 0}).to_string() == "g2");
  CHECK(GroupRingElement::zero(c3, q).to_string() == "0");
}

TEST_CASE("mismatched operands are rejected") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  FieldSpec q = FieldSpec::rationals();
  FieldSpec f2 = FieldSpec::prime_field(2);

  CHECK_THROWS_AS(make(c2, q, {1, 1}) + make(c3, q, {1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(make(c2, q, {1, 1}) * make(c2, f2, {1, 1}), ValidationError);
  CHECK_THROWS_AS(GroupRingElement(c3, q, {Scalar::one(q)}), ValidationError);
  CHECK_THROWS_AS(make(c2, q, {1, 1}).scaled(Scalar::one(f2)), ValidationError);
}

TEST_CASE("structurally equal groups interoperate") {
  FiniteGroup a = FiniteGroup::cyclic(4);
  FiniteGroup b = FiniteGroup::cyclic(4);
  FieldSpec q = FieldSpec::rationals();
  GroupRingElement x = make(a, q, {1, 2, 3, 4});
  GroupRingElement y = make(b, q, {1, 0, 0, 0});
  CHECK(x * y == x);
}
