#include "grouplet/selftest.hpp"

#include <functional>
#include <ostream>
#include <vector>

#include "grouplet/circulant.hpp"
#include "grouplet/maschke.hpp"
#include "grouplet/report.hpp"
#include "grouplet/sampling.hpp"

namespace grouplet {

namespace {

struct CheckFailure {
  std::string message;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure{what};
}

std::vector<std::pair<FiniteGroup, FieldSpec>> fuzz_corpus() {
  std::vector<std::pair<FiniteGroup, FieldSpec>> corpus;
  corpus.emplace_back(FiniteGroup::cyclic(4), FieldSpec::rationals());
  corpus.emplace_back(FiniteGroup::cyclic(6), FieldSpec::prime_field(2));
  corpus.emplace_back(FiniteGroup::symmetric(3), FieldSpec::prime_field(3));
  corpus.emplace_back(FiniteGroup::quaternion8(), FieldSpec::prime_field(5));
  corpus.emplace_back(FiniteGroup::dihedral(4), FieldSpec::rationals());
  corpus.emplace_back(FiniteGroup::cyclic(5), FieldSpec::prime_field(7));
  corpus.emplace_back(
      FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)),
      FieldSpec::prime_field(2));
  return corpus;
}

std::vector<FieldSpec> sweep_fields() {
  return {FieldSpec::rationals(), FieldSpec::prime_field(2), FieldSpec::prime_field(3),
          FieldSpec::prime_field(5), FieldSpec::prime_field(7)};
}

int check_field_axioms_exhaustive() {
  int checks = 0;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    FieldSpec spec = FieldSpec::prime_field(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      Scalar x = Scalar::from_integer(spec, a);
      if (!x.is_zero()) {
        require(x * x.inv() == Scalar::one(spec), "inverse fails in F" + std::to_string(p));
        require(x.inv() * x == Scalar::one(spec), "inverse fails in F" + std::to_string(p));
        ++checks;
      }
      for (std::uint32_t b = 0; b < p; ++b) {
        Scalar y = Scalar::from_integer(spec, b);
        require(x + y == y + x, "commutativity fails");
        require(x * y == y * x, "commutativity fails");
        for (std::uint32_t c = 0; c < p; ++c) {
          Scalar z = Scalar::from_integer(spec, c);
          require((x + y) + z == x + (y + z), "additive associativity fails");
          require((x * y) * z == x * (y * z), "multiplicative associativity fails");
          require(x * (y + z) == x * y + x * z, "distributivity fails");
          ++checks;
        }
      }
    }
  }
  return checks;
}

int check_field_axioms_rational(Rng& rng) {
  FieldSpec spec = FieldSpec::rationals();
  int checks = 0;
  for (int i = 0; i < 200; ++i) {
    Scalar x = random_scalar(rng, spec);
    Scalar y = random_scalar(rng, spec);
    Scalar z = random_scalar(rng, spec);
    require((x + y) + z == x + (y + z), "additive associativity fails over Q");
    require((x * y) * z == x * (y * z), "multiplicative associativity fails over Q");
    require(x * (y + z) == x * y + x * z, "distributivity fails over Q");
    require((x + -x).is_zero(), "additive inverse fails over Q");
    if (!x.is_zero()) require(x * x.inv() == Scalar::one(spec), "inverse fails over Q");
    require(Scalar::parse(spec, x.to_string()) == x, "canonical form does not round-trip");
    ++checks;
  }
  return checks;
}

int check_catalog_groups() {
  int checks = 0;
  for (const FiniteGroup& g : catalog_groups(24)) {
    for (int i = 0; i < g.order(); ++i) {
      require(g.inverse_index(g.inverse_index(i)) == i, g.label() + ": inverse not involutive");
      require(g.op(i, g.inverse_index(i)) == 0, g.label() + ": inverse fails");
      ++checks;
    }
  }
  return checks;
}

int check_regular_representation() {
  int checks = 0;
  for (const FiniteGroup& g : catalog_groups(12)) {
    int n = g.order();
    std::vector<int> support_owner(static_cast<std::size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a) {
      RegularRepMatrix rep(g, a);
      std::vector<bool> hit(static_cast<std::size_t>(n), false);
      for (int i = 0; i < n; ++i) {
        int col = rep.perm()[static_cast<std::size_t>(i)];
        require(!hit[static_cast<std::size_t>(col)], g.label() + ": A^g is not a permutation");
        hit[static_cast<std::size_t>(col)] = true;
        int& owner = support_owner[static_cast<std::size_t>(i) * n + col];
        require(owner < 0, g.label() + ": supports overlap");
        owner = a;
      }
      for (int b = 0; b < n; ++b) {
        require(rep_product_identity(a, b, g), g.label() + ": A^g A^h != A^{gh}");
        ++checks;
      }
    }
  }
  return checks;
}

int check_embedding_homomorphism(Rng& rng) {
  int checks = 0;
  for (const auto& [group, spec] : fuzz_corpus()) {
    for (int i = 0; i < 100; ++i) {
      GroupRingElement x = random_element(rng, group, spec);
      GroupRingElement y = random_element(rng, group, spec);
      require(embed(x * y) == embed(x) * embed(y), "embed is not multiplicative");
      require(embed(x + y) == embed(x) + embed(y), "embed is not additive");
      require(mat_trace(embed(x)) == x.tau(), "trace of the embedding differs from tau");
      ++checks;
    }
  }
  return checks;
}

int check_circulant_round_trip(Rng& rng) {
  int checks = 0;
  for (const auto& [group, spec] : fuzz_corpus()) {
    for (int i = 0; i < 100; ++i) {
      GroupRingElement x = random_element(rng, group, spec);
      ExactMatrix m = embed(x);
      require(is_g_circulant(m, group), "embedding is not recognized as circulant");
      require(extract(m, group) == x, "extract(embed(x)) != x");
      ++checks;
    }
    int n = group.order();
    if (n < 2) continue;
    for (int i = 0; i < 10; ++i) {
      GroupRingElement x = random_element(rng, group, spec);
      ExactMatrix m = embed(x);
      int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
      if (c >= r) ++c;  // off-diagonal
      m.at(r, c) += Scalar::one(spec);
      require(!is_g_circulant(m, group), "perturbed matrix still recognized as circulant");
      ++checks;
    }
  }
  return checks;
}

int check_gram_identity() {
  int checks = 0;
  FieldSpec spec = FieldSpec::rationals();
  for (const FiniteGroup& g : catalog_groups(12)) {
    int n = g.order();
    GramMatrix gram = gram_matrix(g, spec);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Scalar expected = j == g.inverse_index(i) ? Scalar::from_integer(spec, n)
                                                  : Scalar::zero(spec);
        require(gram.matrix.at(i, j) == expected, g.label() + ": gram entry mismatch");
      }
    }
    Scalar det = determinant(gram.matrix);
    Scalar expected = Scalar::one(spec);
    for (int i = 0; i < n; ++i) expected *= Scalar::from_integer(spec, n);
    if (inversion_sign(g) < 0) expected = -expected;
    require(det == expected, g.label() + ": gram determinant != sign * n^n");
    ++checks;
  }
  return checks;
}

int check_dichotomy() {
  int checks = 0;
  for (const FiniteGroup& g : catalog_groups(12)) {
    for (const FieldSpec& spec : sweep_fields()) {
      MaschkeVerdict v = verdict(g, spec);
      bool modular = char_divides(spec, static_cast<std::uint64_t>(g.order()));
      require((v.outcome == MaschkeVerdict::Outcome::NonSemisimple) == modular,
              g.label() + "/" + spec.to_string() + ": verdict contradicts char test");
      ++checks;
    }
  }
  return checks;
}

int check_oracle_agreement() {
  int checks = 0;
  for (const FiniteGroup& g : catalog_groups(12)) {
    for (std::uint32_t p : {2u, 3u}) {
      FieldSpec spec = FieldSpec::prime_field(p);
      if (!radical_oracle_feasible(g, spec)) continue;
      std::uint64_t size = 1;
      for (int i = 0; i < g.order(); ++i) size *= p;
      if (size > 4096) continue;  // the full-bound cases run in the acceptance suite
      RadicalBasis oracle = radical_oracle(g, spec);
      if (char_divides(spec, static_cast<std::uint64_t>(g.order()))) {
        RadicalBasis witness = modular_witness(g, spec);
        require(witness.spans_subset_of(oracle),
                g.label() + "/" + spec.to_string() + ": witness escapes the oracle radical");
      } else {
        RadicalBasis kernel = radical_nonmodular(g, spec);
        require(oracle.same_span(kernel),
                g.label() + "/" + spec.to_string() + ": oracle disagrees with gram kernel");
      }
      ++checks;
    }
  }
  return checks;
}

int check_lemma(Rng& rng) {
  int checks = 0;
  for (const auto& [group, p] :
       std::vector<std::pair<FiniteGroup, std::uint32_t>>{{FiniteGroup::cyclic(2), 2},
                                                          {FiniteGroup::cyclic(6), 3},
                                                          {FiniteGroup::symmetric(3), 2},
                                                          {FiniteGroup::dihedral(5), 5}}) {
    FieldSpec spec = FieldSpec::prime_field(p);
    RadicalBasis witness = modular_witness(group, spec);
    for (const GroupRingElement& e : witness.elements()) {
      LemmaReport report = lemma_nilpotency_check(e, witness, rng, 25);
      require(report.trailing_power >= 1 && report.trailing_power <= group.order(),
              "nilpotency exponent out of range");
      ++checks;
    }
  }
  return checks;
}

int check_trace_obstruction(Rng& rng) {
  int checks = 0;
  for (const auto& [group, spec] : fuzz_corpus()) {
    if (char_divides(spec, static_cast<std::uint64_t>(group.order()))) continue;
    for (int i = 0; i < 100; ++i) {
      GroupRingElement x = random_element(rng, group, spec);
      std::vector<Scalar> coeffs = x.coeffs();
      coeffs[0] = random_nonzero_scalar(rng, spec);
      GroupRingElement fixed(group, spec, coeffs);
      ExactMatrix m = embed(fixed);
      require(mat_trace(m) == fixed.tau(), "trace != n * a_1");
      require(!fixed.tau().is_zero(), "n * a_1 vanished in the non-modular case");
      require(!is_nilpotent(m).nilpotent,
              "matrix with nonzero trace claimed nilpotent");
      ++checks;
    }
  }
  return checks;
}

}  // namespace

SelftestSummary run_selftest(std::uint64_t seed, std::ostream& out) {
  std::vector<std::pair<std::string, std::function<int(Rng&)>>> checks = {
      {"field axioms, exhaustive over F_p (p <= 13)",
       [](Rng&) { return check_field_axioms_exhaustive(); }},
      {"field axioms, sampled over Q", check_field_axioms_rational},
      {"catalog group construction invariants", [](Rng&) { return check_catalog_groups(); }},
      {"regular representation axioms", [](Rng&) { return check_regular_representation(); }},
      {"embedding homomorphism + trace", check_embedding_homomorphism},
      {"circulant round trip + rejection", check_circulant_round_trip},
      {"gram identity over Q", [](Rng&) { return check_gram_identity(); }},
      {"maschke dichotomy over the catalog", [](Rng&) { return check_dichotomy(); }},
      {"radical oracle agreement (small algebras)",
       [](Rng&) { return check_oracle_agreement(); }},
      {"nilpotency lemma certificates", check_lemma},
      {"trace obstruction", check_trace_obstruction},
  };

  SelftestSummary summary;
  std::uint64_t stream = 0;
  for (auto& [name, fn] : checks) {
    Rng rng(seed + 1000003 * ++stream);
    try {
      int count = fn(rng);
      out << "ok   " << name << " (" << count << " checks)\n";
      ++summary.passed;
    } catch (const CheckFailure& f) {
      out << "FAIL " << name << ": " << f.message << "\n";
      ++summary.failed;
    } catch (const std::exception& e) {
      out << "FAIL " << name << ": unexpected error: " << e.what() << "\n";
      ++summary.failed;
    }
  }
  out << "selftest: " << summary.passed << " passed, " << summary.failed << " failed\n";
  return summary;
}

}  // namespace grouplet
