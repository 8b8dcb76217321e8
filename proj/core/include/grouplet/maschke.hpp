#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grouplet/circulant.hpp"
#include "grouplet/exact_matrix.hpp"
#include "grouplet/field.hpp"
#include "grouplet/group.hpp"
#include "grouplet/group_ring.hpp"
#include "grouplet/polynomial.hpp"
#include "grouplet/sampling.hpp"

namespace grouplet {

/// Gram matrix of the trace form: entry (i, j) = tau(g_i g_j), which is
/// n when g_i g_j = 1 and 0 otherwise. Equals n times the permutation
/// matrix of the inversion map, so its determinant is +-n^n.
struct GramMatrix {
  ExactMatrix matrix;
  FiniteGroup group;
  FieldSpec spec;
};

GramMatrix gram_matrix(const FiniteGroup& group, const FieldSpec& spec);

/// Sign of the permutation i -> inverse_index(i); the inversion map is an
/// involution, so this is -1 to the number of its 2-cycles.
int inversion_sign(const FiniteGroup& group);

enum class RadicalMethod { GramKernel, Oracle, WitnessIdealClosure };

std::string method_name(RadicalMethod method);

/// A verified basis of (a subspace of) the Jacobson radical, held in
/// reduced row-echelon form with pivots ascending. Construction checks the
/// certificate invariants: every basis element has a nilpotent regular
/// embedding, and the span is closed under left and right multiplication
/// by every group element.
class RadicalBasis {
 public:
  static RadicalBasis checked(const FiniteGroup& group, const FieldSpec& spec,
                              const std::vector<GroupRingElement>& elements,
                              RadicalMethod method);

  const FiniteGroup& group() const { return group_; }
  const FieldSpec& spec() const { return spec_; }
  RadicalMethod method() const { return method_; }
  int dimension() const { return static_cast<int>(elements_.size()); }
  const std::vector<GroupRingElement>& elements() const { return elements_; }

  bool contains(const GroupRingElement& x) const;
  bool spans_subset_of(const RadicalBasis& other) const;
  bool same_span(const RadicalBasis& other) const;

 private:
  RadicalBasis(const FiniteGroup& group, const FieldSpec& spec, RadicalMethod method)
      : group_(group), spec_(spec), method_(method), echelon_{} {}

  FiniteGroup group_;
  FieldSpec spec_;
  RadicalMethod method_;
  RowEchelon echelon_;
  std::vector<GroupRingElement> elements_;
};

/// Kernel of the Gram matrix, valid exactly when the characteristic does
/// not divide the group order; always empty there, by the trace argument.
RadicalBasis radical_nonmodular(const FiniteGroup& group, const FieldSpec& spec);

/// Two-sided ideal generated by sigma = sum of all group elements, valid
/// exactly in the modular case. Verifies sigma != 0, sigma^2 = 0 and
/// centrality before closing up. A lower bound for the radical, dimension
/// at least 1.
RadicalBasis modular_witness(const FiniteGroup& group, const FieldSpec& spec);

/// True when the brute-force oracle can run: a prime field with
/// |F|^n <= 2^16.
bool radical_oracle_feasible(const FiniteGroup& group, const FieldSpec& spec);

/// Exhaustive quasi-regularity oracle: the set of alpha such that
/// 1 - x*alpha is invertible for every x in the algebra, which is exactly
/// rad(k[G]). Invertibility is decided by the determinant of the regular
/// embedding, precomputed for the whole algebra. Requires
/// radical_oracle_feasible.
RadicalBasis radical_oracle(const FiniteGroup& group, const FieldSpec& spec);

struct LemmaReport {
  Polynomial min_poly;     // x^m for a genuine radical element
  int trailing_power;      // the m of min_poly = x^m * f, f = 1
  int unit_checks_passed;  // perturbations u + alpha*b verified invertible
};

/// Certifies nilpotency of a radical element the way the splitting lemma
/// dictates: the minimal polynomial of embed(alpha) must be a pure power
/// x^m, and u + alpha*b must be a unit for sampled units u and elements b.
/// alpha must lie in the span of rad. Any failed assertion raises
/// CertificateViolation carrying the counterexample.
LemmaReport lemma_nilpotency_check(const GroupRingElement& alpha, const RadicalBasis& rad,
                                   Rng& rng, int samples = 100);

struct SemisimpleCertificate {
  Scalar gram_det;       // recomputed over the coefficient field
  Scalar expected_det;   // inversion_sign * n^n reduced into the field
  int inversion_sign;
  bool oracle_checked;
};

struct NonSemisimpleCertificate {
  RadicalBasis witness;  // the sigma ideal, method WitnessIdealClosure
  std::vector<int> nilpotency_indices;
  GroupRingElement sigma;
  std::optional<int> oracle_dimension;  // exact radical dimension when the oracle ran
};

/// The executable dichotomy: semisimple iff the characteristic does not
/// divide the group order, each branch carrying a recomputable
/// certificate. Internal disagreement between independent methods raises
/// CertificateViolation (an implementation bug, never an input error).
struct MaschkeVerdict {
  enum class Outcome { Semisimple, NonSemisimple };

  FiniteGroup group;
  FieldSpec spec;
  Outcome outcome;
  std::optional<SemisimpleCertificate> semisimple;
  std::optional<NonSemisimpleCertificate> non_semisimple;
  /// Known exactly for every semisimple verdict and for oracle-backed
  /// modular verdicts; otherwise only the lower bound below is available.
  std::optional<int> exact_radical_dimension;
  int radical_dimension_lower_bound;
};

MaschkeVerdict verdict(const FiniteGroup& group, const FieldSpec& spec);

}  // namespace grouplet
