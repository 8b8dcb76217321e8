#pragma once

#include <vector>

#include "grouplet/exact_matrix.hpp"
#include "grouplet/group.hpp"
#include "grouplet/group_ring.hpp"

namespace grouplet {

/// The right regular representation matrix A^g with entries
/// A^g[i][j] = 1 iff g_i * g = g_j. Stored as the permutation
/// i -> index of g_i * g; densified on demand.
class RegularRepMatrix {
 public:
  RegularRepMatrix(const FiniteGroup& group, int g);

  const FiniteGroup& group() const { return group_; }
  /// Index of the represented group element.
  int element() const { return g_; }
  /// perm[i] = column of the single 1 in row i.
  const std::vector<int>& perm() const { return perm_; }

  ExactMatrix densify(const FieldSpec& spec) const;

 private:
  FiniteGroup group_;
  int g_;
  std::vector<int> perm_;
};

RegularRepMatrix regular_rep(const FiniteGroup& group, int g);

/// The algebra embedding x = sum a_i g_i |-> B = sum a_i A^{g_i}, built
/// directly from B[i][j] = a_{index of g_i^{-1} g_j}. Every diagonal entry
/// of the result equals the identity coefficient a_1.
ExactMatrix embed(const GroupRingElement& x);

/// True iff M is constant on the classes g_i^{-1} g_j, i.e. lies in the
/// image of embed for this group. O(n^2): each entry is compared against
/// the row-0 representative of its class.
bool is_g_circulant(const ExactMatrix& m, const FiniteGroup& group);

/// Inverse of embed: reads the coefficients off row 0 after verifying the
/// full circulant structure. Rejects non-circulant input, naming a
/// violating index quadruple.
GroupRingElement extract(const ExactMatrix& m, const FiniteGroup& group);

/// Checks A^g * A^h = A^{gh} at the permutation level.
bool rep_product_identity(int g, int h, const FiniteGroup& group);

}  // namespace grouplet
