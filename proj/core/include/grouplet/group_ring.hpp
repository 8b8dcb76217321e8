#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "grouplet/field.hpp"
#include "grouplet/group.hpp"

namespace grouplet {

/// An element sum_i a_i g_i of the group algebra k[G], stored as the dense
/// coefficient vector (a_1, ..., a_n) in the group's element order. The
/// group handle is held by value and shares its table.
class GroupRingElement {
 public:
  GroupRingElement(const FiniteGroup& group, const FieldSpec& spec, std::vector<Scalar> coeffs);

  static GroupRingElement zero(const FiniteGroup& group, const FieldSpec& spec);
  static GroupRingElement identity(const FiniteGroup& group, const FieldSpec& spec);
  /// The element 1 * g_i.
  static GroupRingElement basis(const FiniteGroup& group, const FieldSpec& spec, int i);
  /// The sum of all group elements (every coefficient 1). Central, with
  /// sigma^2 = n * sigma, hence square-zero exactly when char k divides n.
  static GroupRingElement sigma(const FiniteGroup& group, const FieldSpec& spec);

  /// Parses the CLI literal syntax: comma-separated coefficients in group
  /// order, rationals as `p/q` (e.g. `2,5,7` or `1/2,0,-3`).
  static GroupRingElement parse(const FiniteGroup& group, const FieldSpec& spec,
                                std::string_view literal);

  const FiniteGroup& group() const { return group_; }
  const FieldSpec& spec() const { return spec_; }
  int size() const { return static_cast<int>(coeffs_.size()); }
  const Scalar& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  GroupRingElement operator+(const GroupRingElement& rhs) const;
  GroupRingElement operator-() const;
  GroupRingElement operator-(const GroupRingElement& rhs) const;
  /// Convolution over the Cayley table: (x*y)_m = sum over g_i g_j = g_m
  /// of x_i y_j.
  GroupRingElement operator*(const GroupRingElement& rhs) const;
  GroupRingElement scaled(const Scalar& c) const;

  /// x * g_j^{-1}; moves the j-th coefficient onto the identity, the
  /// normalization step used before any diagonal/trace argument.
  GroupRingElement translate(int j) const;

  /// The scaled trace functional tau(sum a_i g_i) = n * a_1, computed in
  /// the coefficient field. Agrees with the matrix trace of the regular
  /// embedding (a cross-module property, not the definition).
  Scalar tau() const;

  /// The augmentation: the plain sum of coefficients.
  Scalar augmentation() const;

  bool operator==(const GroupRingElement& rhs) const;
  bool operator!=(const GroupRingElement& rhs) const { return !(*this == rhs); }

  /// Display form a1*1 + a2*g2 + ... with 1-based element names; zero
  /// coefficients are omitted.
  std::string to_string() const;

 private:
  void require_compatible(const GroupRingElement& rhs) const;

  FiniteGroup group_;
  FieldSpec spec_;
  std::vector<Scalar> coeffs_;
};

}  // namespace grouplet
