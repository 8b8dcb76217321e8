#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grouplet/exact_matrix.hpp"
#include "grouplet/field.hpp"

namespace grouplet {

/// Univariate polynomial over a FieldSpec, coefficients in ascending degree
/// with the leading coefficient nonzero (the zero polynomial has no
/// coefficients and degree -1).
class Polynomial {
 public:
  explicit Polynomial(const FieldSpec& spec);  // the zero polynomial
  Polynomial(const FieldSpec& spec, std::vector<Scalar> coeffs);  // trims leading zeros

  static Polynomial constant(const Scalar& c);
  /// The monomial x^k.
  static Polynomial monomial(const FieldSpec& spec, int k);

  const FieldSpec& spec() const { return spec_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;

  /// Coefficient of x^k; zero beyond the degree.
  Scalar coeff(int k) const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  void require_same_spec(const Polynomial& rhs) const;

  FieldSpec spec_;
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder of a by b (b nonzero), with deg r < deg b.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

/// The factorization g(x) = x^m * f(x) with f(0) != 0: m is the index of
/// the lowest nonzero coefficient, f the remaining shifted polynomial.
/// Rejects the zero polynomial.
struct PolySplit {
  int m = 0;
  Polynomial f;
};
PolySplit split_trailing_power(const Polynomial& g);

/// Horner evaluation of f at a square matrix; the constant term scales the
/// identity.
ExactMatrix poly_eval_matrix(const Polynomial& f, const ExactMatrix& a);

/// Monic least-degree polynomial with mu(A) = 0, found as the first linear
/// dependency among the vectorized powers I, A, A^2, ...
Polynomial minimal_polynomial(const ExactMatrix& a);

/// det(xI - A), monic of degree n, via Hessenberg reduction.
Polynomial characteristic_polynomial(const ExactMatrix& a);

}  // namespace grouplet
