#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouplet/field.hpp"

namespace grouplet {

/// Dense matrix with exact Scalar entries, all over one FieldSpec.
class ExactMatrix {
 public:
  /// Zero matrix of the given shape.
  ExactMatrix(const FieldSpec& spec, int rows, int cols);
  ExactMatrix(const FieldSpec& spec, int rows, int cols, std::vector<Scalar> entries);

  static ExactMatrix identity(const FieldSpec& spec, int n);

  const FieldSpec& spec() const { return spec_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool is_zero() const;

  ExactMatrix operator+(const ExactMatrix& rhs) const;
  ExactMatrix operator-(const ExactMatrix& rhs) const;
  ExactMatrix operator*(const ExactMatrix& rhs) const;
  ExactMatrix scaled(const Scalar& c) const;

  bool operator==(const ExactMatrix& rhs) const;
  bool operator!=(const ExactMatrix& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  void require_same_shape(const ExactMatrix& rhs) const;
  void require_same_spec(const ExactMatrix& rhs) const;

  FieldSpec spec_;
  int rows_;
  int cols_;
  std::vector<Scalar> entries_;  // row-major
};

/// A^e by repeated squaring; A^0 is the identity.
ExactMatrix mat_pow(const ExactMatrix& a, std::uint64_t e);

Scalar mat_trace(const ExactMatrix& a);

/// Exact determinant by Gaussian elimination with first-nonzero pivoting.
Scalar determinant(const ExactMatrix& a);

bool is_invertible(const ExactMatrix& a);

/// Row reduction utilities shared by kernel computation and the span
/// arithmetic in the radical machinery. Rows are coefficient vectors.

struct RowEchelon {
  std::vector<std::vector<Scalar>> rows;  // reduced echelon rows, nonzero only
  std::vector<int> pivot_cols;            // ascending, one per row
  int width = 0;
};

/// Reduced row echelon form of the given rows; zero rows are dropped and
/// pivots appear in ascending column order.
RowEchelon rref_rows(const std::vector<std::vector<Scalar>>& rows, int width);

/// Reduces v against the echelon rows; the result has zeros in every pivot
/// column. v lies in the span iff the result is the zero vector.
std::vector<Scalar> reduce_against(const RowEchelon& ech, std::vector<Scalar> v);

/// Inserts v into the echelon basis unless it reduces to zero. Returns
/// true when the span grew. Keeps the basis fully reduced.
bool echelon_insert(RowEchelon& ech, std::vector<Scalar> v);

/// Basis of the right null space { x : A x = 0 }, derived from the RREF
/// free columns in ascending order; empty iff the kernel is trivial.
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& a);

struct NilpotencyResult {
  bool nilpotent = false;
  std::optional<int> index;  // least m with A^m = 0, when nilpotent
};

/// Decides A^n = 0 by repeated squaring, then locates the exact nilpotency
/// index by binary search over powers.
NilpotencyResult is_nilpotent(const ExactMatrix& a);

}  // namespace grouplet
