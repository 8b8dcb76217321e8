#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "grouplet/errors.hpp"

namespace grouplet {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Identifies the coefficient field: the rationals Q or a prime field F_p
/// with p < 2^31. Primality is verified at construction by trial division.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals();
  static FieldSpec prime_field(std::uint32_t p);

  /// Parses the field strings used by the CLI and file formats: `Q` or
  /// `F<p>` (e.g. `F2`, `F7`). Rejects non-prime moduli.
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::PrimeField; }

  /// Modulus of a prime field; invalid to call for Q.
  std::uint32_t prime() const;

  /// 0 for Q, p for F_p.
  std::uint64_t characteristic() const;

  std::string to_string() const;

  bool operator==(const FieldSpec& other) const = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

/// True iff the field characteristic divides n (always false over Q).
/// Requires n >= 1.
bool char_divides(const FieldSpec& spec, std::uint64_t n);

/// An exact field element in canonical form: the reduced residue in [0, p)
/// for F_p, a reduced fraction with positive denominator for Q. Equal
/// scalars always have identical representations.
class Scalar {
 public:
  static Scalar zero(const FieldSpec& spec);
  static Scalar one(const FieldSpec& spec);
  static Scalar from_integer(const FieldSpec& spec, std::int64_t value);
  static Scalar from_big(const FieldSpec& spec, const BigInt& value);

  /// Parses an element literal: an integer over F_p, an integer or `n/d`
  /// fraction over Q. Reports the offending token on failure.
  static Scalar parse(const FieldSpec& spec, std::string_view text);

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);

  /// Multiplicative inverse; division-by-zero error on the zero scalar.
  Scalar inv() const;

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

  /// Canonical residue in [0, p); invalid to call over Q.
  std::int64_t residue() const;
  /// Exact rational value; invalid to call over F_p.
  const BigRational& rational() const;

 private:
  explicit Scalar(const FieldSpec& spec) : spec_(spec) {}
  void require_same_spec(const Scalar& rhs) const;

  FieldSpec spec_;
  std::int64_t res_ = 0;  // active for PrimeField
  BigRational rat_ = 0;   // active for Rationals
};

}  // namespace grouplet
