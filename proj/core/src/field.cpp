#include "grouplet/field.hpp"

#include <cctype>

namespace grouplet {

namespace {

constexpr std::uint64_t kMaxPrime = (1ull << 31) - 1;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

// Extended Euclid: returns x with a*x == 1 (mod p), a in [1, p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  std::int64_t x = old_s % p;
  return x < 0 ? x + p : x;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Accepts an optional leading '-' followed by digits.
bool is_integer_token(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return all_digits(s);
}

}  // namespace

FieldSpec FieldSpec::rationals() { return FieldSpec(Kind::Rationals, 0); }

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (p > kMaxPrime) {
    throw ValidationError("field modulus " + std::to_string(p) + " exceeds 2^31 - 1");
  }
  if (!is_prime(p)) {
    throw ValidationError("field modulus " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(Kind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text.front() == 'F' && all_digits(text.substr(1))) {
    unsigned long long p = 0;
    for (char c : text.substr(1)) {
      p = p * 10 + static_cast<unsigned long long>(c - '0');
      if (p > kMaxPrime) {
        throw ValidationError("invalid field spec '" + std::string(text) +
                              "': modulus exceeds 2^31 - 1");
      }
    }
    try {
      return prime_field(static_cast<std::uint32_t>(p));
    } catch (const ValidationError& e) {
      throw ValidationError("invalid field spec '" + std::string(text) + "': " + e.what());
    }
  }
  throw ValidationError("invalid field spec '" + std::string(text) +
                        "' (expected Q or F<p> with p prime)");
}

std::uint32_t FieldSpec::prime() const {
  if (kind_ != Kind::PrimeField) {
    throw ValidationError("prime() called on the rationals");
  }
  return p_;
}

std::uint64_t FieldSpec::characteristic() const {
  return kind_ == Kind::PrimeField ? p_ : 0;
}

std::string FieldSpec::to_string() const {
  return kind_ == Kind::Rationals ? "Q" : "F" + std::to_string(p_);
}

bool char_divides(const FieldSpec& spec, std::uint64_t n) {
  if (n == 0) throw ValidationError("char_divides requires n >= 1");
  if (spec.kind() == FieldSpec::Kind::Rationals) return false;
  return n % spec.prime() == 0;
}

Scalar Scalar::zero(const FieldSpec& spec) { return Scalar(spec); }

Scalar Scalar::one(const FieldSpec& spec) { return from_integer(spec, 1); }

Scalar Scalar::from_integer(const FieldSpec& spec, std::int64_t value) {
  Scalar s(spec);
  if (spec.is_prime_field()) {
    std::int64_t p = spec.prime();
    s.res_ = ((value % p) + p) % p;
  } else {
    s.rat_ = value;
  }
  return s;
}

Scalar Scalar::from_big(const FieldSpec& spec, const BigInt& value) {
  Scalar s(spec);
  if (spec.is_prime_field()) {
    BigInt p = spec.prime();
    BigInt r = value % p;
    if (r < 0) r += p;
    s.res_ = r.convert_to<std::int64_t>();
  } else {
    s.rat_ = value;
  }
  return s;
}

Scalar Scalar::parse(const FieldSpec& spec, std::string_view text) {
  auto fail = [&]() -> ValidationError {
    return ValidationError("invalid " + spec.to_string() + " element literal '" +
                           std::string(text) + "'");
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(text)) throw fail();
    return from_big(spec, BigInt(std::string(text)));
  }
  if (!spec.is_prime_field()) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_token(num) || !all_digits(den)) throw fail();
    BigInt d{std::string(den)};
    if (d == 0) throw ValidationError("zero denominator in literal '" + std::string(text) + "'");
    Scalar s(spec);
    s.rat_ = BigRational(BigInt(std::string(num))) / BigRational(d);
    return s;
  }
  throw ValidationError("fraction literal '" + std::string(text) + "' is not valid over " +
                        spec.to_string());
}

bool Scalar::is_zero() const {
  return spec_.is_prime_field() ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
  return spec_.is_prime_field() ? res_ == 1 : rat_ == 1;
}

void Scalar::require_same_spec(const Scalar& rhs) const {
  if (spec_ != rhs.spec_) {
    throw ValidationError("field spec mismatch: " + spec_.to_string() + " vs " +
                          rhs.spec_.to_string());
  }
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  require_same_spec(rhs);
  Scalar s(spec_);
  if (spec_.is_prime_field()) {
    std::int64_t p = spec_.prime();
    s.res_ = (res_ + rhs.res_) % p;
  } else {
    s.rat_ = rat_ + rhs.rat_;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
  require_same_spec(rhs);
  Scalar s(spec_);
  if (spec_.is_prime_field()) {
    // residues < 2^31, so the product fits in int64
    s.res_ = (res_ * rhs.res_) % spec_.prime();
  } else {
    s.rat_ = rat_ * rhs.rat_;
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(spec_);
  if (spec_.is_prime_field()) {
    std::int64_t p = spec_.prime();
    s.res_ = (p - res_) % p;
  } else {
    s.rat_ = -rat_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) { return *this = *this + rhs; }
Scalar& Scalar::operator*=(const Scalar& rhs) { return *this = *this * rhs; }

Scalar Scalar::inv() const {
  if (is_zero()) {
    throw ValidationError("division by zero in " + spec_.to_string());
  }
  Scalar s(spec_);
  if (spec_.is_prime_field()) {
    s.res_ = mod_inverse(res_, spec_.prime());
  } else {
    s.rat_ = 1 / rat_;
  }
  return s;
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (spec_ != rhs.spec_) return false;
  return spec_.is_prime_field() ? res_ == rhs.res_ : rat_ == rhs.rat_;
}

std::string Scalar::to_string() const {
  if (spec_.is_prime_field()) return std::to_string(res_);
  BigInt num = boost::multiprecision::numerator(rat_);
  BigInt den = boost::multiprecision::denominator(rat_);
  std::string out = num.str();
  if (den != 1) out += "/" + den.str();
  return out;
}

std::int64_t Scalar::residue() const {
  if (!spec_.is_prime_field()) {
    throw ValidationError("residue() called on a rational scalar");
  }
  return res_;
}

const BigRational& Scalar::rational() const {
  if (spec_.is_prime_field()) {
    throw ValidationError("rational() called on a prime-field scalar");
  }
  return rat_;
}

}  // namespace grouplet
