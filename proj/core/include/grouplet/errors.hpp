#pragma once

#include <stdexcept>
#include <string>

namespace grouplet {

/// Invalid input: bad spec strings, malformed tables, mismatched domains,
/// violated preconditions. Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Input exceeds the supported size bounds (group order, algebra size).
class CapacityError : public ValidationError {
 public:
  explicit CapacityError(const std::string& what) : ValidationError(what) {}
};

/// Two independently computed results disagree, or a stored certificate
/// fails re-verification. Always an implementation bug, never a user
/// error. Maps to CLI exit code 2.
class CertificateViolation : public std::runtime_error {
 public:
  explicit CertificateViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace grouplet
