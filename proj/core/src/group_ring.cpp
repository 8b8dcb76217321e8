#include "grouplet/group_ring.hpp"

#include <sstream>

namespace grouplet {

GroupRingElement::GroupRingElement(const FiniteGroup& group, const FieldSpec& spec,
                                   std::vector<Scalar> coeffs)
    : group_(group), spec_(spec), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != group.order()) {
    throw ValidationError("coefficient vector has " + std::to_string(coeffs_.size()) +
                          " entries, group order is " + std::to_string(group.order()));
  }
  for (const Scalar& c : coeffs_) {
    if (c.spec() != spec_) {
      throw ValidationError("coefficient field mismatch: " + c.spec().to_string() + " vs " +
                            spec_.to_string());
    }
  }
}

GroupRingElement GroupRingElement::zero(const FiniteGroup& group, const FieldSpec& spec) {
  return GroupRingElement(group, spec,
                          std::vector<Scalar>(group.order(), Scalar::zero(spec)));
}

GroupRingElement GroupRingElement::identity(const FiniteGroup& group, const FieldSpec& spec) {
  return basis(group, spec, 0);
}

GroupRingElement GroupRingElement::basis(const FiniteGroup& group, const FieldSpec& spec, int i) {
  if (i < 0 || i >= group.order()) {
    throw ValidationError("basis index " + std::to_string(i) + " out of range");
  }
  std::vector<Scalar> c(group.order(), Scalar::zero(spec));
  c[static_cast<std::size_t>(i)] = Scalar::one(spec);
  return GroupRingElement(group, spec, std::move(c));
}

GroupRingElement GroupRingElement::sigma(const FiniteGroup& group, const FieldSpec& spec) {
  return GroupRingElement(group, spec,
                          std::vector<Scalar>(group.order(), Scalar::one(spec)));
}

GroupRingElement GroupRingElement::parse(const FiniteGroup& group, const FieldSpec& spec,
                                         std::string_view literal) {
  std::vector<Scalar> coeffs;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = literal.find(',', start);
    std::string_view token = comma == std::string_view::npos
                                 ? literal.substr(start)
                                 : literal.substr(start, comma - start);
    coeffs.push_back(Scalar::parse(spec, token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(coeffs.size()) != group.order()) {
    throw ValidationError("element literal has " + std::to_string(coeffs.size()) +
                          " coefficients, group " + group.label() + " has order " +
                          std::to_string(group.order()));
  }
  return GroupRingElement(group, spec, std::move(coeffs));
}

bool GroupRingElement::is_zero() const {
  for (const Scalar& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void GroupRingElement::require_compatible(const GroupRingElement& rhs) const {
  if (spec_ != rhs.spec_) {
    throw ValidationError("field spec mismatch: " + spec_.to_string() + " vs " +
                          rhs.spec_.to_string());
  }
  if (!group_.same_structure(rhs.group_)) {
    throw ValidationError("group mismatch: " + group_.label() + " vs " + rhs.group_.label());
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& rhs) const {
  require_compatible(rhs);
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] + rhs.coeffs_[i]);
  return GroupRingElement(group_, spec_, std::move(out));
}

GroupRingElement GroupRingElement::operator-() const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const Scalar& c : coeffs_) out.push_back(-c);
  return GroupRingElement(group_, spec_, std::move(out));
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& rhs) const {
  return *this + (-rhs);
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
  require_compatible(rhs);
  int n = group_.order();
  std::vector<Scalar> out(static_cast<std::size_t>(n), Scalar::zero(spec_));
  for (int i = 0; i < n; ++i) {
    if (coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (rhs.coeffs_[static_cast<std::size_t>(j)].is_zero()) continue;
      int m = group_.op(i, j);
      out[static_cast<std::size_t>(m)] +=
          coeffs_[static_cast<std::size_t>(i)] * rhs.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return GroupRingElement(group_, spec_, std::move(out));
}

GroupRingElement GroupRingElement::scaled(const Scalar& c) const {
  if (c.spec() != spec_) {
    throw ValidationError("field spec mismatch: " + c.spec().to_string() + " vs " +
                          spec_.to_string());
  }
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const Scalar& a : coeffs_) out.push_back(a * c);
  return GroupRingElement(group_, spec_, std::move(out));
}

GroupRingElement GroupRingElement::translate(int j) const {
  int n = group_.order();
  if (j < 0 || j >= n) {
    throw ValidationError("translate index " + std::to_string(j) + " out of range");
  }
  int k = group_.inverse_index(j);
  std::vector<Scalar> out(static_cast<std::size_t>(n), Scalar::zero(spec_));
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(group_.op(i, k))] = coeffs_[static_cast<std::size_t>(i)];
  }
  return GroupRingElement(group_, spec_, std::move(out));
}

Scalar GroupRingElement::tau() const {
  return Scalar::from_integer(spec_, group_.order()) * coeffs_[0];
}

Scalar GroupRingElement::augmentation() const {
  Scalar s = Scalar::zero(spec_);
  for (const Scalar& c : coeffs_) s += c;
  return s;
}

bool GroupRingElement::operator==(const GroupRingElement& rhs) const {
  if (spec_ != rhs.spec_) return false;
  if (!group_.same_structure(rhs.group_)) return false;
  return coeffs_ == rhs.coeffs_;
}

std::string GroupRingElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string term = c.to_string();
    bool negative = !term.empty() && term[0] == '-';
    if (negative) term = term.substr(1);
    std::string name = i == 0 ? "1" : "g" + std::to_string(i + 1);
    std::string body = (term == "1") ? name : term + "*" + name;
    if (first) {
      out << (negative ? "-" : "") << body;
      first = false;
    } else {
      out << (negative ? " - " : " + ") << body;
    }
  }
  if (first) return "0";
  return out.str();
}

}  // namespace grouplet
