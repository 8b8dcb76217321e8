#include "grouplet/circulant.hpp"

namespace grouplet {

RegularRepMatrix::RegularRepMatrix(const FiniteGroup& group, int g) : group_(group), g_(g) {
  int n = group.order();
  if (g < 0 || g >= n) {
    throw ValidationError("group element index " + std::to_string(g) + " out of range");
  }
  perm_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm_[static_cast<std::size_t>(i)] = group.op(i, g);
}

ExactMatrix RegularRepMatrix::densify(const FieldSpec& spec) const {
  int n = group_.order();
  ExactMatrix m(spec, n, n);
  for (int i = 0; i < n; ++i) m.at(i, perm_[static_cast<std::size_t>(i)]) = Scalar::one(spec);
  return m;
}

RegularRepMatrix regular_rep(const FiniteGroup& group, int g) {
  return RegularRepMatrix(group, g);
}

ExactMatrix embed(const GroupRingElement& x) {
  const FiniteGroup& g = x.group();
  int n = g.order();
  ExactMatrix m(x.spec(), n, n);
  for (int i = 0; i < n; ++i) {
    int inv_i = g.inverse_index(i);
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = x.coeff(g.op(inv_i, j));
    }
  }
  return m;
}

namespace {

// Returns a violating (i, j) or (-1, -1). Entry (i, j) must equal the
// row-0 entry of its class representative m = g_i^{-1} g_j, because
// g_0^{-1} g_m = g_m puts (0, m) in the same class.
std::pair<int, int> first_circulant_violation(const ExactMatrix& m, const FiniteGroup& group) {
  int n = group.order();
  for (int i = 0; i < n; ++i) {
    int inv_i = group.inverse_index(i);
    for (int j = 0; j < n; ++j) {
      int cls = group.op(inv_i, j);
      if (m.at(i, j) != m.at(0, cls)) return {i, j};
    }
  }
  return {-1, -1};
}

}  // namespace

bool is_g_circulant(const ExactMatrix& m, const FiniteGroup& group) {
  if (!m.is_square() || m.rows() != group.order()) {
    throw ValidationError("matrix is " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", group " + group.label() + " has order " +
                          std::to_string(group.order()));
  }
  return first_circulant_violation(m, group).first < 0;
}

GroupRingElement extract(const ExactMatrix& m, const FiniteGroup& group) {
  if (!m.is_square() || m.rows() != group.order()) {
    throw ValidationError("matrix is " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", group " + group.label() + " has order " +
                          std::to_string(group.order()));
  }
  auto [i, j] = first_circulant_violation(m, group);
  if (i >= 0) {
    int cls = group.op(group.inverse_index(i), j);
    throw ValidationError(
        "matrix is not " + group.label() + "-circulant: entry (" + std::to_string(i + 1) + "," +
        std::to_string(j + 1) + ") = " + m.at(i, j).to_string() + " but entry (1," +
        std::to_string(cls + 1) + ") = " + m.at(0, cls).to_string() +
        " lies in the same g_i^-1 g_j class");
  }
  std::vector<Scalar> coeffs;
  coeffs.reserve(static_cast<std::size_t>(group.order()));
  for (int c = 0; c < group.order(); ++c) coeffs.push_back(m.at(0, c));
  return GroupRingElement(group, m.spec(), std::move(coeffs));
}

bool rep_product_identity(int g, int h, const FiniteGroup& group) {
  RegularRepMatrix ag(group, g);
  RegularRepMatrix ah(group, h);
  RegularRepMatrix agh(group, group.op(g, h));
  int n = group.order();
  for (int i = 0; i < n; ++i) {
    std::size_t ui = static_cast<std::size_t>(i);
    if (ah.perm()[static_cast<std::size_t>(ag.perm()[ui])] != agh.perm()[ui]) return false;
  }
  return true;
}

}  // namespace grouplet
