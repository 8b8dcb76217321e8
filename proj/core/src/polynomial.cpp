#include "grouplet/polynomial.hpp"

#include <sstream>

namespace grouplet {

Polynomial::Polynomial(const FieldSpec& spec) : spec_(spec) {}

Polynomial::Polynomial(const FieldSpec& spec, std::vector<Scalar> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
  for (const Scalar& c : coeffs_) {
    if (c.spec() != spec_) {
      throw ValidationError("polynomial coefficient field mismatch: " + c.spec().to_string() +
                            " vs " + spec_.to_string());
    }
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) {
  return Polynomial(c.spec(), {c});
}

Polynomial Polynomial::monomial(const FieldSpec& spec, int k) {
  if (k < 0) throw ValidationError("monomial degree must be non-negative");
  std::vector<Scalar> coeffs(static_cast<std::size_t>(k) + 1, Scalar::zero(spec));
  coeffs.back() = Scalar::one(spec);
  return Polynomial(spec, std::move(coeffs));
}

bool Polynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back().is_one();
}

Scalar Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Scalar::zero(spec_);
  return coeffs_[static_cast<std::size_t>(k)];
}

void Polynomial::require_same_spec(const Polynomial& rhs) const {
  if (spec_ != rhs.spec_) {
    throw ValidationError("polynomial field mismatch: " + spec_.to_string() + " vs " +
                          rhs.spec_.to_string());
  }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  require_same_spec(rhs);
  std::size_t len = std::max(coeffs_.size(), rhs.coeffs_.size());
  std::vector<Scalar> out(len, Scalar::zero(spec_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return Polynomial(spec_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  require_same_spec(rhs);
  std::size_t len = std::max(coeffs_.size(), rhs.coeffs_.size());
  std::vector<Scalar> out(len, Scalar::zero(spec_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += -rhs.coeffs_[i];
  return Polynomial(spec_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  require_same_spec(rhs);
  if (is_zero() || rhs.is_zero()) return Polynomial(spec_);
  std::vector<Scalar> out(coeffs_.size() + rhs.coeffs_.size() - 1, Scalar::zero(spec_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(spec_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  return spec_ == rhs.spec_ && coeffs_ == rhs.coeffs_;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Scalar c = coeff(k);
    if (c.is_zero()) continue;
    std::string term = c.to_string();
    bool negative = !term.empty() && term[0] == '-';
    if (negative) term = term.substr(1);
    std::string body;
    if (k == 0) {
      body = term;
    } else {
      body = (term == "1") ? "" : term + "*";
      body += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    if (first) {
      out << (negative ? "-" : "") << body;
      first = false;
    } else {
      out << (negative ? " - " : " + ") << body;
    }
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ValidationError("polynomial division by zero");
  if (a.spec() != b.spec()) {
    throw ValidationError("polynomial field mismatch in division");
  }
  const FieldSpec& spec = a.spec();
  std::vector<Scalar> rem = a.coeffs();
  int db = b.degree();
  const Scalar lead_inv = b.coeff(db).inv();
  if (a.degree() < db) return {Polynomial(spec), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db) + 1, Scalar::zero(spec));
  for (int k = a.degree(); k >= db; --k) {
    const Scalar c = rem[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const Scalar q = c * lead_inv;
    quot[static_cast<std::size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] += -(q * b.coeff(j));
    }
  }
  return {Polynomial(spec, std::move(quot)), Polynomial(spec, std::move(rem))};
}

PolySplit split_trailing_power(const Polynomial& g) {
  if (g.is_zero()) {
    throw ValidationError("cannot split the zero polynomial into x^m * f(x)");
  }
  int m = 0;
  while (g.coeff(m).is_zero()) ++m;
  std::vector<Scalar> shifted;
  for (int k = m; k <= g.degree(); ++k) shifted.push_back(g.coeff(k));
  return {m, Polynomial(g.spec(), std::move(shifted))};
}

ExactMatrix poly_eval_matrix(const Polynomial& f, const ExactMatrix& a) {
  if (!a.is_square()) throw ValidationError("polynomial evaluation requires a square matrix");
  if (f.spec() != a.spec()) {
    throw ValidationError("polynomial/matrix field mismatch: " + f.spec().to_string() + " vs " +
                          a.spec().to_string());
  }
  int n = a.rows();
  if (f.is_zero()) return ExactMatrix(a.spec(), n, n);
  ExactMatrix result =
      ExactMatrix::identity(a.spec(), n).scaled(f.coeff(f.degree()));
  for (int k = f.degree() - 1; k >= 0; --k) {
    result = result * a;
    if (!f.coeff(k).is_zero()) {
      result = result + ExactMatrix::identity(a.spec(), n).scaled(f.coeff(k));
    }
  }
  return result;
}

Polynomial minimal_polynomial(const ExactMatrix& a) {
  if (!a.is_square()) throw ValidationError("minimal polynomial requires a square matrix");
  const FieldSpec& spec = a.spec();
  const int n = a.rows();
  const std::size_t width = static_cast<std::size_t>(n) * n;

  // Echelon basis of the vectorized powers seen so far, each row carrying
  // the combination that produced it from I, A, A^2, ...
  struct Row {
    std::vector<Scalar> vec;
    std::vector<Scalar> combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;

  auto vectorize = [&](const ExactMatrix& m) {
    std::vector<Scalar> v;
    v.reserve(width);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v.push_back(m.at(i, j));
    return v;
  };

  ExactMatrix power = ExactMatrix::identity(spec, n);
  for (int t = 0; t <= n; ++t) {
    std::vector<Scalar> v = vectorize(power);
    std::vector<Scalar> combo(static_cast<std::size_t>(n) + 1, Scalar::zero(spec));
    combo[static_cast<std::size_t>(t)] = Scalar::one(spec);

    for (const Row& row : rows) {  // rows kept in ascending pivot order
      const Scalar factor = v[row.pivot];
      if (factor.is_zero()) continue;
      for (std::size_t j = row.pivot; j < width; ++j) {
        if (row.vec[j].is_zero()) continue;
        v[j] += -(factor * row.vec[j]);
      }
      for (std::size_t j = 0; j < combo.size(); ++j) {
        if (row.combo[j].is_zero()) continue;
        combo[j] += -(factor * row.combo[j]);
      }
    }

    std::size_t pivot = 0;
    while (pivot < width && v[pivot].is_zero()) ++pivot;
    if (pivot == width) {
      // First dependency: combo expresses 0 = sum combo[s] A^s with
      // combo[t] = 1, the monic minimal polynomial.
      return Polynomial(spec, std::move(combo));
    }

    const Scalar pinv = v[pivot].inv();
    for (std::size_t j = pivot; j < width; ++j) v[j] *= pinv;
    for (std::size_t j = 0; j < combo.size(); ++j) combo[j] *= pinv;
    Row fresh{std::move(v), std::move(combo), pivot};
    std::size_t pos = 0;
    while (pos < rows.size() && rows[pos].pivot < pivot) ++pos;
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(fresh));

    power = power * a;
  }
  throw CertificateViolation("no dependency among matrix powers up to the dimension");
}

Polynomial characteristic_polynomial(const ExactMatrix& a) {
  if (!a.is_square()) {
    throw ValidationError("characteristic polynomial requires a square matrix");
  }
  const FieldSpec& spec = a.spec();
  const int n = a.rows();

  // Similarity reduction to upper Hessenberg form with exact pivots.
  ExactMatrix h = a;
  for (int c = 0; c + 2 < n; ++c) {
    int pivot = -1;
    for (int r = c + 1; r < n; ++r) {
      if (!h.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(h.at(pivot, j), h.at(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h.at(i, pivot), h.at(i, c + 1));
    }
    const Scalar pinv = h.at(c + 1, c).inv();
    for (int r = c + 2; r < n; ++r) {
      if (h.at(r, c).is_zero()) continue;
      const Scalar f = h.at(r, c) * pinv;
      for (int j = 0; j < n; ++j) h.at(r, j) += -(f * h.at(c + 1, j));
      for (int i = 0; i < n; ++i) h.at(i, c + 1) += f * h.at(i, r);
    }
  }

  // Char polys of the leading principal blocks of a Hessenberg matrix:
  // p_m = (x - h_mm) p_{m-1} - sum_i h_im * (prod of subdiagonals) p_{i-1}.
  std::vector<Polynomial> p;
  p.push_back(Polynomial::constant(Scalar::one(spec)));
  Polynomial x = Polynomial::monomial(spec, 1);
  for (int m = 1; m <= n; ++m) {
    Polynomial pm = (x - Polynomial::constant(h.at(m - 1, m - 1))) * p[static_cast<std::size_t>(m - 1)];
    Scalar subdiag_prod = Scalar::one(spec);
    for (int i = m - 1; i >= 1; --i) {
      subdiag_prod *= h.at(i, i - 1);
      if (subdiag_prod.is_zero()) break;
      const Scalar him = h.at(i - 1, m - 1);
      if (him.is_zero()) continue;
      pm = pm - Polynomial::constant(him * subdiag_prod) * p[static_cast<std::size_t>(i - 1)];
    }
    p.push_back(std::move(pm));
  }
  return p.back();
}

}  // namespace grouplet
