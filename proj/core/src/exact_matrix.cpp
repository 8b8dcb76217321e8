#include "grouplet/exact_matrix.hpp"

#include <bit>
#include <sstream>

namespace grouplet {

ExactMatrix::ExactMatrix(const FieldSpec& spec, int rows, int cols)
    : spec_(spec), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, Scalar::zero(spec)) {
  if (rows < 1 || cols < 1) throw ValidationError("matrix dimensions must be positive");
}

ExactMatrix::ExactMatrix(const FieldSpec& spec, int rows, int cols, std::vector<Scalar> entries)
    : spec_(spec), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 1 || cols < 1) throw ValidationError("matrix dimensions must be positive");
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw ValidationError("matrix entry count does not match dimensions");
  }
  for (const Scalar& e : entries_) {
    if (e.spec() != spec_) {
      throw ValidationError("matrix entry field mismatch: " + e.spec().to_string() + " vs " +
                            spec_.to_string());
    }
  }
}

ExactMatrix ExactMatrix::identity(const FieldSpec& spec, int n) {
  ExactMatrix m(spec, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(spec);
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const Scalar& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

void ExactMatrix::require_same_shape(const ExactMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw ValidationError("matrix shape mismatch: " + std::to_string(rows_) + "x" +
                          std::to_string(cols_) + " vs " + std::to_string(rhs.rows_) + "x" +
                          std::to_string(rhs.cols_));
  }
}

void ExactMatrix::require_same_spec(const ExactMatrix& rhs) const {
  if (spec_ != rhs.spec_) {
    throw ValidationError("matrix field mismatch: " + spec_.to_string() + " vs " +
                          rhs.spec_.to_string());
  }
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
  require_same_spec(rhs);
  require_same_shape(rhs);
  ExactMatrix out(spec_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + rhs.entries_[k];
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
  require_same_spec(rhs);
  require_same_shape(rhs);
  ExactMatrix out(spec_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - rhs.entries_[k];
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  require_same_spec(rhs);
  if (cols_ != rhs.rows_) {
    throw ValidationError("matrix product dimension mismatch: " + std::to_string(cols_) +
                          " vs " + std::to_string(rhs.rows_));
  }
  ExactMatrix out(spec_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const Scalar& bkj = rhs.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
  ExactMatrix out(spec_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * c;
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
  return spec_ == rhs.spec_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
         entries_ == rhs.entries_;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    out << (i == 0 ? "[" : " ");
    out << "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out << ", ";
      out << at(i, j).to_string();
    }
    out << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return out.str();
}

ExactMatrix mat_pow(const ExactMatrix& a, std::uint64_t e) {
  if (!a.is_square()) throw ValidationError("matrix power requires a square matrix");
  ExactMatrix result = ExactMatrix::identity(a.spec(), a.rows());
  ExactMatrix base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Scalar mat_trace(const ExactMatrix& a) {
  if (!a.is_square()) throw ValidationError("trace requires a square matrix");
  Scalar t = Scalar::zero(a.spec());
  for (int i = 0; i < a.rows(); ++i) t += a.at(i, i);
  return t;
}

Scalar determinant(const ExactMatrix& a) {
  if (!a.is_square()) throw ValidationError("determinant requires a square matrix");
  int n = a.rows();
  ExactMatrix m = a;
  Scalar det = Scalar::one(a.spec());
  bool negate = false;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Scalar::zero(a.spec());
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      negate = !negate;
    }
    const Scalar p = m.at(col, col);
    det *= p;
    const Scalar pinv = p.inv();
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      const Scalar factor = m.at(r, col) * pinv;
      for (int j = col; j < n; ++j) {
        m.at(r, j) += -(factor * m.at(col, j));
      }
    }
  }
  return negate ? -det : det;
}

bool is_invertible(const ExactMatrix& a) { return !determinant(a).is_zero(); }

RowEchelon rref_rows(const std::vector<std::vector<Scalar>>& rows, int width) {
  RowEchelon ech;
  ech.width = width;
  for (const auto& row : rows) {
    echelon_insert(ech, row);
  }
  return ech;
}

std::vector<Scalar> reduce_against(const RowEchelon& ech, std::vector<Scalar> v) {
  if (static_cast<int>(v.size()) != ech.width) {
    throw ValidationError("vector width does not match the echelon basis");
  }
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    int p = ech.pivot_cols[r];
    const Scalar& c = v[static_cast<std::size_t>(p)];
    if (c.is_zero()) continue;
    const Scalar factor = c;  // pivot entries are normalized to 1
    for (int j = 0; j < ech.width; ++j) {
      if (ech.rows[r][static_cast<std::size_t>(j)].is_zero()) continue;
      v[static_cast<std::size_t>(j)] += -(factor * ech.rows[r][static_cast<std::size_t>(j)]);
    }
  }
  return v;
}

bool echelon_insert(RowEchelon& ech, std::vector<Scalar> v) {
  if (static_cast<int>(v.size()) != ech.width) {
    throw ValidationError("vector width does not match the echelon basis");
  }
  v = reduce_against(ech, std::move(v));
  int pivot = -1;
  for (int j = 0; j < ech.width; ++j) {
    if (!v[static_cast<std::size_t>(j)].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;

  const Scalar pinv = v[static_cast<std::size_t>(pivot)].inv();
  for (auto& c : v) c *= pinv;

  // Clear the new pivot column from existing rows, then insert in pivot order.
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    const Scalar& c = ech.rows[r][static_cast<std::size_t>(pivot)];
    if (c.is_zero()) continue;
    const Scalar factor = c;
    for (int j = 0; j < ech.width; ++j) {
      if (v[static_cast<std::size_t>(j)].is_zero()) continue;
      ech.rows[r][static_cast<std::size_t>(j)] += -(factor * v[static_cast<std::size_t>(j)]);
    }
  }
  std::size_t pos = 0;
  while (pos < ech.pivot_cols.size() && ech.pivot_cols[pos] < pivot) ++pos;
  ech.rows.insert(ech.rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  ech.pivot_cols.insert(ech.pivot_cols.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
  return true;
}

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& a) {
  const FieldSpec& spec = a.spec();
  int n = a.cols();
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<Scalar> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) row.push_back(a.at(i, j));
    rows.push_back(std::move(row));
  }
  RowEchelon ech = rref_rows(rows, n);

  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : ech.pivot_cols) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<std::vector<Scalar>> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Scalar> v(static_cast<std::size_t>(n), Scalar::zero(spec));
    v[static_cast<std::size_t>(f)] = Scalar::one(spec);
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
      v[static_cast<std::size_t>(ech.pivot_cols[r])] = -ech.rows[r][static_cast<std::size_t>(f)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

NilpotencyResult is_nilpotent(const ExactMatrix& a) {
  if (!a.is_square()) throw ValidationError("nilpotency requires a square matrix");
  const int n = a.rows();

  // Squarings A, A^2, A^4, ... up to the least power of two >= n. An n x n
  // nilpotent matrix satisfies A^n = 0, so A^(2^K) decides the question.
  std::vector<ExactMatrix> squarings{a};
  std::uint64_t top = std::bit_ceil(static_cast<std::uint64_t>(n));
  while ((1ull << (squarings.size() - 1)) < top) {
    squarings.push_back(squarings.back() * squarings.back());
  }
  if (!squarings.back().is_zero()) return {false, std::nullopt};

  auto power = [&](std::uint64_t e) {
    ExactMatrix result = ExactMatrix::identity(a.spec(), n);
    for (std::size_t bit = 0; bit < squarings.size(); ++bit) {
      if (e & (1ull << bit)) result = result * squarings[bit];
    }
    return result;
  };

  // Least m in [1, top] with A^m = 0; the predicate is monotone in m.
  std::uint64_t lo = 1, hi = top;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (power(mid).is_zero()) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return {true, static_cast<int>(lo)};
}

}  // namespace grouplet
