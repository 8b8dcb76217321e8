#include "grouplet/maschke.hpp"

#include <cstdint>
#include <sstream>

namespace grouplet {

namespace {

constexpr std::uint64_t kOracleBound = 1ull << 16;

Scalar scalar_pow(const Scalar& base, std::uint64_t e) {
  Scalar result = Scalar::one(base.spec());
  for (std::uint64_t i = 0; i < e; ++i) result *= base;
  return result;
}

std::vector<Scalar> element_coeffs(const GroupRingElement& x) { return x.coeffs(); }

std::string basis_dump(const RadicalBasis& basis) {
  std::ostringstream out;
  out << method_name(basis.method()) << " basis, dimension " << basis.dimension() << ": {";
  for (int i = 0; i < basis.dimension(); ++i) {
    if (i) out << "; ";
    out << basis.elements()[static_cast<std::size_t>(i)].to_string();
  }
  out << "}";
  return out.str();
}

}  // namespace

std::string method_name(RadicalMethod method) {
  switch (method) {
    case RadicalMethod::GramKernel: return "gram_kernel";
    case RadicalMethod::Oracle: return "oracle";
    case RadicalMethod::WitnessIdealClosure: return "witness_ideal_closure";
  }
  return "unknown";
}

GramMatrix gram_matrix(const FiniteGroup& group, const FieldSpec& spec) {
  int n = group.order();
  ExactMatrix m(spec, n, n);
  const Scalar n_in_field = Scalar::from_integer(spec, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (group.op(i, j) == 0) m.at(i, j) = n_in_field;
    }
  }
  return GramMatrix{std::move(m), group, spec};
}

int inversion_sign(const FiniteGroup& group) {
  int fixed = 0;
  for (int i = 0; i < group.order(); ++i) {
    if (group.inverse_index(i) == i) ++fixed;
  }
  int two_cycles = (group.order() - fixed) / 2;
  return two_cycles % 2 == 0 ? 1 : -1;
}

RadicalBasis RadicalBasis::checked(const FiniteGroup& group, const FieldSpec& spec,
                                   const std::vector<GroupRingElement>& elements,
                                   RadicalMethod method) {
  RadicalBasis basis(group, spec, method);
  int n = group.order();
  basis.echelon_.width = n;
  for (const GroupRingElement& e : elements) {
    if (!e.group().same_structure(group)) {
      throw ValidationError("radical basis element belongs to a different group");
    }
    if (e.spec() != spec) {
      throw ValidationError("radical basis element has field " + e.spec().to_string() +
                            ", expected " + spec.to_string());
    }
    echelon_insert(basis.echelon_, element_coeffs(e));
  }
  for (const auto& row : basis.echelon_.rows) {
    basis.elements_.emplace_back(group, spec, row);
  }

  for (const GroupRingElement& e : basis.elements_) {
    NilpotencyResult nil = is_nilpotent(embed(e));
    if (!nil.nilpotent) {
      throw CertificateViolation("claimed radical element " + e.to_string() + " in " +
                                 spec.to_string() + "[" + group.label() +
                                 "] has a non-nilpotent embedding");
    }
  }
  for (const GroupRingElement& e : basis.elements_) {
    for (int t = 0; t < n; ++t) {
      GroupRingElement g = GroupRingElement::basis(group, spec, t);
      for (const GroupRingElement& product : {g * e, e * g}) {
        std::vector<Scalar> rem = reduce_against(basis.echelon_, element_coeffs(product));
        for (const Scalar& c : rem) {
          if (!c.is_zero()) {
            throw CertificateViolation("span of " + basis_dump(basis) + " in " +
                                       spec.to_string() + "[" + group.label() +
                                       "] is not a two-sided ideal: " + product.to_string() +
                                       " escapes it");
          }
        }
      }
    }
  }
  return basis;
}

bool RadicalBasis::contains(const GroupRingElement& x) const {
  std::vector<Scalar> rem = reduce_against(echelon_, element_coeffs(x));
  for (const Scalar& c : rem) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool RadicalBasis::spans_subset_of(const RadicalBasis& other) const {
  for (const GroupRingElement& e : elements_) {
    if (!other.contains(e)) return false;
  }
  return true;
}

bool RadicalBasis::same_span(const RadicalBasis& other) const {
  return dimension() == other.dimension() && spans_subset_of(other);
}

RadicalBasis radical_nonmodular(const FiniteGroup& group, const FieldSpec& spec) {
  if (char_divides(spec, static_cast<std::uint64_t>(group.order()))) {
    throw ValidationError("radical_nonmodular requires char " + spec.to_string() +
                          " not dividing |" + group.label() + "| = " +
                          std::to_string(group.order()));
  }
  GramMatrix gram = gram_matrix(group, spec);
  std::vector<GroupRingElement> elements;
  for (auto& v : kernel_basis(gram.matrix)) {
    elements.emplace_back(group, spec, std::move(v));
  }
  return RadicalBasis::checked(group, spec, elements, RadicalMethod::GramKernel);
}

RadicalBasis modular_witness(const FiniteGroup& group, const FieldSpec& spec) {
  if (!char_divides(spec, static_cast<std::uint64_t>(group.order()))) {
    throw ValidationError("modular_witness requires char " + spec.to_string() + " dividing |" +
                          group.label() + "| = " + std::to_string(group.order()));
  }
  int n = group.order();
  GroupRingElement sigma = GroupRingElement::sigma(group, spec);
  if (sigma.is_zero()) {
    throw CertificateViolation("sigma vanished in " + spec.to_string() + "[" + group.label() +
                               "]");
  }
  if (!(sigma * sigma).is_zero()) {
    throw CertificateViolation("sigma^2 != 0 in the modular case over " + spec.to_string() +
                               "[" + group.label() + "]");
  }
  for (int t = 0; t < n; ++t) {
    GroupRingElement g = GroupRingElement::basis(group, spec, t);
    if (sigma * g != g * sigma) {
      throw CertificateViolation("sigma is not central in " + spec.to_string() + "[" +
                                 group.label() + "]");
    }
  }

  // Close the span of sigma under left and right translations.
  RowEchelon ech;
  ech.width = n;
  echelon_insert(ech, element_coeffs(sigma));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Scalar>> snapshot = ech.rows;
    for (const auto& row : snapshot) {
      GroupRingElement e(group, spec, row);
      for (int t = 0; t < n; ++t) {
        GroupRingElement g = GroupRingElement::basis(group, spec, t);
        if (echelon_insert(ech, element_coeffs(g * e))) grew = true;
        if (echelon_insert(ech, element_coeffs(e * g))) grew = true;
      }
    }
  }

  std::vector<GroupRingElement> elements;
  for (const auto& row : ech.rows) elements.emplace_back(group, spec, row);
  RadicalBasis basis =
      RadicalBasis::checked(group, spec, elements, RadicalMethod::WitnessIdealClosure);
  if (basis.dimension() < 1) {
    throw CertificateViolation("witness ideal collapsed to zero in the modular case");
  }
  return basis;
}

bool radical_oracle_feasible(const FiniteGroup& group, const FieldSpec& spec) {
  if (!spec.is_prime_field()) return false;
  std::uint64_t size = 1;
  for (int i = 0; i < group.order(); ++i) {
    size *= spec.prime();
    if (size > kOracleBound) return false;
  }
  return true;
}

namespace {

// Fast arithmetic for the oracle's inner loops: elements of F_p[G] as
// plain uint32 coefficient vectors, invertibility by Gaussian elimination
// mod p. Exactness is unaffected; only Scalar overhead is shed.
struct ModContext {
  const FiniteGroup& group;
  std::uint64_t p;
  int n;

  std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) const {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  std::uint64_t mod_inv(std::uint64_t a) const { return mod_pow(a, p - 2); }

  void decode(std::uint64_t code, std::vector<std::uint32_t>& out) const {
    for (int i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(code % p);
      code /= p;
    }
  }

  std::uint64_t encode(const std::vector<std::uint32_t>& v) const {
    std::uint64_t code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * p + v[static_cast<std::size_t>(i)];
    return code;
  }

  // det(embed(v)) != 0, elimination mod p.
  bool invertible(const std::vector<std::uint32_t>& v) const {
    std::vector<std::uint64_t> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      int inv_i = group.inverse_index(i);
      for (int j = 0; j < n; ++j) {
        m[static_cast<std::size_t>(i) * n + j] = v[static_cast<std::size_t>(group.op(inv_i, j))];
      }
    }
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int r = col; r < n; ++r) {
        if (m[static_cast<std::size_t>(r) * n + col] % p != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return false;
      if (pivot != col) {
        for (int j = col; j < n; ++j) {
          std::swap(m[static_cast<std::size_t>(pivot) * n + j],
                    m[static_cast<std::size_t>(col) * n + j]);
        }
      }
      std::uint64_t pinv = mod_inv(m[static_cast<std::size_t>(col) * n + col] % p);
      for (int r = col + 1; r < n; ++r) {
        std::uint64_t f = m[static_cast<std::size_t>(r) * n + col] % p * pinv % p;
        if (f == 0) continue;
        for (int j = col; j < n; ++j) {
          std::uint64_t sub = f * (m[static_cast<std::size_t>(col) * n + j] % p) % p;
          std::uint64_t cur = m[static_cast<std::size_t>(r) * n + j] % p;
          m[static_cast<std::size_t>(r) * n + j] = (cur + p - sub) % p;
        }
      }
    }
    return true;
  }

  // Row-echelon basis of the span of the given vectors, mod p.
  std::vector<std::vector<std::uint32_t>> span_basis(
      std::vector<std::vector<std::uint32_t>> vectors) const {
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<int> pivots;
    for (auto& v : vectors) {
      for (std::size_t r = 0; r < rows.size(); ++r) {
        std::uint64_t f = v[static_cast<std::size_t>(pivots[r])];
        if (f == 0) continue;
        for (int j = 0; j < n; ++j) {
          std::uint64_t sub = f * rows[r][static_cast<std::size_t>(j)] % p;
          v[static_cast<std::size_t>(j)] =
              static_cast<std::uint32_t>((v[static_cast<std::size_t>(j)] + p - sub) % p);
        }
      }
      int pivot = -1;
      for (int j = 0; j < n; ++j) {
        if (v[static_cast<std::size_t>(j)] != 0) {
          pivot = j;
          break;
        }
      }
      if (pivot < 0) continue;
      std::uint64_t pinv = mod_inv(v[static_cast<std::size_t>(pivot)]);
      for (int j = 0; j < n; ++j) {
        v[static_cast<std::size_t>(j)] =
            static_cast<std::uint32_t>(v[static_cast<std::size_t>(j)] * pinv % p);
      }
      rows.push_back(std::move(v));
      pivots.push_back(pivot);
    }
    return rows;
  }
};

}  // namespace

RadicalBasis radical_oracle(const FiniteGroup& group, const FieldSpec& spec) {
  if (!spec.is_prime_field()) {
    throw ValidationError("radical_oracle supports prime fields only, not " + spec.to_string());
  }
  int n = group.order();
  std::uint64_t p = spec.prime();
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= p;
    if (size > kOracleBound) {
      throw CapacityError("algebra " + spec.to_string() + "[" + group.label() + "] has " +
                          spec.to_string().substr(1) + "^" + std::to_string(n) +
                          " elements, oracle bound is 2^16");
    }
  }
  ModContext ctx{group, p, n};

  // Invertibility of every algebra element, once.
  std::vector<bool> invertible(size);
  std::vector<std::uint32_t> buf(static_cast<std::size_t>(n));
  for (std::uint64_t code = 0; code < size; ++code) {
    ctx.decode(code, buf);
    invertible[code] = ctx.invertible(buf);
  }

  // alpha is quasi-regular iff 1 - x*alpha is invertible for every x. As x
  // runs over the whole algebra, x*alpha runs over the left ideal
  // A*alpha = span{g_t * alpha}, so the coset 1 + A*alpha is enumerated
  // once per distinct value.
  RowEchelon members;
  members.width = n;
  std::vector<std::uint32_t> alpha(static_cast<std::size_t>(n));
  std::vector<std::uint32_t> current(static_cast<std::size_t>(n));
  std::vector<std::uint32_t> product(static_cast<std::size_t>(n));
  for (std::uint64_t code = 0; code < size; ++code) {
    ctx.decode(code, alpha);

    std::vector<std::vector<std::uint32_t>> generators;
    generators.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
      std::fill(product.begin(), product.end(), 0);
      for (int j = 0; j < n; ++j) {
        std::size_t target = static_cast<std::size_t>(group.op(t, j));
        product[target] =
            static_cast<std::uint32_t>((product[target] + alpha[static_cast<std::size_t>(j)]) % p);
      }
      generators.push_back(product);
    }
    std::vector<std::vector<std::uint32_t>> ideal = ctx.span_basis(std::move(generators));

    // Odometer over the ideal span; each step adds one basis vector mod p.
    std::size_t dim = ideal.size();
    std::vector<std::uint32_t> digits(dim, 0);
    std::fill(current.begin(), current.end(), 0);
    current[0] = 1;  // the identity element
    bool in_radical = true;
    while (true) {
      if (!invertible[ctx.encode(current)]) {
        in_radical = false;
        break;
      }
      std::size_t d = 0;
      while (d < dim) {
        for (int j = 0; j < n; ++j) {
          current[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(
              (current[static_cast<std::size_t>(j)] + ideal[d][static_cast<std::size_t>(j)]) % p);
        }
        if (++digits[d] < p) break;
        digits[d] = 0;
        ++d;
      }
      if (d == dim) break;
    }

    if (in_radical) {
      std::vector<Scalar> coeffs;
      coeffs.reserve(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        coeffs.push_back(Scalar::from_integer(spec, alpha[static_cast<std::size_t>(j)]));
      }
      echelon_insert(members, std::move(coeffs));
    }
  }

  std::vector<GroupRingElement> elements;
  for (const auto& row : members.rows) elements.emplace_back(group, spec, row);
  return RadicalBasis::checked(group, spec, elements, RadicalMethod::Oracle);
}

LemmaReport lemma_nilpotency_check(const GroupRingElement& alpha, const RadicalBasis& rad,
                                   Rng& rng, int samples) {
  if (!rad.contains(alpha)) {
    throw ValidationError("element " + alpha.to_string() +
                          " is not in the span of the radical basis");
  }
  const FiniteGroup& group = rad.group();
  const FieldSpec& spec = rad.spec();
  int n = group.order();

  Polynomial mu = minimal_polynomial(embed(alpha));
  PolySplit split = split_trailing_power(mu);
  if (split.f.degree() != 0 || !split.f.coeff(0).is_one()) {
    throw CertificateViolation("minimal polynomial " + mu.to_string() + " of radical element " +
                               alpha.to_string() + " is not a pure power of x");
  }
  if (split.m < 1 || split.m > n) {
    throw CertificateViolation("nilpotency exponent " + std::to_string(split.m) +
                               " of " + alpha.to_string() + " is outside (0, " +
                               std::to_string(n) + "]");
  }

  for (int s = 0; s < samples; ++s) {
    GroupRingElement u = random_unit(rng, group, spec);
    GroupRingElement b = random_element(rng, group, spec);
    GroupRingElement perturbed = u + alpha * b;
    if (!is_invertible(embed(perturbed))) {
      throw CertificateViolation("unit perturbation failed for radical element " +
                                 alpha.to_string() + ": u = " + u.to_string() + ", b = " +
                                 b.to_string() + " gives the non-unit " + perturbed.to_string());
    }
  }
  return LemmaReport{mu, split.m, samples};
}

MaschkeVerdict verdict(const FiniteGroup& group, const FieldSpec& spec) {
  int n = group.order();
  bool modular = char_divides(spec, static_cast<std::uint64_t>(n));
  bool oracle_possible = radical_oracle_feasible(group, spec);

  if (!modular) {
    RadicalBasis kernel = radical_nonmodular(group, spec);
    if (kernel.dimension() != 0) {
      throw CertificateViolation("Gram kernel is nonzero for " + spec.to_string() + "[" +
                                 group.label() + "] although the characteristic does not divide " +
                                 std::to_string(n) + ": " + basis_dump(kernel));
    }
    GramMatrix gram = gram_matrix(group, spec);
    Scalar det = determinant(gram.matrix);
    int sign = inversion_sign(group);
    Scalar expected = scalar_pow(Scalar::from_integer(spec, n), static_cast<std::uint64_t>(n));
    if (sign < 0) expected = -expected;
    if (det != expected) {
      throw CertificateViolation("Gram determinant " + det.to_string() + " differs from " +
                                 expected.to_string() + " = sign * n^n for " + spec.to_string() +
                                 "[" + group.label() + "]");
    }
    bool oracle_checked = false;
    if (oracle_possible) {
      RadicalBasis oracle = radical_oracle(group, spec);
      if (!oracle.same_span(kernel)) {
        throw CertificateViolation("oracle disagrees with the Gram kernel for " +
                                   spec.to_string() + "[" + group.label() + "]: " +
                                   basis_dump(oracle) + " vs " + basis_dump(kernel));
      }
      oracle_checked = true;
    }
    return MaschkeVerdict{group,
                          spec,
                          MaschkeVerdict::Outcome::Semisimple,
                          SemisimpleCertificate{det, expected, sign, oracle_checked},
                          std::nullopt,
                          0,
                          0};
  }

  RadicalBasis witness = modular_witness(group, spec);
  std::vector<int> indices;
  for (const GroupRingElement& e : witness.elements()) {
    NilpotencyResult nil = is_nilpotent(embed(e));
    if (!nil.nilpotent) {
      throw CertificateViolation("witness element " + e.to_string() + " is not nilpotent");
    }
    indices.push_back(*nil.index);
  }
  std::optional<int> oracle_dimension;
  if (oracle_possible) {
    RadicalBasis oracle = radical_oracle(group, spec);
    if (oracle.dimension() < 1) {
      throw CertificateViolation("oracle claims a trivial radical for the modular case " +
                                 spec.to_string() + "[" + group.label() + "]");
    }
    if (!witness.spans_subset_of(oracle)) {
      throw CertificateViolation("witness ideal is not contained in the oracle radical for " +
                                 spec.to_string() + "[" + group.label() + "]: " +
                                 basis_dump(witness) + " vs " + basis_dump(oracle));
    }
    oracle_dimension = oracle.dimension();
  }
  int lower_bound = witness.dimension();
  std::optional<int> exact =
      oracle_dimension.has_value() ? std::optional<int>(*oracle_dimension) : std::nullopt;
  GroupRingElement sigma = GroupRingElement::sigma(group, spec);
  return MaschkeVerdict{group,
                        spec,
                        MaschkeVerdict::Outcome::NonSemisimple,
                        std::nullopt,
                        NonSemisimpleCertificate{witness, std::move(indices), std::move(sigma),
                                                 oracle_dimension},
                        exact,
                        lower_bound};
}

}  // namespace grouplet
