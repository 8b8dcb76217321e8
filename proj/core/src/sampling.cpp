#include "grouplet/sampling.hpp"

#include "grouplet/circulant.hpp"
#include "grouplet/exact_matrix.hpp"

namespace grouplet {

Scalar random_scalar(Rng& rng, const FieldSpec& spec) {
  if (spec.is_prime_field()) {
    return Scalar::from_integer(spec, static_cast<std::int64_t>(rng.below(spec.prime())));
  }
  std::int64_t num = rng.int_in(-9, 9);
  std::int64_t den = rng.int_in(1, 9);
  return Scalar::from_integer(spec, num) * Scalar::from_integer(spec, den).inv();
}

Scalar random_nonzero_scalar(Rng& rng, const FieldSpec& spec) {
  while (true) {
    Scalar s = random_scalar(rng, spec);
    if (!s.is_zero()) return s;
  }
}

GroupRingElement random_element(Rng& rng, const FiniteGroup& group, const FieldSpec& spec) {
  std::vector<Scalar> coeffs;
  coeffs.reserve(static_cast<std::size_t>(group.order()));
  for (int i = 0; i < group.order(); ++i) coeffs.push_back(random_scalar(rng, spec));
  return GroupRingElement(group, spec, std::move(coeffs));
}

GroupRingElement random_unit(Rng& rng, const FiniteGroup& group, const FieldSpec& spec) {
  // Units are dense in every case we sample (over Q almost everything is a
  // unit; over F_p at least the scaled group elements are), so rejection
  // terminates fast in practice. The cap turns a broken sampler into a
  // loud failure instead of a hang.
  for (int attempt = 0; attempt < 10000; ++attempt) {
    GroupRingElement x = random_element(rng, group, spec);
    if (x.is_zero()) continue;
    if (is_invertible(embed(x))) return x;
  }
  throw ValidationError("failed to sample a unit in " + spec.to_string() + "[" + group.label() +
                        "] after 10000 attempts");
}

}  // namespace grouplet
