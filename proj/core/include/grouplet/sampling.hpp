#pragma once

#include <cstdint>
#include <random>

#include "grouplet/field.hpp"
#include "grouplet/group_ring.hpp"

namespace grouplet {

/// Default seed for every randomized check; overridable via --seed or the
/// GROUPLET_SEED environment variable.
inline constexpr std::uint64_t kDefaultSeed = 1;

/// Deterministic random source. mt19937_64 is pinned by the standard and
/// bounds are taken by plain modulo, so identical seeds give identical
/// streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-enough value in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform residue over F_p; a small fraction (numerator in [-9, 9],
/// denominator in [1, 9]) over Q.
Scalar random_scalar(Rng& rng, const FieldSpec& spec);

Scalar random_nonzero_scalar(Rng& rng, const FieldSpec& spec);

GroupRingElement random_element(Rng& rng, const FiniteGroup& group, const FieldSpec& spec);

/// Random invertible element (det of the regular embedding nonzero),
/// sampled by rejection.
GroupRingElement random_unit(Rng& rng, const FiniteGroup& group, const FieldSpec& spec);

}  // namespace grouplet
