#pragma once

#include <cstdint>
#include <iosfwd>

namespace grouplet {

struct SelftestSummary {
  int passed = 0;
  int failed = 0;
};

/// Runs the built-in invariant suite over the group/field corpus and
/// prints one line per check plus a final count. Deterministic for a
/// fixed seed.
SelftestSummary run_selftest(std::uint64_t seed, std::ostream& out);

}  // namespace grouplet
