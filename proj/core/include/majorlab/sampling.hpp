#pragma once

#include <cstdint>
#include <random>

#include "majorlab/prob_vec.hpp"

namespace majorlab {

/// Seeded random distributions with exact rational entries: exponential-like
/// draws from a 64-bit generator are normalised and snapped to a common
/// denominator by largest-remainder rounding, so identical seeds reproduce
/// identical rationals on every platform and all downstream checks stay exact.
class SimplexSampler {
 public:
  explicit SimplexSampler(std::uint64_t seed) : rng_(seed) {}

  /// Roughly Dirichlet(1)-distributed point with entries c_i / denominator.
  /// Zero entries are possible (and become more likely as n approaches the
  /// denominator).
  ProbVec sample(std::size_t n, unsigned long denominator = 1'000'000);

  /// As sample(), but every entry is at least 1/denominator. Requires
  /// n <= denominator.
  ProbVec sample_positive(std::size_t n, unsigned long denominator = 1'000'000);

  /// Strictly positive mass on a uniformly chosen support of the given size,
  /// zeros elsewhere. Requires 1 <= support_size <= n.
  ProbVec sample_with_support(std::size_t n, std::size_t support_size,
                              unsigned long denominator = 1'000'000);

  /// Channel whose rows are independent sample_positive draws.
  Channel sample_channel(std::size_t inputs, std::size_t outputs,
                         unsigned long denominator = 1'000'000);

  /// Uniform integer in [0, bound), consuming one generator step.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  double uniform01();  // 53-bit mantissa in [0, 1)

  std::mt19937_64 rng_;
};

}  // namespace majorlab
