#include "majorlab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "majorlab/errors.hpp"

namespace majorlab {

namespace {

/// Largest-remainder snap of non-negative weights to integer counts summing to
/// `total`, on top of per-cell floors. Ties go to the lowest index.
std::vector<unsigned long> snap_counts(const std::vector<double>& weights,
                                       unsigned long total, unsigned long floor_count) {
  const std::size_t n = weights.size();
  double mass = 0.0;
  for (double w : weights) mass += w;
  const unsigned long budget = total - floor_count * n;

  std::vector<unsigned long> counts(n, floor_count);
  std::vector<std::pair<double, std::size_t>> remainders(n);
  unsigned long assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ideal =
        mass > 0.0 ? weights[i] / mass * static_cast<double>(budget)
                   : static_cast<double>(budget) / static_cast<double>(n);
    const double fl = std::floor(ideal);
    counts[i] += static_cast<unsigned long>(fl);
    assigned += static_cast<unsigned long>(fl);
    remainders[i] = {ideal - fl, i};
  }
  std::sort(remainders.begin(), remainders.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first > b.first;
              return a.second < b.second;
            });
  for (std::size_t j = 0; assigned < budget; ++j, ++assigned) {
    counts[remainders[j % n].second] += 1;
  }
  return counts;
}

ProbVec counts_to_dist(const std::vector<unsigned long>& counts,
                       unsigned long denominator) {
  std::vector<Rational> entries;
  entries.reserve(counts.size());
  for (unsigned long c : counts) {
    Rational e(c, denominator);
    e.canonicalize();
    entries.push_back(std::move(e));
  }
  return ProbVec(std::move(entries));
}

}  // namespace

double SimplexSampler::uniform01() {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

std::uint64_t SimplexSampler::next_below(std::uint64_t bound) {
  if (bound == 0) throw DomainViolation("next_below: bound must be positive");
  return static_cast<std::uint64_t>(uniform01() * static_cast<double>(bound)) % bound;
}

ProbVec SimplexSampler::sample(std::size_t n, unsigned long denominator) {
  if (n == 0) throw DimensionMismatch("sample: empty alphabet");
  if (denominator == 0) throw DomainViolation("sample: zero denominator");
  std::vector<double> w(n);
  for (double& v : w) v = -std::log(1.0 - uniform01());
  return counts_to_dist(snap_counts(w, denominator, 0), denominator);
}

ProbVec SimplexSampler::sample_positive(std::size_t n, unsigned long denominator) {
  if (n == 0) throw DimensionMismatch("sample_positive: empty alphabet");
  if (denominator < n) {
    throw DomainViolation("sample_positive: denominator smaller than the alphabet");
  }
  std::vector<double> w(n);
  for (double& v : w) v = -std::log(1.0 - uniform01());
  return counts_to_dist(snap_counts(w, denominator, 1), denominator);
}

ProbVec SimplexSampler::sample_with_support(std::size_t n, std::size_t support_size,
                                            unsigned long denominator) {
  if (support_size == 0 || support_size > n) {
    throw DomainViolation("sample_with_support: support size out of range");
  }
  // Uniform support mask via a partial Fisher-Yates shuffle.
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < support_size; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(next_below(n - i));
    std::swap(idx[i], idx[j]);
  }
  const ProbVec inner = sample_positive(support_size, denominator);
  std::vector<Rational> entries(n, Rational(0));
  for (std::size_t i = 0; i < support_size; ++i) entries[idx[i]] = inner[i];
  return ProbVec(std::move(entries));
}

Channel SimplexSampler::sample_channel(std::size_t inputs, std::size_t outputs,
                                       unsigned long denominator) {
  if (inputs == 0) throw DimensionMismatch("sample_channel: no inputs");
  std::vector<std::vector<Rational>> rows;
  rows.reserve(inputs);
  for (std::size_t i = 0; i < inputs; ++i) {
    rows.push_back(sample_positive(outputs, denominator).entries());
  }
  return Channel(std::move(rows));
}

}  // namespace majorlab
