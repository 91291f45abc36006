#include <doctest.h>

#include <cstddef>
#include <cstdint>
#include <set>

#include "majorlab/sampling.hpp"
#include "test_util.hpp"

using namespace majorlab;

TEST_CASE("identical seeds replay identical draws") {
  SimplexSampler a(123), b(123);
  for (int round = 0; round < 20; ++round) {
    CHECK(a.sample(5) == b.sample(5));
    CHECK(a.sample_positive(4, 60) == b.sample_positive(4, 60));
    CHECK(a.sample_channel(3, 4, 360) == b.sample_channel(3, 4, 360));
    CHECK(a.next_below(1000) == b.next_below(1000));
  }
  SimplexSampler c(124);
  CHECK(c.sample(5) != a.sample(5));  // different seed, different stream
}

TEST_CASE("draws are exact points of the denominator grid") {
  SimplexSampler sampler(9);
  for (int round = 0; round < 50; ++round) {
    const unsigned long denom = (round % 2 == 0) ? 60 : 1'000'000;
    const ProbVec p = sampler.sample(2 + sampler.next_below(6), denom);
    Rational total(0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Rational scaled = p[i] * Rational(denom);
      CHECK(scaled.get_den() == 1);  // entry is an integer multiple of 1/denom
      CHECK(sgn(p[i]) >= 0);
      total += p[i];
    }
    CHECK(total == 1);
  }
}

TEST_CASE("positive draws respect the floor") {
  SimplexSampler sampler(10);
  const Rational floor(1, 60);
  for (int round = 0; round < 50; ++round) {
    const ProbVec p = sampler.sample_positive(2 + sampler.next_below(6), 60);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i] >= floor);
  }
  // n == denominator forces the uniform distribution
  CHECK(sampler.sample_positive(6, 6) == uniform(6));
}

TEST_CASE("support-constrained draws hit the requested support exactly") {
  SimplexSampler sampler(11);
  std::set<std::size_t> seen_first;
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 3 + sampler.next_below(4);
    const std::size_t s = 1 + sampler.next_below(n);
    const ProbVec p = sampler.sample_with_support(n, s, 360);
    CHECK(p.size() == n);
    CHECK(p.support_size() == s);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(p[i]) > 0) {
        seen_first.insert(i);
        break;
      }
    }
  }
  CHECK(seen_first.size() >= 3);  // the support location actually varies
}

TEST_CASE("channels have exact stochastic and strictly positive rows") {
  SimplexSampler sampler(12);
  const Channel w = sampler.sample_channel(4, 3, 60);
  CHECK(w.input_size() == 4);
  CHECK(w.output_size() == 3);
  for (std::size_t i = 0; i < 4; ++i) {
    Rational total(0);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(sgn(w.at(i, j)) > 0);
      total += w.at(i, j);
    }
    CHECK(total == 1);
  }
}

TEST_CASE("bounded integers stay in range and cover it") {
  SimplexSampler sampler(13);
  std::set<std::uint64_t> seen;
  for (int round = 0; round < 200; ++round) {
    const std::uint64_t v = sampler.next_below(7);
    CHECK(v < 7);
    seen.insert(v);
  }
  CHECK(seen.size() == 7);
}

// Frozen draws for one seed: mt19937_64 and the lattice construction are both
// pinned by the standard, so any change to how the sampler consumes its stream
// shows up here before it silently breaks replay-dependent callers.
TEST_CASE("seed 42 produces the frozen draw sequence") {
  SimplexSampler sampler(42);
  CHECK(sampler.sample(4, 60) == test_util::pv({"7/20", "4/15", "7/20", "1/30"}));
  CHECK(sampler.sample_positive(3, 60) == test_util::pv({"41/60", "1/20", "4/15"}));
  CHECK(sampler.next_below(10) == 3);
  const Channel w = sampler.sample_channel(2, 3, 60);
  CHECK(w.row(0) == test_util::pv({"23/60", "7/12", "1/30"}).entries());
  CHECK(w.row(1) == test_util::pv({"1/4", "2/5", "7/20"}).entries());
}
