#include <doctest.h>

#include <cstddef>
#include <vector>

#include "majorlab/errors.hpp"
#include "majorlab/lorenz.hpp"
#include "majorlab/relmaj.hpp"
#include "majorlab/sampling.hpp"
#include "test_util.hpp"

using namespace majorlab;
using test_util::linf_distance;
using test_util::pv;
using test_util::rat;

TEST_CASE("channel witness exists exactly when the order holds") {
  const ProbVec e1 = pv({"1", "0"});
  const ProbVec u2 = uniform(2);
  const auto w = channel_witness(e1, u2, u2, u2);
  REQUIRE(w.has_value());
  CHECK(apply_channel(e1, *w) == u2);
  CHECK(apply_channel(u2, *w) == u2);
  CHECK_FALSE(channel_witness(u2, u2, e1, u2).has_value());
}

TEST_CASE("channel witness permits different target alphabets") {
  const ProbVec p = pv({"1/2", "1/3", "1/6"});
  const ProbVec q = pv({"1/6", "1/3", "1/2"});
  const auto w = channel_witness(p, q, pv({"5/6", "1/6"}), pv({"1/2", "1/2"}));
  REQUIRE(w.has_value());
  CHECK(w->input_size() == 3);
  CHECK(w->output_size() == 2);
  CHECK(apply_channel(p, *w) == pv({"5/6", "1/6"}));
  CHECK(apply_channel(q, *w) == pv({"1/2", "1/2"}));
}

TEST_CASE("channel witness rejects mismatched pair dimensions") {
  CHECK_THROWS_AS(channel_witness(uniform(2), uniform(3), uniform(2), uniform(2)),
                  DimensionMismatch);
}

TEST_CASE("curve route and witness route agree on random quads") {
  SimplexSampler sampler(29);
  int holds = 0;
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 2 + static_cast<std::size_t>(sampler.next_below(3));
    const std::size_t m = 2 + static_cast<std::size_t>(sampler.next_below(3));
    const ProbVec p = sampler.sample(n, 60);
    const ProbVec q = sampler.sample(n, 60);
    ProbVec p2 = sampler.sample(m, 60);
    ProbVec q2 = sampler.sample(m, 60);
    if (round % 2 == 0) {
      // plant a true instance: push the pair through a shared channel
      const Channel w = sampler.sample_channel(n, m, 60);
      p2 = apply_channel(p, w);
      q2 = apply_channel(q, w);
    }
    const bool by_curve = relatively_majorises(p, q, p2, q2);
    const auto witness = channel_witness(p, q, p2, q2);
    CHECK(by_curve == witness.has_value());
    if (witness) {
      CHECK(apply_channel(p, *witness) == p2);
      CHECK(apply_channel(q, *witness) == q2);
      ++holds;
    }
  }
  CHECK(holds >= 30);  // every planted instance must be confirmed
}

TEST_CASE("embedding a pair against a positive reference") {
  const Embedding e = embed_to_uniform(pv({"1/2", "1/2"}), pv({"1/3", "2/3"}));
  CHECK(e.k == 3);
  CHECK(e.order == std::vector<std::size_t>{0, 1});
  CHECK(e.block_sizes == std::vector<std::size_t>{1, 2});
  CHECK(e.r == pv({"1/2", "1/4", "1/4"}));
}

TEST_CASE("embedding preserves the curve exactly") {
  SimplexSampler sampler(31);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 2 + static_cast<std::size_t>(sampler.next_below(3));
    const ProbVec p = sampler.sample(n, 24);
    const ProbVec q = sampler.sample_positive(n, 24);
    const Embedding e = embed_to_uniform(p, q);
    CHECK(lorenz_curve(e.r, uniform(e.k)) == lorenz_curve(p, q));
    std::size_t total = 0;
    for (std::size_t b : e.block_sizes) total += b;
    CHECK(total == e.k);
  }
}

TEST_CASE("embedding requires full support and a modest common denominator") {
  CHECK_THROWS_AS(embed_to_uniform(uniform(2), pv({"1", "0"})), NotFullSupport);
  CHECK_THROWS_AS(embed_to_uniform(uniform(2), pv({"1/1000003", "1000002/1000003"})), Error);
}

TEST_CASE("dilution channel flattens its reference") {
  const Channel w = dilution_channel(pv({"1/3", "2/3"}));
  const Channel expected({{rat("1"), rat("0"), rat("0")}, {rat("0"), rat("1/2"), rat("1/2")}});
  CHECK(w == expected);
  CHECK(apply_channel(pv({"1/3", "2/3"}), w) == uniform(3));
  CHECK_THROWS_AS(dilution_channel(pv({"1", "0"})), NotFullSupport);
}

TEST_CASE("upper approximant: dominated, close, and positive on the joint support") {
  SimplexSampler sampler(37);
  for (int round = 0; round < 30; ++round) {
    const std::size_t n = 2 + static_cast<std::size_t>(sampler.next_below(3));
    const ProbVec p = sampler.sample(n, 60);
    const ProbVec q = sampler.sample(n, 60);
    if (p == q) continue;
    const Rational delta = rat("1/64");
    const ProbVec approx = rational_upper_approx(p, q, delta);
    CHECK(relatively_majorises(p, q, p, approx));
    CHECK(linf_distance(q, approx) <= delta);
    for (std::size_t x = 0; x < n; ++x) {
      if (p[x] > 0 || q[x] > 0)
        CHECK(approx[x] > 0);
      else
        CHECK(approx[x] == 0);
    }
  }
}

TEST_CASE("lower approximant: dominating, close, support preserved") {
  SimplexSampler sampler(41);
  for (int round = 0; round < 30; ++round) {
    const std::size_t n = 2 + static_cast<std::size_t>(sampler.next_below(3));
    const ProbVec p = sampler.sample(n, 60);
    const ProbVec q = sampler.sample(n, 60);
    const Rational delta = rat("1/64");
    const ProbVec approx = rational_lower_approx(p, q, delta);
    CHECK(relatively_majorises(p, approx, p, q));
    CHECK(linf_distance(q, approx) <= delta);
    for (std::size_t x = 0; x < n; ++x) CHECK((approx[x] > 0) == (q[x] > 0));
  }
}

TEST_CASE("approximants tighten as the budget halves") {
  const ProbVec p = pv({"1/3", "1/4", "1/4", "1/6"});
  const ProbVec q = pv({"1/12", "1/6", "1/3", "5/12"});
  Rational delta = rat("1/8");
  for (int j = 0; j < 10; ++j) {
    const ProbVec hi = rational_upper_approx(p, q, delta);
    const ProbVec lo = rational_lower_approx(p, q, delta);
    CHECK(linf_distance(q, hi) <= delta);
    CHECK(linf_distance(q, lo) <= delta);
    CHECK(relatively_majorises(p, q, p, hi));
    CHECK(relatively_majorises(p, lo, p, q));
    delta /= 2;
  }
}

TEST_CASE("approximants police their inputs") {
  CHECK_THROWS_AS(rational_upper_approx(uniform(2), uniform(2), rat("1/8")), DegenerateInput);
  CHECK_THROWS_AS(rational_upper_approx(uniform(2), uniform(2), rat("0")), DomainViolation);
  CHECK_THROWS_AS(rational_upper_approx(uniform(2), uniform(3), rat("1/8")), DimensionMismatch);
  // equal pair from the dominating side: the only valid perturbation is none
  CHECK(rational_lower_approx(uniform(3), uniform(3), rat("1/8")) == uniform(3));
}
