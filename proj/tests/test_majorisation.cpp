#include <doctest.h>

#include <vector>

#include "majorlab/errors.hpp"
#include "majorlab/majorisation.hpp"
#include "majorlab/sampling.hpp"
#include "test_util.hpp"

using namespace majorlab;
using test_util::pv;

TEST_CASE("point mass majorises everything; everything majorises uniform") {
  const std::vector<ProbVec> pool = {pv({"1/2", "1/3", "1/6"}), uniform(3), pv({"1", "0", "0"}),
                                     pv({"3/4", "0", "1/4"})};
  for (const ProbVec& p : pool) {
    CHECK(majorises(point_mass(0, 3), p));
    CHECK(majorises(p, uniform(3)));
    CHECK(majorises(p, p));  // reflexive
  }
}

TEST_CASE("incomparable pair is rejected both ways") {
  const ProbVec a = pv({"1/2", "1/4", "1/4"});
  const ProbVec b = pv({"2/5", "2/5", "1/5"});
  CHECK_FALSE(majorises(a, b));
  CHECK_FALSE(majorises(b, a));
}

TEST_CASE("different lengths are zero-padded") {
  CHECK(majorises(pv({"1/2", "1/2"}), pv({"1/2", "1/4", "1/4"})));
  CHECK_FALSE(majorises(pv({"1/2", "1/4", "1/4"}), pv({"1/2", "1/2"})));
  CHECK(majorises(pv({"1"}), pv({"1/3", "1/3", "1/3"})));
  // padding is an equivalence: appending zeros changes nothing
  CHECK(majorises(pv({"1/2", "1/2", "0"}), pv({"1/2", "1/2"})));
  CHECK(majorises(pv({"1/2", "1/2"}), pv({"1/2", "1/2", "0"})));
}

TEST_CASE("mixing witness reproduces the target exactly") {
  const ProbVec p = pv({"3/4", "1/4"});
  const ProbVec q = pv({"5/8", "3/8"});
  REQUIRE(majorises(p, q));
  const Channel w = mixing_witness(p, q);
  CHECK(is_bistochastic(w));
  CHECK(apply_channel(p, w) == q);
}

TEST_CASE("mixing witness throws when the order fails") {
  CHECK_THROWS_AS(mixing_witness(uniform(2), pv({"3/4", "1/4"})), NotMajorised);
}

TEST_CASE("witness with support smaller than the target alphabet") {
  const ProbVec p = pv({"1/2", "1/2", "0"});
  const ProbVec q = pv({"1/2", "1/4", "1/4"});
  REQUIRE(majorises(p, q));
  const Channel w = mixing_witness(p, q);
  CHECK(w.input_size() == 2);  // acts on p restricted to its support
  CHECK(apply_channel(p.restrict_to_support(), w) == q);
}

TEST_CASE("uniform-to-uniform witness found when one exists") {
  // u^(2) majorises u^(4); a bistochastic 2->4 witness exists and must be found
  const Channel w = mixing_witness(uniform(2), uniform(4));
  CHECK(apply_channel(uniform(2), w) == uniform(4));
  CHECK(is_bistochastic(w));
}

TEST_CASE("random mixtures of permutations are majorised, with verified witness") {
  SimplexSampler sampler(7);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 2 + static_cast<std::size_t>(sampler.next_below(4));
    const ProbVec p = sampler.sample(n, 60);
    // q = sum_t w_t * perm_t(p) is majorised by p (mixture of permutations)
    const std::size_t terms = 1 + static_cast<std::size_t>(sampler.next_below(3));
    const ProbVec weights = sampler.sample_positive(terms, 60);
    std::vector<Rational> acc(n, Rational(0));
    for (std::size_t t = 0; t < terms; ++t) {
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = i;
      for (std::size_t i = 0; i + 1 < n; ++i)
        std::swap(perm[i], perm[i + static_cast<std::size_t>(sampler.next_below(n - i))]);
      for (std::size_t i = 0; i < n; ++i) acc[perm[i]] += weights[t] * p[i];
    }
    const ProbVec q{std::move(acc)};
    REQUIRE(majorises(p, q));
    if (p.support_size() == n) {
      const Channel w = mixing_witness(p, q);
      CHECK(is_bistochastic(w));
      CHECK(apply_channel(p, w) == q);
    }
  }
}

TEST_CASE("birkhoff decomposition of the flat square channel") {
  const Channel flat({{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}});
  const auto terms = birkhoff_decompose(flat);
  REQUIRE(terms.size() == 2);
  Rational total(0);
  for (const auto& t : terms) {
    CHECK(t.weight > 0);
    total += t.weight;
  }
  CHECK(total == 1);
  CHECK(birkhoff_recompose(terms, 2) == flat);
}

TEST_CASE("birkhoff rejects non-bistochastic input") {
  CHECK_THROWS_AS(birkhoff_decompose(Channel({{Rational(1), Rational(0)}, {Rational(1), Rational(0)}})),
                  NotBistochastic);
  // rectangular bistochastic channels are rejected too: decomposition needs a square matrix
  const Channel spread({{Rational(1, 2), Rational(1, 2), Rational(0), Rational(0)},
                        {Rational(0), Rational(0), Rational(1, 2), Rational(1, 2)}});
  CHECK_THROWS_AS(birkhoff_decompose(spread), NotBistochastic);
}

TEST_CASE("birkhoff on random permutation mixtures: exact recomposition, bounded terms") {
  SimplexSampler sampler(13);
  for (int round = 0; round < 25; ++round) {
    const std::size_t n = 2 + static_cast<std::size_t>(sampler.next_below(4));
    const std::size_t k = 1 + static_cast<std::size_t>(sampler.next_below(6));
    const ProbVec weights = sampler.sample_positive(k, 60);
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t t = 0; t < k; ++t) {
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = i;
      for (std::size_t i = 0; i + 1 < n; ++i)
        std::swap(perm[i], perm[i + static_cast<std::size_t>(sampler.next_below(n - i))]);
      for (std::size_t i = 0; i < n; ++i) rows[i][perm[i]] += weights[t];
    }
    const Channel w{std::move(rows)};
    REQUIRE(is_bistochastic(w));
    const auto terms = birkhoff_decompose(w);
    CHECK(terms.size() <= (n - 1) * (n - 1) + 1);
    Rational total(0);
    for (const auto& t : terms) {
      CHECK(t.weight > 0);
      total += t.weight;
    }
    CHECK(total == 1);
    CHECK(birkhoff_recompose(terms, n) == w);
  }
}
