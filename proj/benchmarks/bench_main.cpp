#include <benchmark/benchmark.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "majorlab/divergence.hpp"
#include "majorlab/lorenz.hpp"
#include "majorlab/majorisation.hpp"
#include "majorlab/prob_vec.hpp"
#include "majorlab/relmaj.hpp"
#include "majorlab/sampling.hpp"

namespace ml = majorlab;

namespace {

std::vector<std::pair<ml::ProbVec, ml::ProbVec>> sample_pairs(std::size_t n, std::size_t count,
                                                              std::uint64_t seed) {
  ml::SimplexSampler sampler(seed);
  std::vector<std::pair<ml::ProbVec, ml::ProbVec>> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    pairs.emplace_back(sampler.sample(n, 360), sampler.sample_positive(n, 360));
  return pairs;
}

// Exact bistochastic matrix: a rational mixture of n random permutations.
ml::Channel random_bistochastic(std::size_t n, std::uint64_t seed) {
  ml::SimplexSampler sampler(seed);
  const ml::ProbVec weights = sampler.sample_positive(n, 60);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<ml::Rational>> rows(n, std::vector<ml::Rational>(n, ml::Rational(0)));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t t = 0; t < n; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n; ++i) rows[i][perm[i]] += weights[t];
  }
  return ml::Channel(std::move(rows));
}

void BM_LorenzCurve(benchmark::State& state) {
  const auto pairs = sample_pairs(static_cast<std::size_t>(state.range(0)), 64, 17);
  std::size_t at = 0;
  for (auto _ : state) {
    const auto& [p, q] = pairs[at++ % pairs.size()];
    benchmark::DoNotOptimize(ml::lorenz_curve(p, q));
  }
}
BENCHMARK(BM_LorenzCurve)->Arg(4)->Arg(16)->Arg(64)->Arg(256);

void BM_RelativeMajorises(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto sources = sample_pairs(n, 32, 19);
  const auto targets = sample_pairs(n, 32, 23);
  std::size_t at = 0;
  for (auto _ : state) {
    const auto& [p, q] = sources[at % sources.size()];
    const auto& [p2, q2] = targets[at++ % targets.size()];
    benchmark::DoNotOptimize(ml::relatively_majorises(p, q, p2, q2));
  }
}
BENCHMARK(BM_RelativeMajorises)->Arg(4)->Arg(16)->Arg(64);

void BM_ChannelWitness(benchmark::State& state) {
  // feasible instances: targets produced by pushing the source through a channel
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  ml::SimplexSampler sampler(29);
  std::vector<std::array<ml::ProbVec, 4>> quads;
  for (std::size_t i = 0; i < 16; ++i) {
    ml::ProbVec p = sampler.sample(n, 360);
    ml::ProbVec q = sampler.sample_positive(n, 360);
    const ml::Channel w = sampler.sample_channel(n, n, 60);
    ml::ProbVec p2 = ml::apply_channel(p, w);
    ml::ProbVec q2 = ml::apply_channel(q, w);
    quads.push_back({std::move(p), std::move(q), std::move(p2), std::move(q2)});
  }
  std::size_t at = 0;
  for (auto _ : state) {
    const auto& quad = quads[at++ % quads.size()];
    benchmark::DoNotOptimize(ml::channel_witness(quad[0], quad[1], quad[2], quad[3]));
  }
}
BENCHMARK(BM_ChannelWitness)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

void BM_RenyiDivergence(benchmark::State& state) {
  const auto pairs = sample_pairs(64, 64, 31);
  const double alpha = static_cast<double>(state.range(0)) / 2.0;
  const ml::RenyiOrder order =
      state.range(0) < 0 ? ml::RenyiOrder::infinite() : ml::RenyiOrder(alpha);
  std::size_t at = 0;
  for (auto _ : state) {
    const auto& [p, q] = pairs[at++ % pairs.size()];
    benchmark::DoNotOptimize(ml::renyi_divergence(order, p, q));
  }
}
BENCHMARK(BM_RenyiDivergence)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Arg(-1);

void BM_BirkhoffDecompose(benchmark::State& state) {
  const ml::Channel w = random_bistochastic(static_cast<std::size_t>(state.range(0)), 37);
  for (auto _ : state) benchmark::DoNotOptimize(ml::birkhoff_decompose(w));
}
BENCHMARK(BM_BirkhoffDecompose)->Arg(4)->Arg(8)->Arg(16);

void BM_EmbedToUniform(benchmark::State& state) {
  ml::SimplexSampler sampler(41);
  const unsigned long denominator = static_cast<unsigned long>(state.range(0));
  std::vector<std::pair<ml::ProbVec, ml::ProbVec>> pairs;
  for (std::size_t i = 0; i < 32; ++i)
    pairs.emplace_back(sampler.sample(6, denominator), sampler.sample_positive(6, denominator));
  std::size_t at = 0;
  for (auto _ : state) {
    const auto& [p, q] = pairs[at++ % pairs.size()];
    benchmark::DoNotOptimize(ml::embed_to_uniform(p, q));
  }
}
BENCHMARK(BM_EmbedToUniform)->Arg(60)->Arg(2520)->Arg(27720);

}  // namespace

BENCHMARK_MAIN();
