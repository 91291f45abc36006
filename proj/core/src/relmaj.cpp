#include "majorlab/relmaj.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "majorlab/errors.hpp"
#include "majorlab/simplex.hpp"

namespace majorlab {

namespace {

constexpr std::size_t kMaxEmbeddingDim = 1'000'000;
constexpr std::size_t kMaxDilutionDim = 100'000;

std::size_t lcd_as_size(const ProbVec& q, std::size_t limit) {
  const mpz_class k = lcm_of_denominators(q.entries());
  if (k > static_cast<unsigned long>(limit)) {
    throw Error("common denominator " + k.get_str() + " exceeds the supported limit");
  }
  return static_cast<std::size_t>(k.get_ui());
}

// Index classes for the perturbation constructions. Likelihood-ratio blocks
// are keyed by the exact ratio p_x/q_x; indices with q_x = 0 < p_x form the
// infinite-ratio class, indices with p_x = q_x = 0 are inert.
struct RatioClasses {
  std::vector<std::size_t> infinite;               // q = 0 < p
  std::vector<std::vector<std::size_t>> blocks;    // finite ratios, descending
  std::vector<std::size_t> inert;                  // p = q = 0
};

RatioClasses classify_ratios(const ProbVec& p, const ProbVec& q) {
  RatioClasses out;
  std::map<Rational, std::vector<std::size_t>, std::greater<Rational>> by_ratio;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (sgn(q[x]) == 0 && sgn(p[x]) == 0) {
      out.inert.push_back(x);
    } else if (sgn(q[x]) == 0) {
      out.infinite.push_back(x);
    } else {
      by_ratio[Rational(p[x] / q[x])].push_back(x);
    }
  }
  for (auto& [ratio, idx] : by_ratio) out.blocks.push_back(std::move(idx));
  return out;
}

Rational max_abs_diff(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational worst(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational d = a[i] - b[i];
    if (sgn(d) < 0) d = -d;
    if (d > worst) worst = d;
  }
  return worst;
}

}  // namespace

std::optional<Channel> channel_witness(const ProbVec& p, const ProbVec& q,
                                       const ProbVec& p2, const ProbVec& q2) {
  if (p.size() != q.size() || p2.size() != q2.size()) {
    throw DimensionMismatch("channel_witness: pair dimensions disagree");
  }
  const std::size_t n = p.size();
  const std::size_t m = p2.size();
  const std::size_t nvars = n * m;

  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  a.reserve(n + 2 * m);
  for (std::size_t i = 0; i < n; ++i) {  // row-stochasticity
    std::vector<Rational> row(nvars, Rational(0));
    for (std::size_t j = 0; j < m; ++j) row[i * m + j] = 1;
    a.push_back(std::move(row));
    b.push_back(Rational(1));
  }
  for (std::size_t j = 0; j < m; ++j) {  // p.W = p2
    std::vector<Rational> row(nvars, Rational(0));
    for (std::size_t i = 0; i < n; ++i) row[i * m + j] = p[i];
    a.push_back(std::move(row));
    b.push_back(p2[j]);
  }
  for (std::size_t j = 0; j < m; ++j) {  // q.W = q2
    std::vector<Rational> row(nvars, Rational(0));
    for (std::size_t i = 0; i < n; ++i) row[i * m + j] = q[i];
    a.push_back(std::move(row));
    b.push_back(q2[j]);
  }

  auto x = solve_equality_feasibility(a, b);
  if (!x) return std::nullopt;
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) rows[i][j] = (*x)[i * m + j];
  }
  Channel w(std::move(rows));
  // Defensive exact re-verification of the certificate before handing it out.
  if (apply_channel(p, w) != p2 || apply_channel(q, w) != q2) {
    throw WitnessInfeasible("internal: feasibility solution failed verification");
  }
  return w;
}

Embedding embed_to_uniform(const ProbVec& p, const ProbVec& q) {
  if (p.size() != q.size()) throw DimensionMismatch("embed_to_uniform: |p| != |q|");
  if (!q.is_strictly_positive()) {
    throw NotFullSupport("embed_to_uniform requires strictly positive q");
  }
  const std::size_t k = lcd_as_size(q, kMaxEmbeddingDim);

  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p[a] * q[b] > p[b] * q[a];  // ratio p/q descending, exact
  });

  std::vector<Rational> r;
  r.reserve(k);
  std::vector<std::size_t> block_sizes;
  block_sizes.reserve(order.size());
  const Rational kq(static_cast<unsigned long>(k));
  for (std::size_t x : order) {
    const Rational size_exact = q[x] * kq;
    const std::size_t kx = static_cast<std::size_t>(size_exact.get_num().get_ui());
    block_sizes.push_back(kx);
    const Rational cell = p[x] / size_exact;
    for (std::size_t c = 0; c < kx; ++c) r.push_back(cell);
  }
  return Embedding{ProbVec(std::move(r)), k, std::move(block_sizes), std::move(order)};
}

Channel dilution_channel(const ProbVec& q) {
  if (!q.is_strictly_positive()) {
    throw NotFullSupport("dilution_channel requires strictly positive q");
  }
  const std::size_t k = lcd_as_size(q, kMaxDilutionDim);
  const Rational kq(static_cast<unsigned long>(k));
  std::vector<std::vector<Rational>> rows(q.size(), std::vector<Rational>(k, Rational(0)));
  std::size_t offset = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Rational size_exact = q[i] * kq;
    const std::size_t ki = static_cast<std::size_t>(size_exact.get_num().get_ui());
    const Rational cell(1, static_cast<unsigned long>(ki));
    for (std::size_t c = 0; c < ki; ++c) rows[i][offset + c] = cell;
    offset += ki;
  }
  return Channel(std::move(rows));
}

ProbVec rational_upper_approx(const ProbVec& p, const ProbVec& q, const Rational& delta) {
  if (p.size() != q.size()) throw DimensionMismatch("approx: |p| != |q|");
  if (sgn(delta) <= 0) throw DomainViolation("approx: delta must be positive");
  const RatioClasses cls = classify_ratios(p, q);
  if (cls.infinite.empty() && cls.blocks.size() <= 1) {
    throw DegenerateInput("rational_upper_approx: p = q leaves no direction to perturb");
  }

  const std::vector<std::size_t>& last = cls.blocks.back();
  Rational block_mass(0);
  for (std::size_t x : last) block_mass += q[x];

  Rational c = std::min(delta, Rational(1, 4));
  for (int round = 0; round < 64; ++round, c /= 2) {
    std::vector<Rational> out = q.entries();
    Rational added(0);
    for (std::size_t x : cls.infinite) {
      out[x] = c * p[x];
      added += out[x];
    }
    for (std::size_t bi = 0; bi + 1 < cls.blocks.size(); ++bi) {
      for (std::size_t x : cls.blocks[bi]) {
        out[x] = q[x] * (1 + c);
        added += c * q[x];
      }
    }
    if (added >= block_mass) continue;  // minimal block cannot absorb; retry smaller
    const Rational shrink = 1 - added / block_mass;
    for (std::size_t x : last) out[x] = q[x] * shrink;

    if (max_abs_diff(out, q.entries()) > delta) continue;
    ProbVec candidate(std::move(out));
    if (relatively_majorises(p, q, p, candidate)) return candidate;
  }
  throw Error("internal: upper approximant failed to verify after 64 halvings");
}

ProbVec rational_lower_approx(const ProbVec& p, const ProbVec& q, const Rational& delta) {
  if (p.size() != q.size()) throw DimensionMismatch("approx: |p| != |q|");
  if (sgn(delta) <= 0) throw DomainViolation("approx: delta must be positive");
  const RatioClasses cls = classify_ratios(p, q);
  if (cls.blocks.size() <= 1) return q;  // nothing to shift toward; q is valid

  const std::vector<std::size_t>& last = cls.blocks.back();
  Rational block_mass(0);
  for (std::size_t x : last) block_mass += q[x];

  Rational c = std::min(delta, Rational(1, 4));
  for (int round = 0; round < 64; ++round, c /= 2) {
    std::vector<Rational> out = q.entries();
    Rational removed(0);
    for (std::size_t bi = 0; bi + 1 < cls.blocks.size(); ++bi) {
      for (std::size_t x : cls.blocks[bi]) {
        out[x] = q[x] * (1 - c);
        removed += c * q[x];
      }
    }
    const Rational grow = 1 + removed / block_mass;
    for (std::size_t x : last) out[x] = q[x] * grow;

    if (max_abs_diff(out, q.entries()) > delta) continue;
    ProbVec candidate(std::move(out));
    if (relatively_majorises(p, candidate, p, q)) return candidate;
  }
  throw Error("internal: lower approximant failed to verify after 64 halvings");
}

}  // namespace majorlab
