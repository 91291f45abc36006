#include "majorlab/bijection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "majorlab/errors.hpp"

namespace majorlab {

namespace {

std::pair<ProbVec, ProbVec> effective_pair(const ProbVec& p, const ProbVec& q) {
  std::vector<Rational> pr, qr;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (sgn(p[x]) != 0 || sgn(q[x]) != 0) {
      pr.push_back(p[x]);
      qr.push_back(q[x]);
    }
  }
  return {ProbVec(std::move(pr)), ProbVec(std::move(qr))};
}

double witness_value(const EntropyFn& h, const ProbVec& r, std::size_t k) {
  return std::log2(static_cast<double>(k)) - h.evaluate(r);
}

/// Strictly positive dyadic approximant of a boundary q: on the grid of
/// denominator m = lcd(q) * 2^j, every index with q_x = 0 < p_x receives one
/// grain and the donor (the largest entry of the minimal-likelihood-ratio
/// class) gives them up. Returns nullopt when the donor would be exhausted or
/// the Blackwell relation (p,q) above (p,q') fails (too-coarse grid).
std::optional<ProbVec> dyadic_upper_approx(const ProbVec& p, const ProbVec& q,
                                           const mpz_class& m) {
  std::vector<mpz_class> counts(q.size());
  mpz_class grains(0);
  for (std::size_t x = 0; x < q.size(); ++x) {
    const Rational scaled = q[x] * Rational(m);
    counts[x] = scaled.get_num();  // exact: lcd(q) divides m
    if (sgn(q[x]) == 0) {
      counts[x] = 1;
      grains += 1;
    }
  }
  // Donor: largest count among the indices of minimal likelihood ratio p/q.
  std::size_t donor = q.size();
  std::optional<Rational> min_ratio;
  for (std::size_t x = 0; x < q.size(); ++x) {
    if (sgn(q[x]) == 0) continue;
    const Rational ratio = p[x] / q[x];
    if (!min_ratio || ratio < *min_ratio) {
      min_ratio = ratio;
      donor = x;
    } else if (ratio == *min_ratio && counts[x] > counts[donor]) {
      donor = x;
    }
  }
  if (donor == q.size() || counts[donor] <= grains) return std::nullopt;
  counts[donor] -= grains;

  std::vector<Rational> entries(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) {
    Rational e(counts[x]);
    e /= Rational(m);
    entries[x] = e;
  }
  ProbVec qa(std::move(entries));
  if (!relatively_majorises(p, q, p, qa)) return std::nullopt;
  return qa;
}

}  // namespace

EntropyFn entropy_from_relent(const DivergenceFn& d) {
  EntropyFn fn;
  fn.name = "ent[" + d.name + "]";
  fn.claims_additivity = d.claims_additivity;
  fn.claims_mixing_monotonicity = d.claims_dpi;
  fn.evaluate = [d](const ProbVec& p) {
    const ExtReal v = d.evaluate(p, uniform(p.size()));
    if (v.is_infinite()) {
      throw InvalidValue("entropy_from_relent: divergence infinite against uniform");
    }
    double h = std::log2(static_cast<double>(p.size())) - v.value();
    if (h < 0.0 && h > -1e-9) h = 0.0;
    if (h < 0.0) {
      throw InvalidValue("entropy_from_relent: negative entropy " + std::to_string(h));
    }
    return h;
  };
  return fn;
}

ExtReal relent_from_entropy(const EntropyFn& h, const ProbVec& p, const ProbVec& q) {
  if (p.size() != q.size()) throw DimensionMismatch("relent_from_entropy: |p| != |q|");
  if (q == uniform(q.size())) {
    return ExtReal::finite_clamped(witness_value(h, p, q.size()));
  }
  auto [pr, qr] = effective_pair(p, q);
  if (qr.is_strictly_positive()) {
    const Embedding emb = embed_to_uniform(pr, qr);
    return ExtReal::finite_clamped(witness_value(h, emb.r, emb.k));
  }

  // Boundary q: certified lower values through dyadic approximants, with one
  // Richardson step to cancel the O(1/m) error of the grain perturbation.
  constexpr unsigned long kDimCap = 1'000'000;
  const mpz_class base = lcm_of_denominators(qr.entries());
  double best_lower = -std::numeric_limits<double>::infinity();
  std::optional<double> prev_value, prev_extrap;
  for (mpz_class m = base; m <= kDimCap; m *= 2) {
    const auto qa = dyadic_upper_approx(pr, qr, m);
    if (!qa) continue;
    const Embedding emb = embed_to_uniform(pr, *qa);
    const double v = witness_value(h, emb.r, emb.k);
    best_lower = std::max(best_lower, v);
    if (prev_value) {
      const double extrap = 2.0 * v - *prev_value;
      if (prev_extrap && std::abs(extrap - *prev_extrap) <= 1e-9) {
        return ExtReal::finite_clamped(extrap);
      }
      prev_extrap = extrap;
    }
    prev_value = v;
  }
  throw ExtensionDiverged(
      "relent_from_entropy: boundary approximants failed to settle", best_lower,
      std::numeric_limits<double>::infinity());
}

ExtReal extension_lower_witness(const EntropyFn& h, const ProbVec& p,
                                const ProbVec& q, const ProbVec& r, std::size_t k) {
  if (r.size() != k) throw DimensionMismatch("extension witness: |r| != k");
  if (!relatively_majorises(p, q, r, uniform(k))) {
    throw WitnessInfeasible("extension_lower_witness: (p,q) does not sit above (r,u)");
  }
  return ExtReal::finite_clamped(witness_value(h, r, k));
}

ExtReal extension_upper_witness(const EntropyFn& h, const ProbVec& p,
                                const ProbVec& q, const ProbVec& r, std::size_t k) {
  if (r.size() != k) throw DimensionMismatch("extension witness: |r| != k");
  if (!relatively_majorises(r, uniform(k), p, q)) {
    throw WitnessInfeasible("extension_upper_witness: (r,u) does not sit above (p,q)");
  }
  return ExtReal::finite_clamped(witness_value(h, r, k));
}

EntropyFn max_entropy_fn() {
  EntropyFn fn;
  fn.name = "max-entropy";
  fn.claims_additivity = true;
  fn.claims_mixing_monotonicity = true;
  fn.evaluate = [](const ProbVec& p) {
    return std::log2(static_cast<double>(p.support_size()));
  };
  return fn;
}

EntropyFn min_entropy_fn() {
  EntropyFn fn;
  fn.name = "min-entropy";
  fn.claims_additivity = true;
  fn.claims_mixing_monotonicity = true;
  fn.evaluate = [](const ProbVec& p) {
    const Rational& top = *std::max_element(
        p.entries().begin(), p.entries().end());
    return -log2_rational(top);
  };
  return fn;
}

}  // namespace majorlab
