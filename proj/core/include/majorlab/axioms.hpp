#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "majorlab/divergence.hpp"

namespace majorlab {

/// One recorded counterexample: the offending inputs (rendered exactly) and
/// the signed margin (negative = violation size).
struct AxiomViolation {
  std::string instance;
  double margin;
};

/// Outcome of probing a single axiom. `violations` is non-empty iff
/// worst_margin < -tolerance (the list is truncated to the worst cases, the
/// count of all violations is `violation_count`).
struct AxiomResult {
  std::string axiom;
  std::size_t instances = 0;
  double worst_margin = 0.0;
  std::size_t violation_count = 0;
  std::vector<AxiomViolation> violations;
};

struct AxiomReport {
  std::string divergence;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<AxiomResult> axioms;  // data-processing, additivity, normalisation
};

struct ProbeOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  unsigned long denominator = 1'000'000;
  std::size_t max_dim = 5;        ///< largest alphabet drawn
  std::size_t mixed_period = 4;   ///< every k-th instance gets a q with zeros (0 = never)
  std::size_t max_recorded = 16;  ///< violations kept per axiom
};

/// Probes the data-processing inequality (D(pW||qW) <= D(p||q)), additivity on
/// product pairs, and the normalisation anchors D([1]||[1]) = 0 and
/// D(e1||u^(2)) = 1, on seeded random instances. Inequality margins are
/// left-minus-right; equality margins are -|difference|; margins where both
/// compared values are +infinity count as 0. Instances are pre-generated from
/// the seed, evaluated in parallel (capped by the MAJORLAB_THREADS environment
/// variable), and merged in index order, so the report depends only on
/// (divergence, options).
AxiomReport probe_axioms(const DivergenceFn& d, const ProbeOptions& options);
AxiomReport probe_axioms(const DivergenceFn& d, std::size_t samples,
                         std::uint64_t seed);

/// Curvature of d along the binary perturbation p(eps) = [1/2 + eps/2,
/// 1/2 - eps/2] against u^(2): returns 2 * min over the schedule of
/// f(eps)/eps^2 with f in natural-log units — a finite-sample upper surrogate
/// for the liminf that defines the order of a divergence. The default
/// schedule is eps = 2^-3 ... 2^-12. Returns +infinity when f(eps) is infinite
/// or when the ratios at the two smallest eps both exceed 1e3 (the signature
/// of a divergent limit). Schedule values must lie in (0, 1], strictly
/// decreasing (DomainViolation otherwise).
double order_parameter(const DivergenceFn& d,
                       const std::vector<double>& eps_schedule = {});

enum class FaithVerdict { not_faithful, faithful_evidence };

/// Evidence about whether d vanishes only at p = q. `zero_witness` is an
/// equal-support pair p != q with d(p||q) <= 1e-12 when one was found.
struct FaithfulnessReport {
  FaithVerdict verdict;
  double alpha_estimate = 0.0;
  std::optional<std::pair<ProbVec, ProbVec>> zero_witness;
  double witness_value = 0.0;
  std::size_t instances = 0;
};

/// Searches seeded random equal-support pairs for a zero of d at p != q and
/// estimates the order parameter; verdict is not_faithful when a witness is
/// found or the order estimate is <= 1e-6, else faithful_evidence.
FaithfulnessReport classify_faithfulness(const DivergenceFn& d, std::size_t samples,
                                         std::uint64_t seed);

struct SecondDerivativeCheck {
  double numeric;   ///< central second difference at step 1e-4, natural-log units
  double analytic;  ///< alpha * d * |v|^2
};

/// Compares the numeric second derivative of eps -> D_alpha(u + eps v || u)
/// at eps = 0 against the closed form alpha * d * |v|^2 (natural-log units).
/// v must sum to zero exactly and u + (1e-4) v must stay in the simplex
/// (DomainViolation otherwise).
SecondDerivativeCheck renyi_second_derivative_check(RenyiOrder alpha, std::size_t d,
                                                    const std::vector<Rational>& v);

}  // namespace majorlab
