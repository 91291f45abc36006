#pragma once

#include <cstddef>

#include "majorlab/divergence.hpp"
#include "majorlab/relmaj.hpp"

namespace majorlab {

/// Entropy induced by a divergence: p on n letters maps to
/// log2 n - d(p || u^(n)). The divergence must be finite against the uniform
/// reference (InvalidValue otherwise); sub-noise negatives are clamped to 0.
/// The returned functional inherits d's additivity claim, and claims mixing
/// monotonicity iff d claims the data-processing inequality.
EntropyFn entropy_from_relent(const DivergenceFn& d);

/// Divergence recovered from an entropy, evaluated at one pair. For q with
/// strictly positive entries (after discarding indices where both arguments
/// vanish) this is log2 k - h(r) with (r, k) = embed_to_uniform(p, q) — and
/// when q is exactly uniform the embedding is skipped, so the answer is
/// bitwise log2 n - h(p). For boundary q (zeros against positive p) no
/// embedding exists; the value is approached through strictly positive
/// dyadic-grid approximants q' with (p,q) above (p,q'), each yielding the
/// certified lower value log2 k' - h(r'), accelerated by one Richardson
/// extrapolation step. If the extrapolants settle within 1e-9 before the
/// embedding dimension cap, the limit is returned; otherwise
/// ExtensionDiverged carries the bracket (best certified lower value, +inf).
ExtReal relent_from_entropy(const EntropyFn& h, const ProbVec& p, const ProbVec& q);

/// Certified lower bound on the induced divergence at (p, q): checks the
/// exact Blackwell relation (p,q) above (r, u^(k)) and returns log2 k - h(r).
/// Throws WitnessInfeasible when the relation fails, DimensionMismatch when
/// |r| != k.
ExtReal extension_lower_witness(const EntropyFn& h, const ProbVec& p,
                                const ProbVec& q, const ProbVec& r, std::size_t k);

/// Certified upper bound: same value, but the verified relation is
/// (r, u^(k)) above (p, q).
ExtReal extension_upper_witness(const EntropyFn& h, const ProbVec& p,
                                const ProbVec& q, const ProbVec& r, std::size_t k);

/// log2 of the support size (the largest entropy; order-0 Rényi).
EntropyFn max_entropy_fn();

/// -log2 of the largest entry (the smallest entropy; order-infinity Rényi).
EntropyFn min_entropy_fn();

}  // namespace majorlab
