#pragma once

#include <cstddef>
#include <optional>

#include "majorlab/lorenz.hpp"
#include "majorlab/prob_vec.hpp"

namespace majorlab {

/// Searches for an exact channel W with p.W = p2 and q.W = q2 (rational
/// phase-1 feasibility; no floating point). Returns nullopt when no such
/// channel exists. This route is deliberately independent of the Lorenz-curve
/// test — the two must agree, and tests cross-check them against each other.
std::optional<Channel> channel_witness(const ProbVec& p, const ProbVec& q,
                                       const ProbVec& p2, const ProbVec& q2);

/// Result of embedding a pair into uniform-reference form.
struct Embedding {
  ProbVec r;          ///< block vector, |r| = k
  std::size_t k;      ///< least common denominator of q's entries
  std::vector<std::size_t> block_sizes;  ///< k_x per ratio-sorted source index
  std::vector<std::size_t> order;        ///< ratio-sorted source indices
};

/// Embeds (p, q) with strictly positive rational q into the equivalent pair
/// (r, u^(k)): sort indices by likelihood ratio (descending, stable), let k be
/// the least common denominator of q, give source index x a block of
/// k_x = q_x * k copies of p_x / k_x. The Lorenz curves of (p,q) and (r,u^(k))
/// coincide. Throws NotFullSupport when q has a zero entry; refuses k > 10^6.
Embedding embed_to_uniform(const ProbVec& p, const ProbVec& q);

/// The dilution channel of a strictly positive rational q: row i spreads its
/// mass uniformly over a block of k_i = q_i * k columns (index order), so that
/// apply_channel(q, W) = u^(k). Throws NotFullSupport when q has a zero;
/// refuses k > 10^5 (the matrix is materialised).
Channel dilution_channel(const ProbVec& q);

/// Strictly positive rational approximant of q from the majorised side:
/// returns q' with (p,q) relatively majorising (p,q'), ||q' - q||_inf <= delta,
/// and q' > 0 wherever p or q is positive (indices with p_x = q_x = 0 must stay
/// zero — no strictly positive completion exists there). Perturbs likelihood-
/// ratio blocks multiplicatively (equal-ratio ties move together), balances on
/// the minimal-ratio block, then verifies the Blackwell order exactly, halving
/// the perturbation if needed. Throws DegenerateInput when p = q.
ProbVec rational_upper_approx(const ProbVec& p, const ProbVec& q, const Rational& delta);

/// Support-preserving approximant of q from the majorising side: returns q'
/// with supp(q') = supp(q), ||q' - q||_inf <= delta, and (p,q') relatively
/// majorising (p,q). When p = q on the effective alphabet the only valid
/// perturbation is none and q itself is returned.
ProbVec rational_lower_approx(const ProbVec& p, const ProbVec& q, const Rational& delta);

}  // namespace majorlab
