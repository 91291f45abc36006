#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "majorlab/prob_vec.hpp"

namespace majorlab {

/// Exact majorisation test: p majorises q iff every prefix of the
/// descending-sorted p dominates the corresponding prefix of q (vectors of
/// different lengths are zero-padded to the longer one). Reflexive and
/// transitive; sorting ties are broken by original index (stable).
bool majorises(const ProbVec& p, const ProbVec& q);

/// Constructive witness for majorisation: a channel W with
///   apply_channel(p restricted to its support, W) == q   (exactly),
/// built from at most n-1 T-transforms composed with sorting permutations.
/// When |supp(p)| == |q| the result is doubly stochastic. When |supp(p)| < |q|
/// a uniform-to-uniform witness is found by exact feasibility search whenever
/// one exists; otherwise the padded T-transform composite is returned, which
/// still reproduces q exactly but cannot map u^(k) to u^(m) (no channel can:
/// e.g. p = e_1, q != u). Throws NotMajorised when !majorises(p, q).
Channel mixing_witness(const ProbVec& p, const ProbVec& q);

/// One term of a Birkhoff decomposition: weight and permutation (perm[i] = the
/// column receiving row i's mass).
struct BirkhoffTerm {
  Rational weight;
  std::vector<std::size_t> perm;
};

/// Exact decomposition of a square doubly stochastic channel into a convex
/// combination of permutation matrices: at most (n-1)^2 + 1 terms, weights
/// positive and summing to one, reconstruction exact. Greedy perfect-matching
/// extraction followed by an exact affine-dependency reduction to meet the
/// term bound. Throws NotBistochastic unless W is square and bistochastic.
std::vector<BirkhoffTerm> birkhoff_decompose(const Channel& w);

/// Rebuilds the channel sum_t weight_t * P_{perm_t} (helper for verification).
Channel birkhoff_recompose(const std::vector<BirkhoffTerm>& terms, std::size_t n);

}  // namespace majorlab
