#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "majorlab/prob_vec.hpp"

namespace majorlab {

enum class Verdict { holds, fails, inconclusive };

/// Semi-decision result for a condition quantified over a continuum of Rényi
/// orders, checked on a finite grid with margins.
struct TriState {
  Verdict verdict;
  /// Smallest slack observed across the counted grid points (may be +-inf).
  double margin;
  /// The violating order when verdict == fails.
  std::optional<double> witness_alpha;
  /// Which inequality family produced the extreme margin.
  std::string detail;
};

/// Default order grid: `points` values alpha = t/(1-t) at t = i/(points+1).
std::vector<double> default_alpha_grid(std::size_t points = 64);

/// Tests the strict order conditions for catalytic majorisation of p over p2:
/// D_a(p||u) > D_a(p2||u) and D_a(u||p) > D_a(u||p2) across the grid (the
/// default 64 points when `grid` is empty) plus alpha in {1/2, 1}, an exact
/// alpha = infinity endpoint, and an exact support-count check for the
/// alpha -> 0 limit (necessarily non-strict there, so it can only refute).
/// Inputs are compared as multisets: both are sorted, zero-padded to common
/// length, and indices that vanish in both are removed. Verdict: fails when
/// some margin < -1e-12 (witness recorded), holds when every counted margin
/// >= 1e-9, inconclusive between. Throws PreconditionViolated when the sorted
/// inputs coincide or neither has full support.
TriState trumps(const ProbVec& p, const ProbVec& p2,
                const std::vector<double>& grid = {});

/// Tests the non-strict conditions for catalytic relative majorisation of
/// (p,q) over (p2,q2): D_a(p||q) >= D_a(p2||q2) and D_a(q||p) >= D_a(q2||p2)
/// for grid orders >= 1/2 (1/2 and 1 always included) plus the exact
/// alpha = infinity endpoint. Since equality is admissible, the verdict is
/// fails when some margin < -1e-12 and holds otherwise; margins where both
/// sides are infinite count as 0. Throws PreconditionViolated unless p or q
/// has full support.
TriState catalytic_relmaj(const ProbVec& p, const ProbVec& q, const ProbVec& p2,
                          const ProbVec& q2, const std::vector<double>& grid = {});

/// Exact Blackwell test of (p (x) r, q (x) t) above (p2 (x) r, q2 (x) t).
/// Throws PreconditionViolated when t is not strictly positive,
/// DimensionMismatch when |r| != |t|.
bool verify_trumping_witness(const ProbVec& p, const ProbVec& q, const ProbVec& p2,
                             const ProbVec& q2, const ProbVec& r, const ProbVec& t);

/// Exhaustive search for a catalyst certifying (p,q) above (p2,q2) in the
/// relative-majorisation order. Candidates r run over all strictly positive
/// rational distributions of dimension <= max_dim whose entries share a
/// denominator <= denominator_bound, enumerated by (dimension, denominator,
/// ascending numerator tuple) with non-increasing entries and a gcd-canonical
/// numerator tuple (so each distribution appears once). When q and q2 are both
/// uniform the paired weight is t = u^(|r|) (the plain form); otherwise t runs
/// over the same candidate grid as r. Returns the first passing pair — the
/// enumeration order makes it the lexicographically smallest — or nullopt.
std::optional<std::pair<ProbVec, ProbVec>> brute_force_catalyst(
    const ProbVec& p, const ProbVec& q, const ProbVec& p2, const ProbVec& q2,
    std::size_t max_dim, unsigned long denominator_bound);

}  // namespace majorlab
