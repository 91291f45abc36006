#pragma once

#include <functional>
#include <optional>
#include <string>

#include "majorlab/ext_real.hpp"
#include "majorlab/prob_vec.hpp"

namespace majorlab {

/// Order parameter of the Rényi family: a real in [0, +infinity].
struct RenyiOrder {
  explicit RenyiOrder(double a);
  static RenyiOrder infinite();

  double alpha;
  bool is_infinite() const { return std::isinf(alpha); }
};

/// A two-argument divergence together with the properties it claims. The flags
/// are claims to be spot-checked (see probe_axioms), never assumptions. All
/// values are in bits (binary logarithms); normalised instances satisfy
/// evaluate(e1, u^(2)) = 1 and evaluate(c, c) = 0.
struct DivergenceFn {
  std::string name;
  bool claims_additivity = false;
  bool claims_dpi = false;
  std::function<ExtReal(const ProbVec&, const ProbVec&)> evaluate;
};

/// A one-argument entropy-like functional (bits). Permutation-invariant by
/// contract; the flags mirror DivergenceFn and are checked, not assumed.
struct EntropyFn {
  std::string name;
  bool claims_additivity = false;
  bool claims_mixing_monotonicity = false;
  std::function<double(const ProbVec&)> evaluate;
};

/// Rényi divergence of order alpha, in bits.
///   alpha = 0      : -log2 of the q-mass of supp(p), exact rational inside the log
///   alpha in (0,1) : (1/(alpha-1)) log2 sum over {p_i q_i > 0} of p_i^a q_i^(1-a);
///                    +infinity only when that index set is empty
///   alpha = 1      : Kullback-Leibler sum, +infinity on support violation
///   alpha in (1,oo): as the middle case but +infinity on support violation
///   alpha = oo     : log2 max_i p_i/q_i over supp(p), exact rational inside the log
ExtReal renyi_divergence(RenyiOrder alpha, const ProbVec& p, const ProbVec& q);

/// Rényi entropy in bits, evaluated as log2 n - D_alpha(p || u^(n)).
/// At alpha = oo this yields -log2 max_i p_i.
double renyi_entropy(RenyiOrder alpha, const ProbVec& p);

/// The alpha = 0 divergence: -log2 sum of q over supp(p); +infinity iff the
/// supports are disjoint. The rational sum is exact; only the final log floats.
ExtReal min_relative_entropy(const ProbVec& p, const ProbVec& q);

/// The alpha = oo divergence: log2 max p_i/q_i over supp(p); +infinity iff
/// some p_i > 0 has q_i = 0. The maximum ratio is exact rational.
ExtReal max_relative_entropy(const ProbVec& p, const ProbVec& q);

/// min_relative_entropy(p||q) + min_relative_entropy(q||p): vanishes whenever
/// the supports coincide, so it is the canonical non-faithful test subject.
ExtReal pathological_relative_entropy(const ProbVec& p, const ProbVec& q);

DivergenceFn renyi_divergence_fn(RenyiOrder alpha);
EntropyFn renyi_entropy_fn(RenyiOrder alpha);
DivergenceFn min_relative_entropy_fn();
DivergenceFn max_relative_entropy_fn();
DivergenceFn pathological_relative_entropy_fn();

/// Binary-pair lower bound induced by d: d(e1 || [lambda, 1-lambda]) with
/// lambda = sum of q over supp(p), held exactly rational. lambda = 0 maps to
/// d(e1 || [0,1]).
ExtReal derived_min(const DivergenceFn& d, const ProbVec& p, const ProbVec& q);

/// Binary-pair upper bound induced by d: as derived_min but with
/// lambda = min over supp(p) of q_i/p_i (the exact rational 2^-Dmax).
ExtReal derived_max(const DivergenceFn& d, const ProbVec& p, const ProbVec& q);

enum class DualClass { symmetric, asymmetric, pathological };

/// Dual of a divergence under argument swap. The normaliser s = d(u^(2) || e1)
/// decides the class: finite positive -> symmetric (and `dual` evaluates
/// d(q||p)/s), +infinity -> asymmetric, zero -> pathological. Because no
/// convention fixes the argument order of the probe pair, both orders are
/// reported; the classification uses s_forward.
struct DualRelativeEntropy {
  DualClass classification;
  ExtReal s_forward;                 ///< d(u^(2) || e1)
  ExtReal s_reverse;                 ///< d(e1 || u^(2))
  std::optional<DivergenceFn> dual;  ///< present iff symmetric
};
DualRelativeEntropy dual_relative_entropy(const DivergenceFn& d);

/// Convex kernel f with f(1) = 0 for the f-divergence construction.
/// `eval_exact` is optional; when present it must agree with `eval` and is used
/// by the exact evaluation path (f_divergence_exact).
struct FDivergenceKernel {
  std::string name;
  std::function<double(double)> eval;
  std::function<Rational(const Rational&)> eval_exact;
};

FDivergenceKernel tv_kernel();    ///< f(t) = |t-1|/2 (total variation); exact
FDivergenceKernel chi2_kernel();  ///< f(t) = (t-1)^2 (chi-squared); exact
FDivergenceKernel kl_kernel();    ///< f(t) = t log2 t, f(0) = 0; double only

/// One run of equal entries of a distribution given in run-length form.
/// Multiplicities are arbitrary-precision: the uniform-reference embedding can
/// have an enormous dimension even when the source alphabet is tiny.
struct SchurBlock {
  Rational value;
  mpz_class multiplicity;
};

/// Schur-convex functional g for the divergence construction, evaluated on a
/// distribution in run-length form (multiplicities sum to the dimension; a
/// permutation-invariant g is a function of the multiset, so no generality is
/// lost). Contract (spot-checked, not proven): Schur-convex, and invariant
/// under uniform refinement g(r (x) u^(k)) = g(r).
struct SchurG {
  std::string name;
  std::function<double(const std::vector<SchurBlock>&)> eval;
};

/// g(p) = (1/n) sum_x f(n p_x) — the Schur functional a kernel f induces.
SchurG schur_g_from_kernel(const FDivergenceKernel& f);

/// Divergence induced by a Schur-convex g: for strictly positive rational q
/// (after discarding indices where both arguments vanish) evaluates g on the
/// uniform-reference block vector of embed_to_uniform(p, q). When q has zeros
/// against positive p no exact route exists; the value is the limit of
/// evaluations at strictly positive approximants q' with (p,q) above (p,q'),
/// delta starting at 1e-2 and halving for at most 40 rounds until consecutive
/// values agree within 1e-9. Throws ExtensionDiverged (carrying the last
/// certified bracket) when the sequence fails to settle.
DivergenceFn schur_divergence(const SchurG& g);

/// schur_divergence applied to schur_g_from_kernel(f). Claims the
/// data-processing inequality but not additivity.
DivergenceFn f_divergence(const FDivergenceKernel& f);

/// Exact-rational evaluation of the f-divergence for kernels with eval_exact
/// and strictly positive q (after discarding joint zeros): materialises the
/// block vector r of length k and sums f(k r_i)/k term by term — no closed-form
/// shortcut, so an identity test against sum_x q_x f(p_x/q_x) is meaningful.
/// Throws InvalidValue when the kernel has no exact form.
Rational f_divergence_exact(const FDivergenceKernel& f, const ProbVec& p,
                            const ProbVec& q);

}  // namespace majorlab
