#include "majorlab/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <utility>
#include <vector>

#include "majorlab/errors.hpp"
#include "majorlab/relmaj.hpp"

namespace majorlab {

namespace {

std::string format_order(RenyiOrder alpha) {
  if (alpha.is_infinite()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", alpha.alpha);
  return buf;
}

/// Restriction of a pair to the indices where at least one argument is
/// positive. Joint zeros carry no information and would block embedding.
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

/// Run-length form of the uniform-reference embedding: the block vector
/// (x-th source index contributes q_x * k copies of p_x / (q_x * k)) without
/// materialising the k entries, so k may be astronomically large.
struct BlockEmbedding {
  mpz_class k;
  std::vector<SchurBlock> blocks;  // likelihood-ratio order, descending
};

BlockEmbedding embed_blocks(const ProbVec& p, const ProbVec& q) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p[a] * q[b] > p[b] * q[a];
  });
  BlockEmbedding out;
  out.k = lcm_of_denominators(q.entries());
  for (std::size_t x : order) {
    const Rational mult = q[x] * Rational(out.k);
    SchurBlock blk;
    blk.multiplicity = mult.get_num();
    blk.value = p[x] / mult;
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

ExtReal eval_schur_on_pair(const SchurG& g, const ProbVec& p, const ProbVec& q) {
  auto [pr, qr] = effective_pair(p, q);
  if (qr.is_strictly_positive()) {
    return ExtReal::finite_clamped(g.eval(embed_blocks(pr, qr).blocks));
  }
  // q vanishes against positive p: no embedding exists. Approach q through
  // strictly positive q' with (p,q) above (p,q'); each evaluation is a
  // certified lower value, and the sequence increases toward the extension.
  double prev = 0.0;
  bool have_prev = false;
  Rational delta(1, 100);
  for (int round = 0; round < 40; ++round, delta /= 2) {
    const ProbVec qa = rational_upper_approx(pr, qr, delta);
    const double v = g.eval(embed_blocks(pr, qa).blocks);
    if (have_prev && std::abs(v - prev) <= 1e-9) return ExtReal::finite_clamped(v);
    prev = v;
    have_prev = true;
  }
  throw ExtensionDiverged(
      "schur divergence: approximants at boundary q failed to settle", prev,
      std::numeric_limits<double>::infinity());
}

}  // namespace

RenyiOrder::RenyiOrder(double a) : alpha(a) {
  if (std::isnan(a) || a < 0.0) {
    throw DomainViolation("Renyi order must lie in [0, +infinity]");
  }
}

RenyiOrder RenyiOrder::infinite() {
  return RenyiOrder(std::numeric_limits<double>::infinity());
}

ExtReal min_relative_entropy(const ProbVec& p, const ProbVec& q) {
  if (p.size() != q.size()) throw DimensionMismatch("min_relative_entropy: |p| != |q|");
  Rational lambda(0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (sgn(p[x]) > 0) lambda += q[x];
  }
  if (sgn(lambda) == 0) return ExtReal::infinity();
  if (lambda == 1) return ExtReal::finite(0.0);
  return ExtReal::finite_clamped(-log2_rational(lambda));
}

ExtReal max_relative_entropy(const ProbVec& p, const ProbVec& q) {
  if (p.size() != q.size()) throw DimensionMismatch("max_relative_entropy: |p| != |q|");
  Rational worst(0);
  bool seen = false;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (sgn(p[x]) == 0) continue;
    if (sgn(q[x]) == 0) return ExtReal::infinity();
    const Rational ratio = p[x] / q[x];
    if (!seen || ratio > worst) worst = ratio;
    seen = true;
  }
  if (worst == 1) return ExtReal::finite(0.0);
  return ExtReal::finite_clamped(log2_rational(worst));
}

ExtReal pathological_relative_entropy(const ProbVec& p, const ProbVec& q) {
  return min_relative_entropy(p, q) + min_relative_entropy(q, p);
}

ExtReal renyi_divergence(RenyiOrder alpha, const ProbVec& p, const ProbVec& q) {
  if (p.size() != q.size()) throw DimensionMismatch("renyi_divergence: |p| != |q|");
  if (p == q) return ExtReal::finite(0.0);
  const double a = alpha.alpha;
  if (a == 0.0) return min_relative_entropy(p, q);
  if (alpha.is_infinite()) return max_relative_entropy(p, q);

  if (a == 1.0) {
    double sum = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (sgn(p[x]) == 0) continue;
      if (sgn(q[x]) == 0) return ExtReal::infinity();
      sum += to_double(p[x]) * (log2_rational(p[x]) - log2_rational(q[x]));
    }
    return ExtReal::finite_clamped(sum);
  }

  // alpha in (0,1) or (1,oo): log-sum-exp over T_x = a log2 p_x + (1-a) log2 q_x.
  std::vector<double> t;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (sgn(p[x]) == 0) continue;
    if (sgn(q[x]) == 0) {
      if (a > 1.0) return ExtReal::infinity();
      continue;  // a < 1: the term vanishes in the point-wise limit
    }
    t.push_back(a * log2_rational(p[x]) + (1.0 - a) * log2_rational(q[x]));
  }
  if (t.empty()) return ExtReal::infinity();  // disjoint supports, a < 1
  const double m = *std::max_element(t.begin(), t.end());
  double s = 0.0;
  for (double v : t) s += std::exp2(v - m);
  return ExtReal::finite_clamped((m + std::log2(s)) / (a - 1.0));
}

double renyi_entropy(RenyiOrder alpha, const ProbVec& p) {
  const ExtReal d = renyi_divergence(alpha, p, uniform(p.size()));
  double h = std::log2(static_cast<double>(p.size())) - d.value();
  if (h < 0.0 && h > -1e-9) h = 0.0;  // noise from the two independent logs
  return h;
}

DivergenceFn renyi_divergence_fn(RenyiOrder alpha) {
  DivergenceFn fn;
  fn.name = "renyi:" + format_order(alpha);
  fn.claims_additivity = true;
  fn.claims_dpi = true;
  fn.evaluate = [alpha](const ProbVec& p, const ProbVec& q) {
    return renyi_divergence(alpha, p, q);
  };
  return fn;
}

EntropyFn renyi_entropy_fn(RenyiOrder alpha) {
  EntropyFn fn;
  fn.name = "renyi-entropy:" + format_order(alpha);
  fn.claims_additivity = true;
  fn.claims_mixing_monotonicity = true;
  fn.evaluate = [alpha](const ProbVec& p) { return renyi_entropy(alpha, p); };
  return fn;
}

DivergenceFn min_relative_entropy_fn() {
  DivergenceFn fn;
  fn.name = "min";
  fn.claims_additivity = true;
  fn.claims_dpi = true;
  fn.evaluate = min_relative_entropy;
  return fn;
}

DivergenceFn max_relative_entropy_fn() {
  DivergenceFn fn;
  fn.name = "max";
  fn.claims_additivity = true;
  fn.claims_dpi = true;
  fn.evaluate = max_relative_entropy;
  return fn;
}

DivergenceFn pathological_relative_entropy_fn() {
  DivergenceFn fn;
  fn.name = "path";
  fn.claims_additivity = true;
  fn.claims_dpi = true;
  fn.evaluate = pathological_relative_entropy;
  return fn;
}

ExtReal derived_min(const DivergenceFn& d, const ProbVec& p, const ProbVec& q) {
  if (p.size() != q.size()) throw DimensionMismatch("derived_min: |p| != |q|");
  Rational lambda(0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (sgn(p[x]) > 0) lambda += q[x];
  }
  return d.evaluate(ProbVec{Rational(1), Rational(0)},
                    ProbVec{lambda, Rational(1) - lambda});
}

ExtReal derived_max(const DivergenceFn& d, const ProbVec& p, const ProbVec& q) {
  if (p.size() != q.size()) throw DimensionMismatch("derived_max: |p| != |q|");
  Rational lambda(0);
  bool seen = false;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (sgn(p[x]) == 0) continue;
    const Rational ratio = q[x] / p[x];
    if (!seen || ratio < lambda) lambda = ratio;
    seen = true;
  }
  return d.evaluate(ProbVec{Rational(1), Rational(0)},
                    ProbVec{lambda, Rational(1) - lambda});
}

DualRelativeEntropy dual_relative_entropy(const DivergenceFn& d) {
  DualRelativeEntropy out;
  out.s_forward = d.evaluate(uniform(2), point_mass(0, 2));
  out.s_reverse = d.evaluate(point_mass(0, 2), uniform(2));
  if (out.s_forward.is_infinite()) {
    out.classification = DualClass::asymmetric;
  } else if (out.s_forward.value() == 0.0) {
    out.classification = DualClass::pathological;
  } else {
    out.classification = DualClass::symmetric;
    const double s = out.s_forward.value();
    DivergenceFn dual;
    dual.name = d.name + ":dual";
    dual.claims_additivity = d.claims_additivity;
    dual.claims_dpi = d.claims_dpi;
    dual.evaluate = [d, s](const ProbVec& p, const ProbVec& q) {
      const ExtReal v = d.evaluate(q, p);
      if (v.is_infinite()) return ExtReal::infinity();
      return ExtReal::finite_clamped(v.value() / s);
    };
    out.dual = std::move(dual);
  }
  return out;
}

FDivergenceKernel tv_kernel() {
  FDivergenceKernel f;
  f.name = "tv";
  f.eval = [](double t) { return std::abs(t - 1.0) / 2.0; };
  f.eval_exact = [](const Rational& t) {
    Rational d = t - 1;
    if (sgn(d) < 0) d = -d;
    return Rational(d / 2);
  };
  return f;
}

FDivergenceKernel chi2_kernel() {
  FDivergenceKernel f;
  f.name = "chi2";
  f.eval = [](double t) { return (t - 1.0) * (t - 1.0); };
  f.eval_exact = [](const Rational& t) {
    const Rational d = t - 1;
    return Rational(d * d);
  };
  return f;
}

FDivergenceKernel kl_kernel() {
  FDivergenceKernel f;
  f.name = "kl";
  f.eval = [](double t) { return t <= 0.0 ? 0.0 : t * std::log2(t); };
  f.eval_exact = nullptr;  // t log2 t has no rational closed form
  return f;
}

SchurG schur_g_from_kernel(const FDivergenceKernel& f) {
  SchurG g;
  g.name = "g[" + f.name + "]";
  g.eval = [f](const std::vector<SchurBlock>& blocks) {
    mpz_class n(0);
    for (const SchurBlock& b : blocks) n += b.multiplicity;
    const Rational dim = Rational(n);
    double sum = 0.0;
    for (const SchurBlock& b : blocks) {
      const double term = f.eval(to_double(Rational(dim * b.value)));
      sum += to_double(Rational(Rational(b.multiplicity) / dim)) * term;
    }
    return sum;
  };
  return g;
}

DivergenceFn schur_divergence(const SchurG& g) {
  DivergenceFn fn;
  fn.name = "schur[" + g.name + "]";
  fn.claims_additivity = false;
  fn.claims_dpi = true;
  fn.evaluate = [g](const ProbVec& p, const ProbVec& q) {
    if (p.size() != q.size()) throw DimensionMismatch("schur divergence: |p| != |q|");
    return eval_schur_on_pair(g, p, q);
  };
  return fn;
}

DivergenceFn f_divergence(const FDivergenceKernel& f) {
  DivergenceFn fn = schur_divergence(schur_g_from_kernel(f));
  fn.name = "f:" + f.name;
  return fn;
}

Rational f_divergence_exact(const FDivergenceKernel& f, const ProbVec& p,
                            const ProbVec& q) {
  if (p.size() != q.size()) throw DimensionMismatch("f_divergence_exact: |p| != |q|");
  if (!f.eval_exact) {
    throw InvalidValue("f_divergence_exact: kernel '" + f.name + "' has no exact form");
  }
  auto [pr, qr] = effective_pair(p, q);
  if (!qr.is_strictly_positive()) {
    throw NotFullSupport("f_divergence_exact requires q > 0 wherever p > 0");
  }
  const Embedding emb = embed_to_uniform(pr, qr);
  const Rational k(static_cast<unsigned long>(emb.k));
  Rational sum(0);
  for (std::size_t i = 0; i < emb.r.size(); ++i) {
    sum += f.eval_exact(Rational(k * emb.r[i]));
  }
  return Rational(sum / k);
}

}  // namespace majorlab
