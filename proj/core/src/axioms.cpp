#include "majorlab/axioms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>
#include <vector>

#include "majorlab/errors.hpp"
#include "majorlab/sampling.hpp"

namespace majorlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLn2 = std::log(2.0);

std::string fmt_dist(const ProbVec& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += to_string(p[i]);
  }
  out += "]";
  return out;
}

std::string fmt_channel(const Channel& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.input_size(); ++i) {
    if (i) out += ",";
    out += "[";
    const auto& row = w.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ",";
      out += to_string(row[j]);
    }
    out += "]";
  }
  out += "]";
  return out;
}

/// Signed margin for "lhs >= rhs": plain difference when both are finite,
/// 0 when both are infinite (the inequality holds with no slack to measure),
/// +infinity when only the left is infinite, -infinity when only the right is.
double inequality_margin(const ExtReal& lhs, const ExtReal& rhs) {
  if (lhs.is_infinite() && rhs.is_infinite()) return 0.0;
  if (lhs.is_infinite()) return kInf;
  if (rhs.is_infinite()) return -kInf;
  return lhs.value() - rhs.value();
}

/// Signed margin for "lhs == rhs": -|difference|, with consistent infinities
/// counting as exact agreement.
double equality_margin(const ExtReal& lhs, const ExtReal& rhs) {
  if (lhs.is_infinite() && rhs.is_infinite()) return 0.0;
  if (lhs.is_infinite() || rhs.is_infinite()) return -kInf;
  return -std::abs(lhs.value() - rhs.value());
}

double equality_margin(const ExtReal& lhs, double target) {
  if (lhs.is_infinite()) return -kInf;
  return -std::abs(lhs.value() - target);
}

std::size_t thread_budget(std::size_t work) {
  std::size_t threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (const char* env = std::getenv("MAJORLAB_THREADS")) {
    char* end = nullptr;
    unsigned long parsed = std::strtoul(env, &end, 10);
    if (end != env && parsed > 0) threads = static_cast<std::size_t>(parsed);
  }
  return std::max<std::size_t>(1, std::min(threads, work));
}

/// Evaluates fn on every instance, in index order semantics: results land in a
/// pre-sized array by index, so the outcome is identical whether one thread or
/// many did the work. The first exception wins and is rethrown after joining.
template <typename Inst, typename Fn>
std::vector<double> margins_over(const std::vector<Inst>& instances, Fn&& fn) {
  std::vector<double> margins(instances.size(), 0.0);
  const std::size_t threads = thread_budget(instances.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) margins[i] = fn(instances[i]);
    return margins;
  }
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= instances.size()) return;
      try {
        margins[i] = fn(instances[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return margins;
}

struct DpiInstance {
  ProbVec p, q;
  Channel w;
};

struct ProductInstance {
  ProbVec p1, q1, p2, q2;
};

template <typename Inst, typename Describe>
AxiomResult assemble(std::string axiom, const std::vector<Inst>& instances,
                     const std::vector<double>& margins, double tolerance,
                     std::size_t max_recorded, Describe&& describe) {
  AxiomResult result;
  result.axiom = std::move(axiom);
  result.instances = instances.size();
  result.worst_margin = margins.empty() ? 0.0 : *std::min_element(margins.begin(), margins.end());
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < margins.size(); ++i)
    if (margins[i] < -tolerance) bad.push_back(i);
  result.violation_count = bad.size();
  std::sort(bad.begin(), bad.end(), [&](std::size_t a, std::size_t b) {
    if (margins[a] != margins[b]) return margins[a] < margins[b];
    return a < b;
  });
  if (bad.size() > max_recorded) bad.resize(max_recorded);
  for (std::size_t i : bad) result.violations.push_back({describe(instances[i]), margins[i]});
  return result;
}

}  // namespace

AxiomReport probe_axioms(const DivergenceFn& d, const ProbeOptions& options) {
  if (options.max_dim < 2) throw DomainViolation("probe_axioms: max_dim must be at least 2");
  if (options.samples == 0) throw DomainViolation("probe_axioms: need at least one sample");

  // All randomness is drawn serially up front from a single seeded stream, so
  // the instance list — and hence the whole report — is a pure function of
  // (divergence, options) regardless of how many threads evaluate it.
  SimplexSampler sampler(options.seed);
  const unsigned long denom = options.denominator;

  std::vector<DpiInstance> dpi;
  dpi.reserve(options.samples);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(sampler.next_below(options.max_dim - 1));
    const std::size_t m = 2 + static_cast<std::size_t>(sampler.next_below(options.max_dim - 1));
    ProbVec p = sampler.sample(n, denom);
    const bool mixed =
        options.mixed_period != 0 && (i % options.mixed_period) == options.mixed_period - 1;
    ProbVec q = mixed ? sampler.sample_with_support(
                            n, 1 + static_cast<std::size_t>(sampler.next_below(n)), denom)
                      : sampler.sample_positive(n, denom);
    Channel w = sampler.sample_channel(n, m, denom);
    dpi.push_back({std::move(p), std::move(q), std::move(w)});
  }

  std::vector<ProductInstance> products;
  products.reserve(options.samples);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const std::size_t n1 = 2 + static_cast<std::size_t>(sampler.next_below(2));
    const std::size_t n2 = 2 + static_cast<std::size_t>(sampler.next_below(2));
    ProbVec p1 = sampler.sample(n1, denom);
    const bool mixed =
        options.mixed_period != 0 && (i % options.mixed_period) == options.mixed_period - 1;
    ProbVec q1 = mixed ? sampler.sample_with_support(
                             n1, 1 + static_cast<std::size_t>(sampler.next_below(n1)), denom)
                       : sampler.sample_positive(n1, denom);
    ProbVec p2 = sampler.sample(n2, denom);
    ProbVec q2 = sampler.sample_positive(n2, denom);
    products.push_back({std::move(p1), std::move(q1), std::move(p2), std::move(q2)});
  }

  std::vector<double> dpi_margins = margins_over(dpi, [&](const DpiInstance& inst) {
    const ExtReal before = d.evaluate(inst.p, inst.q);
    const ExtReal after = d.evaluate(apply_channel(inst.p, inst.w), apply_channel(inst.q, inst.w));
    return inequality_margin(before, after);
  });

  std::vector<double> product_margins = margins_over(products, [&](const ProductInstance& inst) {
    const ExtReal joint = d.evaluate(tensor(inst.p1, inst.p2), tensor(inst.q1, inst.q2));
    const ExtReal split = d.evaluate(inst.p1, inst.q1) + d.evaluate(inst.p2, inst.q2);
    return equality_margin(joint, split);
  });

  const ProbVec one{std::vector<Rational>{Rational(1)}};
  std::vector<double> norm_margins = {
      equality_margin(d.evaluate(one, one), 0.0),
      equality_margin(d.evaluate(point_mass(0, 2), uniform(2)), 1.0),
  };
  std::vector<std::string> norm_names = {"D([1]||[1]) = 0", "D([1,0]||[1/2,1/2]) = 1"};

  AxiomReport report;
  report.divergence = d.name;
  report.seed = options.seed;
  report.tolerance = options.tolerance;
  report.axioms.push_back(assemble(
      "data-processing", dpi, dpi_margins, options.tolerance, options.max_recorded,
      [](const DpiInstance& inst) {
        return "p=" + fmt_dist(inst.p) + " q=" + fmt_dist(inst.q) + " w=" + fmt_channel(inst.w);
      }));
  report.axioms.push_back(assemble(
      "additivity", products, product_margins, options.tolerance, options.max_recorded,
      [](const ProductInstance& inst) {
        return "p1=" + fmt_dist(inst.p1) + " q1=" + fmt_dist(inst.q1) + " p2=" + fmt_dist(inst.p2) +
               " q2=" + fmt_dist(inst.q2);
      }));
  report.axioms.push_back(assemble("normalisation", norm_names, norm_margins, options.tolerance,
                                   options.max_recorded,
                                   [](const std::string& name) { return name; }));
  return report;
}

AxiomReport probe_axioms(const DivergenceFn& d, std::size_t samples, std::uint64_t seed) {
  ProbeOptions options;
  options.samples = samples;
  options.seed = seed;
  return probe_axioms(d, options);
}

double order_parameter(const DivergenceFn& d, const std::vector<double>& eps_schedule) {
  std::vector<double> schedule = eps_schedule;
  if (schedule.empty())
    for (int k = 3; k <= 12; ++k) schedule.push_back(std::ldexp(1.0, -k));
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0.0) || schedule[i] > 1.0)
      throw DomainViolation("order_parameter: schedule values must lie in (0, 1]");
    if (i > 0 && schedule[i] >= schedule[i - 1])
      throw DomainViolation("order_parameter: schedule must be strictly decreasing");
  }

  const ProbVec u2 = uniform(2);
  const Rational half(1, 2);
  std::vector<double> ratios;
  ratios.reserve(schedule.size());
  for (double eps : schedule) {
    const Rational e(eps);  // exact: doubles are binary rationals
    ProbVec p{std::vector<Rational>{half + e / 2, half - e / 2}};
    const ExtReal f = d.evaluate(p, u2);
    if (f.is_infinite()) return kInf;
    const double f_nats = f.value() * kLn2;
    ratios.push_back(2.0 * f_nats / (eps * eps));
  }
  // A divergent limit shows up as ratios that keep climbing instead of
  // settling: when the two finest probes both exceed the cap, report +inf.
  constexpr double kDivergenceCap = 1e3;
  const std::size_t n = ratios.size();
  if (n >= 2 && ratios[n - 1] > kDivergenceCap && ratios[n - 2] > kDivergenceCap) return kInf;
  return *std::min_element(ratios.begin(), ratios.end());
}

FaithfulnessReport classify_faithfulness(const DivergenceFn& d, std::size_t samples,
                                         std::uint64_t seed) {
  SimplexSampler sampler(seed);
  constexpr unsigned long kDenominator = 1'000'000;
  constexpr double kZeroTol = 1e-12;

  FaithfulnessReport report;
  report.instances = samples;
  for (std::size_t i = 0; i < samples && !report.zero_witness; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(sampler.next_below(3));
    const std::size_t s = 1 + static_cast<std::size_t>(sampler.next_below(n));
    // One shared support mask: faithfulness is only in question where both
    // distributions put mass on exactly the same letters.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t j = 0; j < s; ++j)
      std::swap(idx[j], idx[j + static_cast<std::size_t>(sampler.next_below(n - j))]);
    const ProbVec inner_p = sampler.sample_positive(s, kDenominator);
    const ProbVec inner_q = sampler.sample_positive(s, kDenominator);
    std::vector<Rational> pe(n, Rational(0)), qe(n, Rational(0));
    for (std::size_t j = 0; j < s; ++j) {
      pe[idx[j]] = inner_p[j];
      qe[idx[j]] = inner_q[j];
    }
    ProbVec p{std::move(pe)}, q{std::move(qe)};
    if (p == q) continue;
    const ExtReal value = d.evaluate(p, q);
    if (value.is_finite() && value.value() <= kZeroTol) {
      report.zero_witness = std::make_pair(p, q);
      report.witness_value = value.value();
    }
  }
  report.alpha_estimate = order_parameter(d);
  const bool degenerate_order = report.alpha_estimate <= 1e-6;
  report.verdict = (report.zero_witness || degenerate_order) ? FaithVerdict::not_faithful
                                                             : FaithVerdict::faithful_evidence;
  return report;
}

SecondDerivativeCheck renyi_second_derivative_check(RenyiOrder alpha, std::size_t d,
                                                    const std::vector<Rational>& v) {
  if (d == 0) throw DomainViolation("renyi_second_derivative_check: dimension must be positive");
  if (v.size() != d)
    throw DimensionMismatch("renyi_second_derivative_check: perturbation has size " +
                            std::to_string(v.size()) + ", expected " + std::to_string(d));
  Rational sum(0);
  for (const Rational& coord : v) sum += coord;
  if (sum != 0)
    throw DomainViolation("renyi_second_derivative_check: perturbation must sum to zero");

  const Rational h(1, 10000);
  const Rational base(1, static_cast<unsigned long>(d));
  std::vector<Rational> plus(d), minus(d);
  for (std::size_t x = 0; x < d; ++x) {
    plus[x] = base + h * v[x];
    minus[x] = base - h * v[x];
    if (plus[x] < 0 || minus[x] < 0)
      throw DomainViolation(
          "renyi_second_derivative_check: u + (1e-4) v leaves the probability simplex");
  }
  const ProbVec u = uniform(d);
  const ProbVec p_plus{std::move(plus)};
  const ProbVec p_minus{std::move(minus)};
  const double f_plus = renyi_divergence(alpha, p_plus, u).value() * kLn2;
  const double f_minus = renyi_divergence(alpha, p_minus, u).value() * kLn2;
  const double h_sq = 1e-8;  // (1e-4)^2, and f(0) = D(u||u) = 0 drops out

  SecondDerivativeCheck check;
  check.numeric = (f_plus + f_minus) / h_sq;
  if (alpha.is_infinite()) {
    check.analytic = kInf;
  } else {
    double v_sq = 0.0;
    for (const Rational& coord : v) v_sq += to_double(coord * coord);
    check.analytic = alpha.alpha * static_cast<double>(d) * v_sq;
  }
  return check;
}

}  // namespace majorlab
