#include "majorlab/catalytic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "majorlab/divergence.hpp"
#include "majorlab/errors.hpp"
#include "majorlab/lorenz.hpp"
#include "majorlab/majorisation.hpp"

namespace majorlab {

namespace {

constexpr double kFailTol = 1e-12;
constexpr double kHoldTol = 1e-9;

/// Gap L - R between two extended reals as a double; two infinities cancel.
double ext_margin(const ExtReal& l, const ExtReal& r) {
  if (l.is_infinite() && r.is_infinite()) return 0.0;
  if (l.is_infinite()) return std::numeric_limits<double>::infinity();
  if (r.is_infinite()) return -std::numeric_limits<double>::infinity();
  return l.value() - r.value();
}

struct MarginTracker {
  double min_margin = std::numeric_limits<double>::infinity();
  double witness_alpha = 0.0;
  std::string detail;

  void record(double margin, double alpha, const std::string& family) {
    if (margin < min_margin) {
      min_margin = margin;
      witness_alpha = alpha;
      detail = family;
    }
  }
};

TriState settle(const MarginTracker& t, bool strict) {
  TriState out;
  out.margin = t.min_margin;
  out.detail = t.detail;
  if (t.min_margin < -kFailTol) {
    out.verdict = Verdict::fails;
    out.witness_alpha = t.witness_alpha;
  } else if (!strict || t.min_margin >= kHoldTol) {
    out.verdict = Verdict::holds;
  } else {
    out.verdict = Verdict::inconclusive;
  }
  return out;
}

/// Sorted-descending entries of p and p2 on a common alphabet with joint
/// trailing zeros removed.
std::pair<std::vector<Rational>, std::vector<Rational>> aligned_sorted(
    const ProbVec& p, const ProbVec& p2) {
  std::vector<Rational> a = p.entries();
  std::vector<Rational> b = p2.entries();
  std::sort(a.begin(), a.end(), std::greater<Rational>());
  std::sort(b.begin(), b.end(), std::greater<Rational>());
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, Rational(0));
  b.resize(n, Rational(0));
  std::size_t keep = n;
  while (keep > 1 && sgn(a[keep - 1]) == 0 && sgn(b[keep - 1]) == 0) --keep;
  a.resize(keep);
  b.resize(keep);
  return {std::move(a), std::move(b)};
}

std::vector<double> grid_or_default(const std::vector<double>& grid) {
  return grid.empty() ? default_alpha_grid() : grid;
}

/// All gcd-canonical non-increasing positive numerator tuples of the given
/// length summing to `denom`, in ascending lexicographic order.
void enumerate_numerators(unsigned long denom, std::size_t length,
                          std::vector<unsigned long>& prefix,
                          const std::function<bool(const std::vector<unsigned long>&)>& emit,
                          bool& stop) {
  if (stop) return;
  if (length == 1) {
    const unsigned long last = denom;
    if (!prefix.empty() && last > prefix.back()) return;
    prefix.push_back(last);
    unsigned long g = 0;
    for (unsigned long v : prefix) g = std::gcd(g, v);
    if (g == 1) stop = emit(prefix);
    prefix.pop_back();
    return;
  }
  const unsigned long cap = prefix.empty() ? denom : prefix.back();
  // first*length >= remaining total, so start at the ceiling of the average
  unsigned long first = (denom + length - 1) / length;
  for (; first <= cap && denom >= first + (length - 1); ++first) {
    const unsigned long rest = denom - first;
    if (rest > (length - 1) * first) continue;  // tail cannot stay <= first
    prefix.push_back(first);
    enumerate_numerators(rest, length - 1, prefix, emit, stop);
    prefix.pop_back();
    if (stop) return;
  }
}

/// Visits candidate catalysts of dimension `dim` in (denominator, tuple) order.
bool for_each_candidate(std::size_t dim, unsigned long denominator_bound,
                        const std::function<bool(const ProbVec&)>& visit) {
  for (unsigned long denom = dim; denom <= denominator_bound; ++denom) {
    bool stop = false;
    std::vector<unsigned long> prefix;
    enumerate_numerators(denom, dim, prefix,
                         [&](const std::vector<unsigned long>& nums) {
                           std::vector<Rational> entries;
                           entries.reserve(nums.size());
                           for (unsigned long v : nums) {
                             Rational e(v, denom);
                             e.canonicalize();
                             entries.push_back(std::move(e));
                           }
                           return visit(ProbVec(std::move(entries)));
                         },
                         stop);
    if (stop) return true;
  }
  return false;
}

}  // namespace

std::vector<double> default_alpha_grid(std::size_t points) {
  std::vector<double> grid;
  grid.reserve(points);
  for (std::size_t i = 1; i <= points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points + 1);
    grid.push_back(t / (1.0 - t));
  }
  return grid;
}

TriState trumps(const ProbVec& p, const ProbVec& p2, const std::vector<double>& grid) {
  auto [a, b] = aligned_sorted(p, p2);
  if (a == b) throw PreconditionViolated("trumps: the distributions coincide");
  const bool a_full = sgn(a.back()) > 0;
  const bool b_full = sgn(b.back()) > 0;
  if (!a_full && !b_full) {
    throw PreconditionViolated("trumps: neither input has full support");
  }
  const ProbVec pa{std::vector<Rational>(a)};
  const ProbVec pb{std::vector<Rational>(b)};
  const std::size_t n = pa.size();
  const ProbVec u = uniform(n);

  MarginTracker tracker;
  std::vector<double> orders = grid_or_default(grid);
  orders.push_back(0.5);
  orders.push_back(1.0);
  for (double alpha : orders) {
    const RenyiOrder ord(alpha);
    tracker.record(ext_margin(renyi_divergence(ord, pa, u), renyi_divergence(ord, pb, u)),
                   alpha, "D(.||u)");
    tracker.record(ext_margin(renyi_divergence(ord, u, pa), renyi_divergence(ord, u, pb)),
                   alpha, "D(u||.)");
  }
  const double inf = std::numeric_limits<double>::infinity();
  // alpha = infinity, decided exactly: log2(max a / max b) and -log2(n*min).
  if (a.front() == b.front()) {
    tracker.record(0.0, inf, "D(.||u)");
  } else {
    tracker.record(log2_rational(Rational(a.front() / b.front())), inf, "D(.||u)");
  }
  if (!a_full) {
    tracker.record(inf, inf, "D(u||.)");  // left side infinite, right finite
  } else if (!b_full) {
    tracker.record(-inf, inf, "D(u||.)");
  } else if (a.back() == b.back()) {
    tracker.record(0.0, inf, "D(u||.)");
  } else {
    tracker.record(log2_rational(Rational(b.back() / a.back())), inf, "D(u||.)");
  }
  // alpha -> 0 limit: exact support counts. The limit inequality is only
  // non-strict, so it may refute but never contributes a counted margin.
  const auto support_count = [](const std::vector<Rational>& v) {
    std::size_t c = 0;
    for (const Rational& e : v) c += sgn(e) > 0;
    return c;
  };
  if (support_count(a) > support_count(b)) {
    TriState out;
    out.verdict = Verdict::fails;
    out.margin = std::log2(static_cast<double>(support_count(b))) -
                 std::log2(static_cast<double>(support_count(a)));
    out.witness_alpha = 0.0;
    out.detail = "D(.||u) limit";
    return out;
  }
  return settle(tracker, /*strict=*/true);
}

TriState catalytic_relmaj(const ProbVec& p, const ProbVec& q, const ProbVec& p2,
                          const ProbVec& q2, const std::vector<double>& grid) {
  if (p.size() != q.size() || p2.size() != q2.size()) {
    throw DimensionMismatch("catalytic_relmaj: pair dimensions disagree");
  }
  if (!p.is_strictly_positive() && !q.is_strictly_positive()) {
    throw PreconditionViolated("catalytic_relmaj: neither p nor q has full support");
  }
  MarginTracker tracker;
  std::vector<double> orders;
  for (double alpha : grid_or_default(grid)) {
    if (alpha >= 0.5) orders.push_back(alpha);
  }
  orders.push_back(0.5);
  orders.push_back(1.0);
  for (double alpha : orders) {
    const RenyiOrder ord(alpha);
    tracker.record(ext_margin(renyi_divergence(ord, p, q), renyi_divergence(ord, p2, q2)),
                   alpha, "D(p||q)");
    tracker.record(ext_margin(renyi_divergence(ord, q, p), renyi_divergence(ord, q2, p2)),
                   alpha, "D(q||p)");
  }
  const double inf = std::numeric_limits<double>::infinity();
  tracker.record(ext_margin(max_relative_entropy(p, q), max_relative_entropy(p2, q2)),
                 inf, "D(p||q)");
  tracker.record(ext_margin(max_relative_entropy(q, p), max_relative_entropy(q2, p2)),
                 inf, "D(q||p)");
  return settle(tracker, /*strict=*/false);
}

bool verify_trumping_witness(const ProbVec& p, const ProbVec& q, const ProbVec& p2,
                             const ProbVec& q2, const ProbVec& r, const ProbVec& t) {
  if (r.size() != t.size()) throw DimensionMismatch("catalyst pair: |r| != |t|");
  if (!t.is_strictly_positive()) {
    throw PreconditionViolated("catalyst weight t must have full support");
  }
  return relatively_majorises(tensor(p, r), tensor(q, t), tensor(p2, r),
                              tensor(q2, t));
}

std::optional<std::pair<ProbVec, ProbVec>> brute_force_catalyst(
    const ProbVec& p, const ProbVec& q, const ProbVec& p2, const ProbVec& q2,
    std::size_t max_dim, unsigned long denominator_bound) {
  const bool plain = q == uniform(q.size()) && q2 == uniform(q2.size());
  std::optional<std::pair<ProbVec, ProbVec>> found;
  for (std::size_t dim = 1; dim <= max_dim && !found; ++dim) {
    for_each_candidate(dim, denominator_bound, [&](const ProbVec& r) {
      if (plain) {
        const ProbVec t = uniform(r.size());
        if (verify_trumping_witness(p, q, p2, q2, r, t)) found = {r, t};
        return found.has_value();
      }
      for_each_candidate(dim, denominator_bound, [&](const ProbVec& t) {
        if (verify_trumping_witness(p, q, p2, q2, r, t)) found = {r, t};
        return found.has_value();
      });
      return found.has_value();
    });
  }
  return found;
}

}  // namespace majorlab
