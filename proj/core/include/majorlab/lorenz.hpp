#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "majorlab/prob_vec.hpp"

namespace majorlab {

/// Lower Lorenz curve of a pair (p, q): the piecewise-linear boundary of the
/// pair's testing region. Vertices run from (0,0) to (1,1); the x-coordinate
/// accumulates p, the y-coordinate accumulates q, in order of non-increasing
/// likelihood ratio p_i/q_i (q_i = 0 with p_i > 0 counts as ratio +infinity
/// and comes first; indices with p_i = q_i = 0 are dropped; ties keep original
/// index order). The polyline is convex; a horizontal initial stretch appears
/// when q vanishes on part of supp(p), a terminal vertical stretch when p
/// vanishes where q does not.
class LorenzCurve {
 public:
  using Vertex = std::pair<Rational, Rational>;

  explicit LorenzCurve(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }

  /// Vertices with collinear interior points merged (canonical form; curve
  /// equality as sets of points is equality of normalised vertex lists).
  LorenzCurve normalised() const;

  /// The curve's lower value at abscissa a in [0,1]: min { b : (a,b) on curve }.
  /// Exact. Throws DomainViolation outside [0,1].
  Rational lower_value(const Rational& a) const;

  /// True iff this curve lies nowhere above `other` (pointwise lower_value
  /// comparison at the union of breakpoints — exact).
  bool nowhere_above(const LorenzCurve& other) const;

  friend bool operator==(const LorenzCurve& a, const LorenzCurve& b) {
    return a.normalised().vertices_ == b.normalised().vertices_;
  }

 private:
  std::vector<Vertex> vertices_;
};

/// Builds the lower Lorenz curve of (p, q). Throws DimensionMismatch when
/// |p| != |q|.
LorenzCurve lorenz_curve(const ProbVec& p, const ProbVec& q);

/// Blackwell order test: (p,q) relatively majorises (p2,q2) iff the Lorenz
/// curve of (p,q) lies nowhere above that of (p2,q2). Exact decision.
bool relatively_majorises(const ProbVec& p, const ProbVec& q, const ProbVec& p2,
                          const ProbVec& q2);

}  // namespace majorlab
