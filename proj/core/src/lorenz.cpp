#include "majorlab/lorenz.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "majorlab/errors.hpp"

namespace majorlab {

namespace {

// Orders index a before index b when ratio p_a/q_a > p_b/q_b, treating
// q = 0 (with p > 0) as +infinity. Exact via cross-multiplication.
bool ratio_greater(const Rational& pa, const Rational& qa, const Rational& pb,
                   const Rational& qb) {
  const bool inf_a = sgn(qa) == 0;
  const bool inf_b = sgn(qb) == 0;
  if (inf_a || inf_b) return inf_a && !inf_b;
  return pa * qb > pb * qa;
}

// Cross product of (v1 - v0) and (v2 - v0); zero iff collinear.
int orientation(const LorenzCurve::Vertex& v0, const LorenzCurve::Vertex& v1,
                const LorenzCurve::Vertex& v2) {
  const Rational lhs = (v1.first - v0.first) * (v2.second - v0.second);
  const Rational rhs = (v2.first - v0.first) * (v1.second - v0.second);
  return cmp(lhs, rhs);
}

}  // namespace

LorenzCurve::LorenzCurve(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2 || vertices_.front() != Vertex{Rational(0), Rational(0)} ||
      vertices_.back() != Vertex{Rational(1), Rational(1)}) {
    throw DomainViolation("Lorenz curve must run from (0,0) to (1,1)");
  }
}

LorenzCurve LorenzCurve::normalised() const {
  std::vector<Vertex> out;
  out.push_back(vertices_.front());
  for (std::size_t i = 1; i + 1 < vertices_.size(); ++i) {
    if (vertices_[i] == out.back()) continue;  // duplicate point
    out.push_back(vertices_[i]);
    // Drop the middle vertex of any collinear triple as we go.
    while (out.size() >= 3 &&
           orientation(out[out.size() - 3], out[out.size() - 2], out.back()) == 0) {
      out.erase(out.end() - 2);
    }
  }
  out.push_back(vertices_.back());
  while (out.size() >= 3 &&
         orientation(out[out.size() - 3], out[out.size() - 2], out.back()) == 0) {
    out.erase(out.end() - 2);
  }
  return LorenzCurve(std::move(out));
}

Rational LorenzCurve::lower_value(const Rational& a) const {
  if (sgn(a) < 0 || a > 1) throw DomainViolation("Lorenz abscissa outside [0,1]");
  // First vertex with x-coordinate >= a; at a breakpoint shared by several
  // vertices (vertical stretch) the earliest one carries the minimum b.
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].first == a) return vertices_[i].second;
    if (vertices_[i].first > a) {
      // a lies strictly inside segment (i-1, i); i >= 1 since x starts at 0.
      const auto& [x0, y0] = vertices_[i - 1];
      const auto& [x1, y1] = vertices_[i];
      return y0 + (a - x0) * (y1 - y0) / Rational(x1 - x0);
    }
  }
  return vertices_.back().second;  // a == 1 handled above; defensive
}

bool LorenzCurve::nowhere_above(const LorenzCurve& other) const {
  // Both curves are piecewise linear, so comparing lower values at the union
  // of vertex abscissas decides the pointwise order exactly. Interior vertical
  // stretches cannot occur (zero-ratio indices all accumulate at a = 1), hence
  // between consecutive breakpoints both curves are affine.
  std::set<Rational> breaks;
  for (const Vertex& v : vertices_) breaks.insert(v.first);
  for (const Vertex& v : other.vertices_) breaks.insert(v.first);
  for (const Rational& a : breaks) {
    if (lower_value(a) > other.lower_value(a)) return false;
  }
  return true;
}

LorenzCurve lorenz_curve(const ProbVec& p, const ProbVec& q) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("lorenz_curve: |p| != |q|");
  }
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) != 0 || sgn(q[i]) != 0) idx.push_back(i);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ratio_greater(p[a], q[a], p[b], q[b]);
  });

  std::vector<LorenzCurve::Vertex> vertices;
  vertices.reserve(idx.size() + 1);
  Rational ca(0), cb(0);
  vertices.emplace_back(ca, cb);
  for (std::size_t i : idx) {
    ca += p[i];
    cb += q[i];
    vertices.emplace_back(ca, cb);
  }
  return LorenzCurve(std::move(vertices));
}

bool relatively_majorises(const ProbVec& p, const ProbVec& q, const ProbVec& p2,
                          const ProbVec& q2) {
  return lorenz_curve(p, q).nowhere_above(lorenz_curve(p2, q2));
}

}  // namespace majorlab
