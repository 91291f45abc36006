#include "majorlab/simplex.hpp"

#include <cstddef>

#include "majorlab/errors.hpp"

namespace majorlab {

namespace {

// Tableau layout: columns [0, n) are the structural variables, [n, n+m) the
// artificials, column n+m the right-hand side. Row m is the phase-1 objective
// (reduced costs of minimising the artificial sum, stored negated so the
// entering rule looks for a positive coefficient).
struct Tableau {
  std::vector<std::vector<Rational>> t;
  std::vector<std::size_t> basis;  // basis[r] = column basic in row r
  std::size_t rows, cols;

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational piv = t[pr][pc];
    for (std::size_t j = 0; j < cols; ++j) t[pr][j] /= piv;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == pr || sgn(t[r][pc]) == 0) continue;
      const Rational factor = t[r][pc];
      for (std::size_t j = 0; j < cols; ++j) t[r][j] -= factor * t[pr][j];
    }
    basis[pr] = pc;
  }
};

}  // namespace

std::optional<std::vector<Rational>> solve_equality_feasibility(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (m == 0) return std::vector<Rational>{};
  const std::size_t n = a.front().size();
  if (b.size() != m) throw DimensionMismatch("feasibility: |b| != rows of A");

  Tableau tab;
  tab.rows = m;
  tab.cols = n + m + 1;
  tab.t.assign(m + 1, std::vector<Rational>(tab.cols, Rational(0)));
  tab.basis.assign(m, 0);

  for (std::size_t r = 0; r < m; ++r) {
    if (a[r].size() != n) throw DimensionMismatch("feasibility: ragged A");
    const bool flip = sgn(b[r]) < 0;  // keep rhs >= 0 so artificials start feasible
    for (std::size_t j = 0; j < n; ++j) tab.t[r][j] = flip ? -a[r][j] : a[r][j];
    tab.t[r][n + r] = 1;
    tab.t[r][n + m] = flip ? -b[r] : b[r];
    tab.basis[r] = n + r;
  }
  // Objective row: minimise the sum of artificials. With artificials basic,
  // the reduced-cost row is the column-wise sum of the constraint rows.
  for (std::size_t j = 0; j < tab.cols; ++j) {
    if (j >= n && j < n + m) continue;
    Rational s(0);
    for (std::size_t r = 0; r < m; ++r) s += tab.t[r][j];
    tab.t[m][j] = s;
  }

  for (;;) {
    // Bland: entering column = smallest structural index with positive reduced
    // cost. Artificial columns never re-enter once they leave the basis.
    std::size_t pc = tab.cols;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(tab.t[m][j]) > 0) {
        pc = j;
        break;
      }
    }
    if (pc == tab.cols) break;  // optimal

    // Ratio test; ties broken by smallest basis column (Bland).
    std::size_t pr = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (sgn(tab.t[r][pc]) <= 0) continue;
      Rational ratio = tab.t[r][n + m] / tab.t[r][pc];
      if (pr == m || ratio < best ||
          (ratio == best && tab.basis[r] < tab.basis[pr])) {
        pr = r;
        best = ratio;
      }
    }
    if (pr == m) return std::nullopt;  // unbounded phase-1: cannot happen, but guard
    tab.pivot(pr, pc);
  }

  if (sgn(tab.t[m][n + m]) != 0) return std::nullopt;  // positive artificial mass

  std::vector<Rational> x(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis[r] < n) x[tab.basis[r]] = tab.t[r][n + m];
    // Artificials still basic here sit at value 0 (objective reached 0), which
    // marks a redundant row; the structural solution is unaffected.
  }
  return x;
}

}  // namespace majorlab
