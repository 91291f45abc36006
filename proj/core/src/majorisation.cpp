#include "majorlab/majorisation.hpp"

#include <algorithm>
#include <numeric>

#include "majorlab/errors.hpp"
#include "majorlab/simplex.hpp"

namespace majorlab {

namespace {

// Descending stable sort; returns the permutation ord with v[ord[0]] >= ...
std::vector<std::size_t> descending_order(const std::vector<Rational>& v) {
  std::vector<std::size_t> ord(v.size());
  std::iota(ord.begin(), ord.end(), 0);
  std::stable_sort(ord.begin(), ord.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  return ord;
}

std::vector<Rational> sorted_desc_padded(const ProbVec& p, std::size_t len) {
  std::vector<Rational> v = p.entries();
  v.resize(std::max(len, v.size()), Rational(0));
  std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return v;
}

// Square doubly stochastic witness mapping `source` (already padded to |target|)
// onto `target`, as a composition of sorting permutations and Robin Hood
// T-transforms. Requires source to majorise target.
std::vector<std::vector<Rational>> square_mixing_matrix(
    const std::vector<Rational>& source, const std::vector<Rational>& target) {
  const std::size_t m = source.size();
  const std::vector<std::size_t> src_ord = descending_order(source);
  const std::vector<std::size_t> tgt_ord = descending_order(target);

  std::vector<Rational> a(m), b(m);
  for (std::size_t t = 0; t < m; ++t) {
    a[t] = source[src_ord[t]];
    b[t] = target[tgt_ord[t]];
  }

  // w starts as the permutation sending source onto its sorted order:
  // (source . w)_t = source[src_ord[t]].
  std::vector<std::vector<Rational>> w(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t t = 0; t < m; ++t) w[src_ord[t]][t] = 1;

  // Robin Hood loop: j = largest index still above target, l = first index
  // after j below target. Each transform pins at least one coordinate, the
  // vector stays sorted and keeps majorising b, so at most m-1 rounds run.
  for (;;) {
    std::size_t j = m;
    for (std::size_t t = m; t-- > 0;) {
      if (a[t] > b[t]) {
        j = t;
        break;
      }
    }
    if (j == m) break;  // a == b
    std::size_t l = m;
    for (std::size_t t = j + 1; t < m; ++t) {
      if (a[t] < b[t]) {
        l = t;
        break;
      }
    }
    if (l == m) throw NotMajorised("internal: transfer target missing");

    const Rational give = a[j] - b[j];
    const Rational take = b[l] - a[l];
    const Rational delta = std::min(give, take);
    const Rational lambda = delta / Rational(a[j] - a[l]);
    // Right-multiply w by the T-transform acting on coordinates (j, l).
    for (std::size_t r = 0; r < m; ++r) {
      const Rational cj = w[r][j], cl = w[r][l];
      w[r][j] = (1 - lambda) * cj + lambda * cl;
      w[r][l] = lambda * cj + (1 - lambda) * cl;
    }
    a[j] -= delta;
    a[l] += delta;
  }

  // Unsort the output side: column t of w currently feeds sorted slot t, which
  // belongs to target coordinate tgt_ord[t].
  std::vector<std::vector<Rational>> out(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t t = 0; t < m; ++t) out[r][tgt_ord[t]] = w[r][t];
  }
  return out;
}

}  // namespace

bool majorises(const ProbVec& p, const ProbVec& q) {
  const std::size_t len = std::max(p.size(), q.size());
  const std::vector<Rational> a = sorted_desc_padded(p, len);
  const std::vector<Rational> b = sorted_desc_padded(q, len);
  Rational pa(0), pb(0);
  for (std::size_t t = 0; t + 1 < len; ++t) {  // final prefix is 1 == 1
    pa += a[t];
    pb += b[t];
    if (pa < pb) return false;
  }
  return true;
}

Channel mixing_witness(const ProbVec& p, const ProbVec& q) {
  if (!majorises(p, q)) throw NotMajorised("mixing_witness: p does not majorise q");
  const ProbVec ps = p.restrict_to_support();
  const std::size_t k = ps.size();
  const std::size_t m = q.size();
  // p majorises q forces |supp(p)| <= |q|.
  if (k > m) throw NotMajorised("internal: support larger than target alphabet");

  if (k < m) {
    // Prefer a genuine uniform-to-uniform witness when one exists:
    // {W >= 0, rows sum to 1, ps.W = q, u^(k).W = u^(m)} as exact feasibility.
    const std::size_t nvars = k * m;
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < k; ++i) {  // row sums
      std::vector<Rational> row(nvars, Rational(0));
      for (std::size_t j = 0; j < m; ++j) row[i * m + j] = 1;
      a.push_back(std::move(row));
      b.push_back(Rational(1));
    }
    for (std::size_t j = 0; j < m; ++j) {  // ps . W = q
      std::vector<Rational> row(nvars, Rational(0));
      for (std::size_t i = 0; i < k; ++i) row[i * m + j] = ps[i];
      a.push_back(std::move(row));
      b.push_back(q[j]);
    }
    const Rational colsum(static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    for (std::size_t j = 0; j < m; ++j) {  // u^(k) . W = u^(m)
      std::vector<Rational> row(nvars, Rational(0));
      for (std::size_t i = 0; i < k; ++i) row[i * m + j] = 1;
      a.push_back(std::move(row));
      b.push_back(colsum);
    }
    if (auto x = solve_equality_feasibility(a, b)) {
      std::vector<std::vector<Rational>> rows(k, std::vector<Rational>(m));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < m; ++j) rows[i][j] = (*x)[i * m + j];
      }
      return Channel(std::move(rows));
    }
  }

  // Pad the support of p with zeros to |q| and mix with T-transforms; the
  // padding rows multiply zero mass, so the first k rows alone reproduce q.
  std::vector<Rational> padded = ps.entries();
  padded.resize(m, Rational(0));
  std::vector<std::vector<Rational>> sq = square_mixing_matrix(padded, q.entries());
  sq.resize(k);
  return Channel(std::move(sq));
}

std::vector<BirkhoffTerm> birkhoff_decompose(const Channel& w) {
  const std::size_t n = w.input_size();
  if (w.output_size() != n || !is_bistochastic(w)) {
    throw NotBistochastic("birkhoff_decompose needs a square bistochastic channel");
  }

  std::vector<std::vector<Rational>> residual = w.rows();
  std::vector<BirkhoffTerm> terms;
  Rational remaining(1);

  while (sgn(remaining) > 0) {
    // Kuhn's augmenting paths over the positive entries of the residual; a
    // perfect matching exists as long as the residual has equal row/column
    // sums (Hall's condition).
    std::vector<std::size_t> col_of_row(n, n), row_of_col(n, n);
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<bool> visited(n, false);
      auto augment = [&](auto&& self, std::size_t i) -> bool {
        for (std::size_t j = 0; j < n; ++j) {
          if (visited[j] || sgn(residual[i][j]) <= 0) continue;
          visited[j] = true;
          if (row_of_col[j] == n || self(self, row_of_col[j])) {
            col_of_row[i] = j;
            row_of_col[j] = i;
            return true;
          }
        }
        return false;
      };
      if (!augment(augment, start)) {
        throw NotBistochastic("internal: residual lost its perfect matching");
      }
    }

    Rational weight = residual[0][col_of_row[0]];
    for (std::size_t i = 1; i < n; ++i) {
      weight = std::min(weight, residual[i][col_of_row[i]]);
    }
    for (std::size_t i = 0; i < n; ++i) residual[i][col_of_row[i]] -= weight;
    terms.push_back(BirkhoffTerm{weight, col_of_row});
    remaining -= weight;
  }

  // Caratheodory reduction: permutation matrices live in an affine space of
  // dimension (n-1)^2, so any surplus terms admit an exact affine dependency
  // that can be pivoted away without changing the convex combination.
  const std::size_t bound = (n - 1) * (n - 1) + 1;
  while (terms.size() > bound) {
    const std::size_t tcount = terms.size();
    // Rows: n^2 vectorised entries plus the affine row of ones.
    std::vector<std::vector<Rational>> mat(n * n + 1,
                                           std::vector<Rational>(tcount, Rational(0)));
    for (std::size_t t = 0; t < tcount; ++t) {
      for (std::size_t i = 0; i < n; ++i) mat[i * n + terms[t].perm[i]][t] = 1;
      mat[n * n][t] = 1;
    }
    // Gaussian elimination to find a nullspace vector c != 0 with mat.c = 0.
    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> is_pivot(tcount, false);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < tcount && rank < mat.size(); ++col) {
      std::size_t sel = mat.size();
      for (std::size_t r = rank; r < mat.size(); ++r) {
        if (sgn(mat[r][col]) != 0) {
          sel = r;
          break;
        }
      }
      if (sel == mat.size()) continue;
      std::swap(mat[rank], mat[sel]);
      const Rational piv = mat[rank][col];
      for (std::size_t j = col; j < tcount; ++j) mat[rank][j] /= piv;
      for (std::size_t r = 0; r < mat.size(); ++r) {
        if (r == rank || sgn(mat[r][col]) == 0) continue;
        const Rational f = mat[r][col];
        for (std::size_t j = col; j < tcount; ++j) mat[r][j] -= f * mat[rank][j];
      }
      pivot_col_of_row.push_back(col);
      is_pivot[col] = true;
      ++rank;
    }
    std::size_t free_col = tcount;
    for (std::size_t col = 0; col < tcount; ++col) {
      if (!is_pivot[col]) {
        free_col = col;
        break;
      }
    }
    if (free_col == tcount) break;  // full column rank: no dependency to remove
    std::vector<Rational> c(tcount, Rational(0));
    c[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
      c[pivot_col_of_row[r]] = -mat[r][free_col];
    }
    bool has_positive = false;
    for (const Rational& v : c) has_positive = has_positive || sgn(v) > 0;
    if (!has_positive) {
      for (Rational& v : c) v = -v;
    }
    std::size_t tstar = tcount;
    Rational theta;
    for (std::size_t t = 0; t < tcount; ++t) {
      if (sgn(c[t]) <= 0) continue;
      const Rational ratio = terms[t].weight / c[t];
      if (tstar == tcount || ratio < theta) {
        tstar = t;
        theta = ratio;
      }
    }
    std::vector<BirkhoffTerm> next;
    for (std::size_t t = 0; t < tcount; ++t) {
      const Rational nw = terms[t].weight - theta * c[t];
      if (sgn(nw) > 0) next.push_back(BirkhoffTerm{nw, terms[t].perm});
    }
    terms = std::move(next);
  }

  return terms;
}

Channel birkhoff_recompose(const std::vector<BirkhoffTerm>& terms, std::size_t n) {
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
  for (const BirkhoffTerm& term : terms) {
    for (std::size_t i = 0; i < n; ++i) rows[i][term.perm[i]] += term.weight;
  }
  return Channel(std::move(rows));
}

}  // namespace majorlab
