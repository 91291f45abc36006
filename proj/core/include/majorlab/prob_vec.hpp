#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "majorlab/rational.hpp"

namespace majorlab {

/// Finite probability distribution with exact rational entries.
/// Invariants (enforced on construction): non-empty, every entry >= 0,
/// entries sum to exactly 1.
class ProbVec {
 public:
  /// Validates and takes ownership. Throws NegativeEntry / NotNormalised /
  /// DimensionMismatch (empty).
  explicit ProbVec(std::vector<Rational> entries);
  ProbVec(std::initializer_list<Rational> entries)
      : ProbVec(std::vector<Rational>(entries)) {}

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }

  /// Number of strictly positive entries.
  std::size_t support_size() const;
  /// Indices of strictly positive entries, ascending.
  std::vector<std::size_t> support() const;
  bool is_strictly_positive() const { return support_size() == size(); }

  /// The positive entries in original order (alphabet restriction).
  ProbVec restrict_to_support() const;

  friend bool operator==(const ProbVec& a, const ProbVec& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const ProbVec& a, const ProbVec& b) { return !(a == b); }

 private:
  std::vector<Rational> entries_;
};

/// Builds a ProbVec from rational literals, e.g. {"1/3","1/4","1/4","1/6"}.
ProbVec make_prob_vec(const std::vector<std::string>& literals);

/// Uniform distribution on an n-letter alphabet.
ProbVec uniform(std::size_t n);

/// Deterministic distribution e_x on an n-letter alphabet (0-based x).
ProbVec point_mass(std::size_t x, std::size_t n);

/// Tensor product; index (i,j) of the result is i*|q| + j.
ProbVec tensor(const ProbVec& p, const ProbVec& q);

/// Weighted concatenation sum_x w_x * block_x. Weights must be >= 0 and sum to
/// exactly 1 (NotNormalised otherwise).
ProbVec direct_sum_scaled(
    const std::vector<std::pair<Rational, ProbVec>>& weighted_blocks);

/// Row-stochastic rational matrix (a classical channel). Invariants: rectangular,
/// non-empty, entries >= 0, every row sums to exactly 1.
class Channel {
 public:
  explicit Channel(std::vector<std::vector<Rational>> rows);

  std::size_t input_size() const { return rows_.size(); }
  std::size_t output_size() const { return rows_.front().size(); }
  const std::vector<Rational>& row(std::size_t i) const { return rows_[i]; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  friend bool operator==(const Channel& a, const Channel& b) {
    return a.rows_ == b.rows_;
  }

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// Identity channel on n letters.
Channel identity_channel(std::size_t n);

/// Exact pushforward p * W. Throws DimensionMismatch if |p| != input_size.
ProbVec apply_channel(const ProbVec& p, const Channel& w);

/// True iff W maps the uniform input to the uniform output exactly, i.e. every
/// column of the n-by-m matrix sums to n/m. (Square case: doubly stochastic.)
bool is_bistochastic(const Channel& w);

/// Tensor product of channels: (V (x) W)((i,k),(j,l)) = V(i,j) * W(k,l).
Channel tensor(const Channel& v, const Channel& w);

}  // namespace majorlab
