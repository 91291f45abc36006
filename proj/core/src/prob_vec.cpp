#include "majorlab/prob_vec.hpp"

#include "majorlab/errors.hpp"

namespace majorlab {

ProbVec::ProbVec(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionMismatch("distribution must be non-empty");
  Rational total(0);
  for (const Rational& e : entries_) {
    if (sgn(e) < 0) throw NegativeEntry("distribution entry " + to_string(e));
    total += e;
  }
  if (total != 1) {
    throw NotNormalised("distribution sums to " + to_string(total) + ", not 1");
  }
}

std::size_t ProbVec::support_size() const {
  std::size_t k = 0;
  for (const Rational& e : entries_) {
    if (sgn(e) > 0) ++k;
  }
  return k;
}

std::vector<std::size_t> ProbVec::support() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (sgn(entries_[i]) > 0) idx.push_back(i);
  }
  return idx;
}

ProbVec ProbVec::restrict_to_support() const {
  std::vector<Rational> out;
  for (const Rational& e : entries_) {
    if (sgn(e) > 0) out.push_back(e);
  }
  return ProbVec(std::move(out));
}

ProbVec make_prob_vec(const std::vector<std::string>& literals) {
  std::vector<Rational> entries;
  entries.reserve(literals.size());
  for (const std::string& s : literals) entries.push_back(parse_rational(s));
  return ProbVec(std::move(entries));
}

ProbVec uniform(std::size_t n) {
  if (n == 0) throw DimensionMismatch("uniform(0)");
  return ProbVec(std::vector<Rational>(n, Rational(1, static_cast<unsigned long>(n))));
}

ProbVec point_mass(std::size_t x, std::size_t n) {
  if (n == 0) throw DimensionMismatch("point_mass on empty alphabet");
  if (x >= n) throw IndexOutOfRange("point_mass index out of range");
  std::vector<Rational> entries(n, Rational(0));
  entries[x] = 1;
  return ProbVec(std::move(entries));
}

ProbVec tensor(const ProbVec& p, const ProbVec& q) {
  std::vector<Rational> out;
  out.reserve(p.size() * q.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      out.push_back(p[i] * q[j]);
    }
  }
  return ProbVec(std::move(out));
}

ProbVec direct_sum_scaled(
    const std::vector<std::pair<Rational, ProbVec>>& weighted_blocks) {
  if (weighted_blocks.empty()) throw DimensionMismatch("direct_sum_scaled of nothing");
  Rational total(0);
  for (const auto& [w, block] : weighted_blocks) {
    if (sgn(w) < 0) throw NegativeEntry("block weight " + to_string(w));
    total += w;
  }
  if (total != 1) {
    throw NotNormalised("block weights sum to " + to_string(total) + ", not 1");
  }
  std::vector<Rational> out;
  for (const auto& [w, block] : weighted_blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) out.push_back(w * block[i]);
  }
  return ProbVec(std::move(out));
}

Channel::Channel(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) {
    throw DimensionMismatch("channel must be non-empty");
  }
  const std::size_t m = rows_.front().size();
  for (const auto& row : rows_) {
    if (row.size() != m) throw DimensionMismatch("ragged channel rows");
    Rational total(0);
    for (const Rational& e : row) {
      if (sgn(e) < 0) throw NegativeEntry("channel entry " + to_string(e));
      total += e;
    }
    if (total != 1) {
      throw NotNormalised("channel row sums to " + to_string(total) + ", not 1");
    }
  }
}

Channel identity_channel(std::size_t n) {
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return Channel(std::move(rows));
}

ProbVec apply_channel(const ProbVec& p, const Channel& w) {
  if (p.size() != w.input_size()) {
    throw DimensionMismatch("apply_channel: |p| != channel input size");
  }
  std::vector<Rational> out(w.output_size(), Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] += p[i] * w.at(i, j);
    }
  }
  return ProbVec(std::move(out));
}

bool is_bistochastic(const Channel& w) {
  const std::size_t n = w.input_size();
  const std::size_t m = w.output_size();
  Rational expected(static_cast<unsigned long>(n), static_cast<unsigned long>(m));
  expected.canonicalize();
  for (std::size_t j = 0; j < m; ++j) {
    Rational col(0);
    for (std::size_t i = 0; i < n; ++i) col += w.at(i, j);
    if (col != expected) return false;
  }
  return true;
}

Channel tensor(const Channel& v, const Channel& w) {
  const std::size_t n1 = v.input_size(), m1 = v.output_size();
  const std::size_t n2 = w.input_size(), m2 = w.output_size();
  std::vector<std::vector<Rational>> rows(n1 * n2,
                                          std::vector<Rational>(m1 * m2, Rational(0)));
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t k = 0; k < n2; ++k) {
      for (std::size_t j = 0; j < m1; ++j) {
        for (std::size_t l = 0; l < m2; ++l) {
          rows[i * n2 + k][j * m2 + l] = v.at(i, j) * w.at(k, l);
        }
      }
    }
  }
  return Channel(std::move(rows));
}

}  // namespace majorlab
