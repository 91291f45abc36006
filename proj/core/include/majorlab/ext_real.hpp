#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "majorlab/errors.hpp"

namespace majorlab {

/// Non-negative extended real: a finite double >= 0, or exactly +infinity.
/// NaN and negative values are unrepresentable by construction.
class ExtReal {
 public:
  ExtReal() : value_(0.0), infinite_(false) {}

  static ExtReal infinity() {
    ExtReal r;
    r.infinite_ = true;
    r.value_ = std::numeric_limits<double>::infinity();
    return r;
  }

  /// Wraps a finite non-negative double. Throws InvalidValue for NaN or
  /// negatives; a double +inf is accepted and mapped to the exact infinity.
  static ExtReal finite(double v) {
    if (std::isnan(v)) throw InvalidValue("ExtReal: NaN");
    if (v < 0.0) throw InvalidValue("ExtReal: negative value " + std::to_string(v));
    if (std::isinf(v)) return infinity();
    ExtReal r;
    r.value_ = v;
    return r;
  }

  /// As finite(), but values in [-slack, 0) from floating-point noise are
  /// clamped to zero. Used where the mathematics guarantees non-negativity.
  static ExtReal finite_clamped(double v, double slack = 1e-9) {
    if (!std::isnan(v) && v < 0.0 && v >= -slack) v = 0.0;
    return finite(v);
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// The numeric value; +inf when infinite.
  double value() const { return value_; }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return a == b || a < b; }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return b <= a; }

  friend ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return finite(a.value_ + b.value_);
  }

 private:
  double value_;
  bool infinite_;
};

}  // namespace majorlab
