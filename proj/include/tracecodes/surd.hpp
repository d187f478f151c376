#pragma once

#include <complex>
#include <optional>
#include <string>

#include "tracecodes/arith.hpp"

namespace tracecodes {

/// Exact number (u + v sqrt(D)) / w with D squarefree (possibly negative).
///
/// Always normalized: w > 0, gcd(u, v, w) = 1, and v = 0 exactly when
/// D = 1. sqrt(D) is the principal root, i sqrt(|D|) for D < 0.
class SurdValue {
 public:
  SurdValue() = default;
  SurdValue(i64 u, i64 v, i64 w, i64 D);

  static SurdValue integer(i64 c) { return {c, 0, 1, 1}; }
  static SurdValue rational(i64 num, i64 den) { return {num, 0, den, 1}; }

  [[nodiscard]] i64 u() const { return u_; }
  [[nodiscard]] i64 v() const { return v_; }
  [[nodiscard]] i64 w() const { return w_; }
  [[nodiscard]] i64 D() const { return D_; }

  [[nodiscard]] bool is_rational() const { return v_ == 0; }
  [[nodiscard]] std::optional<i64> as_integer() const;

  [[nodiscard]] std::complex<double> embed() const;

  /// Sum and difference are defined when both share D or one is rational.
  friend SurdValue operator+(const SurdValue& a, const SurdValue& b);
  friend SurdValue operator-(const SurdValue& a, const SurdValue& b);
  friend SurdValue operator*(const SurdValue& a, i64 k);
  SurdValue operator-() const { return {-u_, -v_, w_, D_}; }
  [[nodiscard]] SurdValue divided_by(i64 k) const;

  bool operator==(const SurdValue&) const = default;

  /// Exact test of value <= num/den (den > 0); real surds only.
  [[nodiscard]] bool at_most(i64 num, i64 den) const;

  /// "(-1-3*sqrt(-3))/2" style; integers print bare.
  [[nodiscard]] std::string to_string() const;

 private:
  i64 u_ = 0, v_ = 0, w_ = 1, D_ = 1;
};

}  // namespace tracecodes
