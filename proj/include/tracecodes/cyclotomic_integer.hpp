#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tracecodes/arith.hpp"

namespace tracecodes {

/// Exact element of Z[zeta_p] in the power basis 1, zeta, ..., zeta^(p-2).
///
/// zeta^(p-1) is eliminated through 1 + zeta + ... + zeta^(p-1) = 0, which
/// makes the representation unique: equality is coefficient-wise, and the
/// element is a rational integer c exactly when coeffs = (c, 0, ..., 0).
/// For p = 2 the ring is Z and there is one coefficient.
///
/// Coefficients are 64-bit; every operation is overflow-checked and throws
/// std::overflow_error instead of wrapping.
class CyclotomicInteger {
 public:
  CyclotomicInteger() = default;
  explicit CyclotomicInteger(std::uint32_t p);

  static CyclotomicInteger from_integer(std::uint32_t p, i64 c);
  static CyclotomicInteger zeta_power(std::uint32_t p, u64 k);
  /// Power-basis coordinates (length p-1; length 1 for p = 2).
  static CyclotomicInteger from_coeffs(std::uint32_t p, std::vector<i64> coeffs);
  /// sum_t tally[t] zeta^t for a length-p tally (t = 0..p-1).
  static CyclotomicInteger from_tally(std::uint32_t p, std::span<const i64> tally);

  [[nodiscard]] std::uint32_t characteristic() const { return p_; }
  [[nodiscard]] const std::vector<i64>& coeffs() const { return coeffs_; }

  [[nodiscard]] std::optional<i64> as_integer() const;
  [[nodiscard]] bool is_integer() const { return as_integer().has_value(); }
  [[nodiscard]] bool is_zero() const;

  /// Value under zeta -> exp(2 pi i / p), in double precision.
  [[nodiscard]] std::complex<double> embed() const;

  /// Length-p tally with tally[p-1] = 0 representing this element.
  [[nodiscard]] std::vector<i64> to_tally() const;

  CyclotomicInteger& operator+=(const CyclotomicInteger& o);
  CyclotomicInteger& operator-=(const CyclotomicInteger& o);
  CyclotomicInteger& operator*=(i64 k);
  /// Exact division by a rational integer; throws IntegralityError when some
  /// coordinate is not divisible (the power basis is a Z-basis of Z[zeta]).
  [[nodiscard]] CyclotomicInteger divided_exactly(i64 k) const;

  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
  friend CyclotomicInteger operator*(CyclotomicInteger a, i64 k) { return a *= k; }
  friend CyclotomicInteger operator*(i64 k, CyclotomicInteger a) { return a *= k; }
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);
  CyclotomicInteger operator-() const;
  CyclotomicInteger operator+(i64 c) const;
  CyclotomicInteger operator-(i64 c) const { return *this + (-c); }

  bool operator==(const CyclotomicInteger& o) const = default;

  /// "3", "-1-2z^2" style (z = zeta_p); "0" for zero.
  [[nodiscard]] std::string to_string() const;

 private:
  void require_compatible(const CyclotomicInteger& o) const;

  std::uint32_t p_ = 2;
  std::vector<i64> coeffs_ = std::vector<i64>(1, 0);
};

std::complex<double> embed_complex(const CyclotomicInteger& x);

}  // namespace tracecodes
