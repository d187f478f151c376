#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tracecodes {

/// Polynomial over the prime field GF(p); coefficients constant term first.
/// The zero polynomial has an empty coefficient vector.
struct Poly {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> coeffs;

  Poly() = default;
  Poly(std::uint32_t characteristic, std::vector<std::uint32_t> c);

  static Poly monomial(std::uint32_t characteristic, unsigned degree, std::uint32_t coeff = 1);

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs.empty(); }
  [[nodiscard]] std::uint32_t lead() const { return coeffs.empty() ? 0 : coeffs.back(); }
  [[nodiscard]] std::uint32_t at(unsigned i) const { return i < coeffs.size() ? coeffs[i] : 0; }
  [[nodiscard]] std::uint32_t eval(std::uint32_t x) const;

  void trim();
  bool operator==(const Poly&) const = default;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

/// Quotient and remainder; `b` must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

Poly make_monic(const Poly& a);
Poly poly_gcd(Poly a, Poly b);

/// base^exp mod modulus.
Poly powmod(const Poly& base, std::uint64_t exp, const Poly& modulus);

/// Rabin irreducibility test over GF(p).
bool is_irreducible(const Poly& f);

/// "x^3+2x+1" style, highest degree first.
std::string to_string(const Poly& f, const std::string& var = "x");

}  // namespace tracecodes
