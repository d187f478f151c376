#pragma once

// Deterministic finite fields GF(p^n).
//
// An element is its coefficient vector over GF(p) in the polynomial basis
// 1, x, ..., x^(n-1) of GF(p)[x]/(modulus), packed into one integer as
// sum c_i p^i. The packing is a bijection with the vector, so zero and the
// prime subfield (codes 0..p-1) are represented uniformly.
//
// The modulus is the lexicographically smallest monic irreducible polynomial
// of degree n (coefficients compared constant term first), and the primitive
// element alpha is the lexicographically smallest generator of GF(p^n)^*
// under the same ordering. Two builds with equal (p, n) are identical.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tracecodes/arith.hpp"
#include "tracecodes/poly.hpp"

namespace tracecodes {

struct FieldElement {
  std::uint32_t code = 0;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

class Field;

/// Polynomial whose coefficients are field elements (constant term first).
/// Used for minimal and parity-check polynomials over a subfield GF(p^s).
struct FieldPoly {
  unsigned subfield_degree = 1;
  std::vector<FieldElement> coeffs;

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const FieldPoly&) const = default;
};

class Field {
 public:
  static constexpr u64 kMaxSize = u64{1} << 31;
  static constexpr u64 kTableCap = u64{1} << 22;

  /// Prefer build_field(); this constructor performs the full deterministic search.
  Field(std::uint32_t p, unsigned degree, u64 table_cap = kTableCap);

  [[nodiscard]] std::uint32_t characteristic() const { return p_; }
  [[nodiscard]] unsigned degree() const { return n_; }
  [[nodiscard]] u64 size() const { return r_; }
  [[nodiscard]] u64 group_order() const { return r_ - 1; }
  [[nodiscard]] const Poly& modulus() const { return modulus_; }
  [[nodiscard]] FieldElement primitive_element() const { return alpha_; }
  [[nodiscard]] bool has_tables() const { return tables_ != nullptr; }

  [[nodiscard]] FieldElement zero() const { return {0}; }
  [[nodiscard]] FieldElement one() const { return {1}; }
  /// Image of the integer c in the prime subfield.
  [[nodiscard]] FieldElement from_int(i64 c) const;
  [[nodiscard]] FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const;
  [[nodiscard]] std::vector<std::uint32_t> coefficients(FieldElement x) const;

  [[nodiscard]] FieldElement add(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement sub(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement neg(FieldElement a) const;
  [[nodiscard]] FieldElement mul(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement inv(FieldElement a) const;
  [[nodiscard]] FieldElement pow(FieldElement a, u64 e) const;

  /// alpha^e for any integer e (reduced mod r-1).
  [[nodiscard]] FieldElement exp(i64 e) const;
  /// e in [0, r-1) with alpha^e = x. Table lookup or baby-step giant-step.
  [[nodiscard]] u64 log(FieldElement x) const;
  [[nodiscard]] u64 order(FieldElement x) const;

  /// x^(p^k).
  [[nodiscard]] FieldElement frobenius(FieldElement x, unsigned k = 1) const;

  /// Tr_{r/q}(x) = x + x^q + ... + x^(q^(m-1)) with q = p^s_sub, r = q^m.
  [[nodiscard]] FieldElement trace(FieldElement x, unsigned s_sub) const;
  [[nodiscard]] bool in_subfield(FieldElement x, unsigned s_sub) const;

  /// Generator alpha^((r-1)/(q-1)) of GF(p^s_sub)^* inside this field.
  [[nodiscard]] FieldElement subfield_generator(unsigned s_sub) const;

  /// Monic minimal polynomial of x over GF(p^s_sub).
  [[nodiscard]] FieldPoly minimal_polynomial(FieldElement x, unsigned s_sub) const;

  [[nodiscard]] FieldPoly poly_mul(const FieldPoly& a, const FieldPoly& b) const;
  [[nodiscard]] FieldElement poly_eval(const FieldPoly& f, FieldElement x) const;
  /// Coefficients in the prime subfield print as integers, others as powers of
  /// the subfield generator ("b^k").
  [[nodiscard]] std::string to_string(const FieldPoly& f, const std::string& var = "x") const;
  [[nodiscard]] std::string to_string(FieldElement x) const;

  [[nodiscard]] const std::vector<std::pair<u64, unsigned>>& group_order_factors() const { return factors_; }

  void require_subfield_degree(unsigned s_sub) const;

 private:
  struct Tables {
    std::vector<std::uint32_t> log;      // indexed by code, log[0] unused
    std::vector<std::uint32_t> antilog;  // indexed by exponent in [0, r-1)
  };

  [[nodiscard]] FieldElement mul_poly(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement mul_by_x_plus(FieldElement a, std::uint32_t c) const;
  [[nodiscard]] FieldElement pow_poly(FieldElement a, u64 e) const;
  [[nodiscard]] bool is_generator_slow(FieldElement x) const;
  [[nodiscard]] u64 bsgs_log(FieldElement x) const;
  void build_tables();

  std::uint32_t p_;
  unsigned n_;
  u64 r_;
  u64 table_cap_;
  Poly modulus_;
  FieldElement alpha_;
  std::vector<u64> pow_p_;
  std::vector<std::pair<u64, unsigned>> factors_;
  std::shared_ptr<const Tables> tables_;
};

/// Builds GF(p^n). Throws ParameterError for non-prime p, n = 0, or p^n above
/// Field::kMaxSize.
Field build_field(u64 p, unsigned n, u64 table_cap = Field::kTableCap);

/// Smallest monic irreducible of degree n over GF(p), lexicographic with the
/// constant term compared first.
Poly smallest_irreducible(std::uint32_t p, unsigned n);

FieldElement trace(const Field& f, unsigned s_sub, FieldElement x);
u64 element_order(const Field& f, FieldElement x);
FieldPoly minimal_polynomial(const Field& f, FieldElement x, unsigned s_sub);
u64 discrete_log(const Field& f, FieldElement x);

}  // namespace tracecodes
