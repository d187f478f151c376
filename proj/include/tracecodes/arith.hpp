#pragma once

// Small exact integer helpers shared by the field, cyclotomy and code layers.
// Everything here works on 64-bit integers; operations that could overflow
// are checked and throw std::overflow_error rather than wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tracecodes {

using i64 = std::int64_t;
using u64 = std::uint64_t;
__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

/// Raised for parameters that violate a precondition (maps to CLI exit 2).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a workload exceeds a configured size guardrail (CLI exit 3).
class GuardrailError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a quantity that must be a rational integer is not.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

i64 checked_add(i64 a, i64 b);
i64 checked_sub(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 checked_pow(i64 base, unsigned exp);

i64 gcd(i64 a, i64 b);
i64 floor_mod(i64 a, i64 m);

/// Exact quotient; throws IntegralityError when `den` does not divide `num`.
i64 exact_div(i64 num, i64 den, const char* what);

u64 mod_mul(u64 a, u64 b, u64 m);
u64 mod_pow(u64 base, u64 exp, u64 m);

/// Floor of the square root.
u64 isqrt(u64 n);
bool is_square(u64 n);

bool is_prime(u64 n);

/// Prime factorization by trial division, ascending primes with multiplicity.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// All positive divisors in ascending order.
std::vector<u64> divisors(u64 n);

/// Multiplicative order of `a` modulo `m`; requires gcd(a, m) = 1 and m >= 1.
u64 multiplicative_order(u64 a, u64 m);

/// Legendre symbol (a / p) for an odd prime p: -1, 0 or 1.
int legendre(i64 a, u64 p);

/// Writes n = k^2 * f with f squarefree (sign of n kept on f). n != 0.
std::pair<i64, i64> split_square(i64 n);

/// If n = p^e for a prime p, returns (p, e); otherwise (0, 0).
std::pair<u64, unsigned> prime_power(u64 n);

std::string to_string(i128 v);

}  // namespace tracecodes
