#include "tracecodes/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tracecodes {

i64 checked_add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

i64 checked_sub(i64 a, i64 b) {
  i64 out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in subtraction");
  return out;
}

i64 checked_mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

i64 checked_pow(i64 base, unsigned exp) {
  i64 out = 1;
  for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

i64 gcd(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 floor_mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 exact_div(i64 num, i64 den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw IntegralityError(std::string(what) + ": " + std::to_string(num) + " is not divisible by " +
                           std::to_string(den));
  }
  return num / den;
}

u64 mod_mul(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 mod_pow(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mod_mul(result, base, m);
    base = mod_mul(base, base, m);
    exp >>= 1U;
  }
  return result;
}

u64 isqrt(u64 n) {
  auto x = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (x > 0 && static_cast<u128>(x) * x > n) --x;
  while (static_cast<u128>(x + 1) * (x + 1) <= n) ++x;
  return x;
}

bool is_square(u64 n) {
  u64 s = isqrt(n);
  return s * s == n;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mod_mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
    if (n % f != 0) continue;
    unsigned e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    out.emplace_back(f, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (auto [prime, mult] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned e = 1; e <= mult; ++e) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (m == 1) return 1;
  if (std::gcd(a % m, m) != 1) throw ParameterError("multiplicative_order: base not invertible");
  // Order divides phi(m); shrink phi(m) prime by prime.
  u64 phi = m;
  for (auto [prime, mult] : factorize(m)) phi = phi / prime * (prime - 1);
  u64 order = phi;
  for (auto [prime, mult] : factorize(phi)) {
    for (unsigned i = 0; i < mult && order % prime == 0; ++i) {
      if (mod_pow(a, order / prime, m) != 1) break;
      order /= prime;
    }
  }
  return order;
}

int legendre(i64 a, u64 p) {
  u64 x = static_cast<u64>(floor_mod(a, static_cast<i64>(p)));
  if (x == 0) return 0;
  return mod_pow(x, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::pair<i64, i64> split_square(i64 n) {
  if (n == 0) throw ParameterError("split_square: zero");
  i64 sign = n < 0 ? -1 : 1;
  u64 m = static_cast<u64>(n < 0 ? -n : n);
  i64 k = 1;
  u64 f = 1;
  for (auto [prime, mult] : factorize(m)) {
    for (unsigned i = 0; i < mult / 2; ++i) k = checked_mul(k, static_cast<i64>(prime));
    if (mult % 2 == 1) f *= prime;
  }
  return {k, sign * static_cast<i64>(f)};
}

std::pair<u64, unsigned> prime_power(u64 n) {
  if (n < 2) return {0, 0};
  auto fac = factorize(n);
  if (fac.size() != 1) return {0, 0};
  return fac.front();
}

std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace tracecodes
