#include "tracecodes/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "tracecodes/arith.hpp"

namespace tracecodes {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(mod_pow(a, p - 2, p));
}

void require_same_char(const Poly& a, const Poly& b) {
  if (a.p != b.p) throw ParameterError("polynomials over different characteristics");
}

}  // namespace

Poly::Poly(std::uint32_t characteristic, std::vector<std::uint32_t> c) : p(characteristic), coeffs(std::move(c)) {
  for (auto& x : coeffs) x %= p;
  trim();
}

Poly Poly::monomial(std::uint32_t characteristic, unsigned degree, std::uint32_t coeff) {
  std::vector<std::uint32_t> c(degree + 1, 0);
  c[degree] = coeff;
  return {characteristic, std::move(c)};
}

std::uint32_t Poly::eval(std::uint32_t x) const {
  u64 acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * x + *it) % p;
  return static_cast<std::uint32_t>(acc);
}

void Poly::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_char(a, b);
  std::vector<std::uint32_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.at(i) + b.at(i)) % a.p;
  return {a.p, std::move(c)};
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_char(a, b);
  std::vector<std::uint32_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.at(i) + a.p - b.at(i)) % a.p;
  return {a.p, std::move(c)};
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_char(a, b);
  if (a.is_zero() || b.is_zero()) return {a.p, {}};
  std::vector<u64> acc(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<u64>(a.coeffs[i]) * b.coeffs[j]) % a.p;
    }
  }
  return {a.p, std::vector<std::uint32_t>(acc.begin(), acc.end())};
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_same_char(a, b);
  if (b.is_zero()) throw ParameterError("polynomial division by zero");
  const std::uint32_t p = a.p;
  Poly rem = a;
  if (rem.degree() < b.degree()) return {Poly(p, {}), rem};
  std::vector<std::uint32_t> quot(rem.coeffs.size() - b.coeffs.size() + 1, 0);
  const std::uint32_t lead_inv = inv_mod(b.lead(), p);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const unsigned shift = static_cast<unsigned>(rem.degree() - b.degree());
    const std::uint32_t factor = static_cast<std::uint32_t>(mod_mul(rem.lead(), lead_inv, p));
    quot[shift] = factor;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      const u64 sub = mod_mul(factor, b.coeffs[j], p);
      rem.coeffs[shift + j] = static_cast<std::uint32_t>((rem.coeffs[shift + j] + p - sub) % p);
    }
    rem.trim();
  }
  return {Poly(p, std::move(quot)), rem};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly make_monic(const Poly& a) {
  if (a.is_zero()) return a;
  const std::uint32_t inv = inv_mod(a.lead(), a.p);
  std::vector<std::uint32_t> c(a.coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<std::uint32_t>(mod_mul(a.coeffs[i], inv, a.p));
  return {a.p, std::move(c)};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

Poly powmod(const Poly& base, std::uint64_t exp, const Poly& modulus) {
  Poly result(base.p, {1});
  Poly b = base % modulus;
  while (exp > 0) {
    if (exp & 1U) result = (result * b) % modulus;
    b = (b * b) % modulus;
    exp >>= 1U;
  }
  return result % modulus;
}

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly x = Poly::monomial(f.p, 1);
  // x^(p^k) mod f, built by repeated p-th powering.
  auto frob = [&](unsigned k) {
    Poly acc = x;
    for (unsigned i = 0; i < k; ++i) acc = powmod(acc, f.p, f);
    return acc;
  };
  if (frob(static_cast<unsigned>(n)) != x % f) return false;
  for (auto [prime, mult] : factorize(static_cast<u64>(n))) {
    Poly g = poly_gcd(f, frob(static_cast<unsigned>(n / static_cast<int>(prime))) - x);
    if (g.degree() != 0) return false;
  }
  return true;
}

std::string to_string(const Poly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const std::uint32_t c = f.coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace tracecodes
