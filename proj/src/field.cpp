#include "tracecodes/field.hpp"

#include <array>
#include <numeric>
#include <optional>
#include <tuple>
#include <unordered_map>

namespace tracecodes {

namespace {

constexpr unsigned kMaxDigits = 32;
using Digits = std::array<std::uint32_t, kMaxDigits>;

// Code of the k-th vector in lexicographic order, constant term most significant.
std::uint32_t lex_code(u64 k, std::uint32_t p, unsigned n, const std::vector<u64>& pow_p) {
  u64 code = 0;
  for (unsigned i = 0; i < n; ++i) {
    const u64 digit = k / pow_p[n - 1 - i] % p;
    code += digit * pow_p[i];
  }
  return static_cast<std::uint32_t>(code);
}

// Some a in GF(p)^* with f(a) = 0 (Horner, coefficients constant first).
bool has_root(const std::vector<std::uint32_t>& c, std::uint32_t p) {
  for (u64 a = 1; a < p; ++a) {
    u64 v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = (v * a + *it) % p;
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

Poly smallest_irreducible(std::uint32_t p, unsigned n) {
  if (n == 0) throw ParameterError("field degree must be positive");
  u64 count = 1;
  for (unsigned i = 0; i < n; ++i) count = static_cast<u64>(checked_mul(static_cast<i64>(count), p));
  std::vector<std::uint32_t> c(n + 1, 0);
  c[n] = 1;
  // Above degree 1 a zero constant term means x | f; those candidates form the
  // first p^(n-1) of the order and are skipped.
  const u64 first = n == 1 ? 0 : count / p;
  for (u64 k = first; k < count; ++k) {
    u64 rest = k;
    for (unsigned i = 0; i < n; ++i) {
      c[n - 1 - i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (n > 1 && p <= 64 && has_root(c, p)) continue;
    Poly f(p, c);
    if (is_irreducible(f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Field::Field(std::uint32_t p, unsigned degree, u64 table_cap)
    : p_(p), n_(degree), r_(1), table_cap_(table_cap) {
  if (!is_prime(p)) throw ParameterError("characteristic " + std::to_string(p) + " is not prime");
  if (degree == 0) throw ParameterError("field degree must be positive");
  if (degree >= kMaxDigits) throw ParameterError("field too large");
  pow_p_.push_back(1);
  for (unsigned i = 0; i < degree; ++i) {
    r_ *= p;
    if (r_ > kMaxSize) {
      throw ParameterError("field size " + std::to_string(p) + "^" + std::to_string(degree) +
                           " exceeds the configured bound 2^31");
    }
    pow_p_.push_back(r_);
  }
  modulus_ = smallest_irreducible(p, degree);
  factors_ = factorize(r_ - 1);

  if (r_ <= table_cap_) {
    build_tables();
    return;
  }
  for (u64 k = 1; k < r_; ++k) {
    FieldElement cand{lex_code(k, p_, n_, pow_p_)};
    if (cand.code != 0 && is_generator_slow(cand)) {
      alpha_ = cand;
      return;
    }
  }
  throw std::logic_error("no primitive element found");
}

void Field::build_tables() {
  const u64 ord = r_ - 1;
  auto tables = std::make_shared<Tables>();
  tables->log.assign(r_, 0);
  tables->antilog.assign(ord, 0);

  // Cheapest generator to step with: x + c. Multiplication by it is O(n).
  std::optional<std::uint32_t> step_c;
  for (std::uint32_t c = 0; c < p_; ++c) {
    FieldElement cand = mul_by_x_plus(one(), c);
    if (cand.code != 0 && is_generator_slow(cand)) {
      step_c = c;
      break;
    }
  }

  if (step_c) {
    std::vector<std::uint32_t> gamma_log(r_, 0);
    std::vector<std::uint32_t> gamma_antilog(ord, 0);
    FieldElement y = one();
    for (u64 e = 0; e < ord; ++e) {
      gamma_antilog[e] = y.code;
      gamma_log[y.code] = static_cast<std::uint32_t>(e);
      y = mul_by_x_plus(y, *step_c);
    }
    u64 t = 0;
    for (u64 k = 1; k < r_; ++k) {
      const std::uint32_t code = lex_code(k, p_, n_, pow_p_);
      if (code == 0) continue;
      if (std::gcd(static_cast<u64>(gamma_log[code]), ord) == 1) {
        alpha_ = {code};
        t = gamma_log[code];
        break;
      }
    }
    // alpha = gamma^t, so alpha^e = gamma^(e t) and log_alpha(y) = log_gamma(y) t^-1.
    u64 t_inv = 1;
    if (ord > 1) {
      i64 a = static_cast<i64>(t), m = static_cast<i64>(ord), x0 = 1, x1 = 0;
      while (m != 0) {
        i64 qq = a / m;
        std::tie(a, m) = std::make_pair(m, a - qq * m);
        std::tie(x0, x1) = std::make_pair(x1, x0 - qq * x1);
      }
      t_inv = static_cast<u64>(floor_mod(x0, static_cast<i64>(ord)));
    }
    for (u64 e = 0; e < ord; ++e) tables->antilog[e] = gamma_antilog[mod_mul(e, t, ord)];
    for (u64 code = 1; code < r_; ++code) {
      tables->log[code] = static_cast<std::uint32_t>(mod_mul(gamma_log[code], t_inv, ord));
    }
  } else {
    for (u64 k = 1; k < r_; ++k) {
      FieldElement cand{lex_code(k, p_, n_, pow_p_)};
      if (cand.code != 0 && is_generator_slow(cand)) {
        alpha_ = cand;
        break;
      }
    }
    FieldElement y = one();
    for (u64 e = 0; e < ord; ++e) {
      tables->antilog[e] = y.code;
      tables->log[y.code] = static_cast<std::uint32_t>(e);
      y = mul_poly(y, alpha_);
    }
  }
  tables_ = std::move(tables);
}

bool Field::is_generator_slow(FieldElement x) const {
  if (x.code == 0) return false;
  const u64 ord = r_ - 1;
  if (pow_poly(x, ord).code != 1) return false;
  for (auto [prime, mult] : factors_) {
    if (pow_poly(x, ord / prime).code == 1) return false;
  }
  return true;
}

FieldElement Field::from_int(i64 c) const { return {static_cast<std::uint32_t>(floor_mod(c, p_))}; }

FieldElement Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > n_) throw ParameterError("too many coefficients for field element");
  u64 code = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) code += static_cast<u64>(coeffs[i] % p_) * pow_p_[i];
  return {static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> Field::coefficients(FieldElement x) const {
  std::vector<std::uint32_t> out(n_);
  std::uint32_t code = x.code;
  for (unsigned i = 0; i < n_; ++i) {
    out[i] = code % p_;
    code /= p_;
  }
  return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (p_ == 2) return {a.code ^ b.code};
  u64 out = 0;
  std::uint32_t x = a.code, y = b.code;
  for (unsigned i = 0; i < n_ && (x | y) != 0; ++i) {
    out += static_cast<u64>((x % p_ + y % p_) % p_) * pow_p_[i];
    x /= p_;
    y /= p_;
  }
  return {static_cast<std::uint32_t>(out)};
}

FieldElement Field::neg(FieldElement a) const {
  if (p_ == 2) return a;
  u64 out = 0;
  std::uint32_t x = a.code;
  for (unsigned i = 0; i < n_ && x != 0; ++i) {
    out += static_cast<u64>((p_ - x % p_) % p_) * pow_p_[i];
    x /= p_;
  }
  return {static_cast<std::uint32_t>(out)};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul_by_x_plus(FieldElement a, std::uint32_t c) const {
  Digits d{};
  std::uint32_t code = a.code;
  for (unsigned i = 0; i < n_; ++i) {
    d[i] = code % p_;
    code /= p_;
  }
  // a*x: shift up and fold the overflow digit through x^n = -sum f_i x^i.
  const std::uint32_t top = d[n_ - 1];
  Digits out{};
  for (unsigned i = 0; i < n_; ++i) {
    const u64 shifted = i == 0 ? 0 : d[i - 1];
    const u64 fold = static_cast<u64>(top) * modulus_.at(i) % p_;
    const u64 scaled = static_cast<u64>(c) * d[i] % p_;
    out[i] = static_cast<std::uint32_t>((shifted + p_ - fold + scaled) % p_);
  }
  u64 res = 0;
  for (unsigned i = 0; i < n_; ++i) res += out[i] * pow_p_[i];
  return {static_cast<std::uint32_t>(res)};
}

FieldElement Field::mul_poly(FieldElement a, FieldElement b) const {
  if (a.code == 0 || b.code == 0) return zero();
  std::array<u64, 2 * kMaxDigits> prod{};
  const auto da = coefficients(a);
  const auto db = coefficients(b);
  for (unsigned i = 0; i < n_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + static_cast<u64>(da[i]) * db[j]) % p_;
  }
  for (unsigned k = 2 * n_ - 1; k-- > n_;) {
    const u64 top = prod[k];
    if (top == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < n_; ++i) {
      prod[k - n_ + i] = (prod[k - n_ + i] + p_ - top * modulus_.at(i) % p_) % p_;
    }
  }
  u64 res = 0;
  for (unsigned i = 0; i < n_; ++i) res += prod[i] * pow_p_[i];
  return {static_cast<std::uint32_t>(res)};
}

FieldElement Field::pow_poly(FieldElement a, u64 e) const {
  FieldElement result = one();
  while (e > 0) {
    if (e & 1U) result = mul_poly(result, a);
    a = mul_poly(a, a);
    e >>= 1U;
  }
  return result;
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (a.code == 0 || b.code == 0) return zero();
  if (tables_) {
    u64 e = static_cast<u64>(tables_->log[a.code]) + tables_->log[b.code];
    if (e >= r_ - 1) e -= r_ - 1;
    return {tables_->antilog[e]};
  }
  return mul_poly(a, b);
}

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) throw ParameterError("inverse of zero");
  if (tables_) {
    const u64 l = tables_->log[a.code];
    return {tables_->antilog[l == 0 ? 0 : r_ - 1 - l]};
  }
  return pow_poly(a, r_ - 2);
}

FieldElement Field::pow(FieldElement a, u64 e) const {
  if (a.code == 0) return e == 0 ? one() : zero();
  if (tables_) return {tables_->antilog[mod_mul(tables_->log[a.code], e % (r_ - 1), r_ - 1)]};
  return pow_poly(a, e);
}

FieldElement Field::exp(i64 e) const {
  const u64 red = static_cast<u64>(floor_mod(e, static_cast<i64>(r_ - 1)));
  if (tables_) return {tables_->antilog[red]};
  return pow_poly(alpha_, red);
}

u64 Field::log(FieldElement x) const {
  if (x.code == 0) throw ParameterError("discrete log of zero");
  if (tables_) return tables_->log[x.code];
  return bsgs_log(x);
}

u64 Field::bsgs_log(FieldElement x) const {
  const u64 ord = r_ - 1;
  const u64 m = isqrt(ord) + 1;
  std::unordered_map<std::uint32_t, u64> baby;
  baby.reserve(m);
  FieldElement y = one();
  for (u64 j = 0; j < m; ++j) {
    baby.emplace(y.code, j);
    y = mul_poly(y, alpha_);
  }
  const FieldElement giant = pow_poly(pow_poly(alpha_, m), ord - 1);
  FieldElement z = x;
  for (u64 i = 0; i <= m; ++i) {
    if (auto it = baby.find(z.code); it != baby.end()) return (i * m + it->second) % ord;
    z = mul_poly(z, giant);
  }
  throw std::logic_error("baby-step giant-step found no logarithm");
}

u64 Field::order(FieldElement x) const {
  if (x.code == 0) throw ParameterError("order of zero is undefined");
  u64 ord = r_ - 1;
  for (auto [prime, mult] : factors_) {
    for (unsigned i = 0; i < mult; ++i) {
      if (pow(x, ord / prime).code != 1) break;
      ord /= prime;
    }
  }
  return ord;
}

FieldElement Field::frobenius(FieldElement x, unsigned k) const {
  if (x.code == 0) return x;
  k %= n_;
  if (tables_) {
    u64 e = tables_->log[x.code];
    for (unsigned i = 0; i < k; ++i) e = e * p_ % (r_ - 1);
    return {tables_->antilog[e]};
  }
  return pow_poly(x, pow_p_[k]);
}

void Field::require_subfield_degree(unsigned s_sub) const {
  if (s_sub == 0 || n_ % s_sub != 0) {
    throw ParameterError("subfield degree " + std::to_string(s_sub) + " does not divide extension degree " +
                         std::to_string(n_));
  }
}

FieldElement Field::trace(FieldElement x, unsigned s_sub) const {
  require_subfield_degree(s_sub);
  const unsigned m = n_ / s_sub;
  FieldElement acc = x;
  FieldElement conj = x;
  for (unsigned i = 1; i < m; ++i) {
    conj = frobenius(conj, s_sub);
    acc = add(acc, conj);
  }
  return acc;
}

bool Field::in_subfield(FieldElement x, unsigned s_sub) const {
  require_subfield_degree(s_sub);
  return frobenius(x, s_sub) == x;
}

FieldElement Field::subfield_generator(unsigned s_sub) const {
  require_subfield_degree(s_sub);
  const u64 q = pow_p_[s_sub];
  return exp(static_cast<i64>((r_ - 1) / (q - 1)));
}

FieldPoly Field::poly_mul(const FieldPoly& a, const FieldPoly& b) const {
  FieldPoly out;
  out.subfield_degree = std::gcd(a.subfield_degree, b.subfield_degree);
  if (a.coeffs.empty() || b.coeffs.empty()) return out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      out.coeffs[i + j] = add(out.coeffs[i + j], mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return out;
}

FieldElement Field::poly_eval(const FieldPoly& f, FieldElement x) const {
  FieldElement acc = zero();
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = add(mul(acc, x), *it);
  return acc;
}

FieldPoly Field::minimal_polynomial(FieldElement x, unsigned s_sub) const {
  require_subfield_degree(s_sub);
  FieldPoly result{s_sub, {one()}};
  FieldElement conj = x;
  do {
    result = poly_mul(result, FieldPoly{n_, {neg(conj), one()}});
    conj = frobenius(conj, s_sub);
  } while (conj != x);
  result.subfield_degree = s_sub;
  for (const auto& c : result.coeffs) {
    if (!in_subfield(c, s_sub)) throw std::logic_error("minimal polynomial coefficient outside the subfield");
  }
  return result;
}

std::string Field::to_string(FieldElement x) const {
  if (x.code == 0) return "0";
  const auto c = coefficients(x);
  std::string out;
  for (int i = static_cast<int>(n_) - 1; i >= 0; --i) {
    const std::uint32_t ci = c[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(ci);
      continue;
    }
    if (ci != 1) out += std::to_string(ci);
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string Field::to_string(const FieldPoly& f, const std::string& var) const {
  if (f.coeffs.empty()) return "0";
  const u64 q = pow_p_[f.subfield_degree];
  const u64 step = (r_ - 1) / (q - 1);
  auto coeff_str = [&](FieldElement c) -> std::string {
    if (c.code < p_) return std::to_string(c.code);
    return "b^" + std::to_string(log(c) / step);
  };
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const FieldElement c = f.coeffs[static_cast<std::size_t>(i)];
    if (c.code == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += coeff_str(c);
      continue;
    }
    if (c.code != 1) out += coeff_str(c);
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Field build_field(u64 p, unsigned n, u64 table_cap) {
  if (p < 2 || p > Field::kMaxSize || !is_prime(p)) {
    throw ParameterError("characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(static_cast<std::uint32_t>(p), n, table_cap);
}

FieldElement trace(const Field& f, unsigned s_sub, FieldElement x) { return f.trace(x, s_sub); }
u64 element_order(const Field& f, FieldElement x) { return f.order(x); }
FieldPoly minimal_polynomial(const Field& f, FieldElement x, unsigned s_sub) {
  return f.minimal_polynomial(x, s_sub);
}
u64 discrete_log(const Field& f, FieldElement x) { return f.log(x); }

}  // namespace tracecodes
