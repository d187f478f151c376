#include "tracecodes/cyclotomic_integer.hpp"

#include <cmath>
#include <numbers>

namespace tracecodes {

CyclotomicInteger::CyclotomicInteger(std::uint32_t p) : p_(p), coeffs_(p - 1, 0) {
  if (p < 2) throw ParameterError("cyclotomic ring needs a prime p >= 2");
}

CyclotomicInteger CyclotomicInteger::from_integer(std::uint32_t p, i64 c) {
  CyclotomicInteger out(p);
  out.coeffs_[0] = c;
  return out;
}

CyclotomicInteger CyclotomicInteger::zeta_power(std::uint32_t p, u64 k) {
  std::vector<i64> tally(p, 0);
  tally[k % p] = 1;
  return from_tally(p, tally);
}

CyclotomicInteger CyclotomicInteger::from_coeffs(std::uint32_t p, std::vector<i64> coeffs) {
  CyclotomicInteger out(p);
  if (coeffs.size() != out.coeffs_.size()) throw ParameterError("cyclotomic coefficient vector has the wrong length");
  out.coeffs_ = std::move(coeffs);
  return out;
}

CyclotomicInteger CyclotomicInteger::from_tally(std::uint32_t p, std::span<const i64> tally) {
  if (tally.size() != p) throw ParameterError("tally length must equal p");
  CyclotomicInteger out(p);
  if (p == 2) {
    // zeta_2 = -1
    out.coeffs_[0] = checked_sub(tally[0], tally[1]);
    return out;
  }
  const i64 top = tally[p - 1];
  for (std::uint32_t j = 0; j + 1 < p; ++j) out.coeffs_[j] = checked_sub(tally[j], top);
  return out;
}

std::optional<i64> CyclotomicInteger::as_integer() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

bool CyclotomicInteger::is_zero() const {
  for (i64 c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::complex<double> CyclotomicInteger::embed() const {
  std::complex<double> acc{0.0, 0.0};
  const double step = 2.0 * std::numbers::pi / static_cast<double>(p_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const double angle = step * static_cast<double>(j);
    acc += static_cast<double>(coeffs_[j]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::vector<i64> CyclotomicInteger::to_tally() const {
  if (p_ == 2) return {coeffs_[0], 0};
  std::vector<i64> out(coeffs_.begin(), coeffs_.end());
  out.push_back(0);
  return out;
}

void CyclotomicInteger::require_compatible(const CyclotomicInteger& o) const {
  if (p_ != o.p_) throw ParameterError("cyclotomic integers over different primes");
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& o) {
  require_compatible(o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] = checked_add(coeffs_[j], o.coeffs_[j]);
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& o) {
  require_compatible(o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] = checked_sub(coeffs_[j], o.coeffs_[j]);
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator*=(i64 k) {
  for (auto& c : coeffs_) c = checked_mul(c, k);
  return *this;
}

CyclotomicInteger CyclotomicInteger::divided_exactly(i64 k) const {
  CyclotomicInteger out = *this;
  for (auto& c : out.coeffs_) c = exact_div(c, k, "cyclotomic division");
  return out;
}

CyclotomicInteger CyclotomicInteger::operator-() const {
  CyclotomicInteger out = *this;
  return out *= -1;
}

CyclotomicInteger CyclotomicInteger::operator+(i64 c) const {
  CyclotomicInteger out = *this;
  out.coeffs_[0] = checked_add(out.coeffs_[0], c);
  return out;
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  a.require_compatible(b);
  const std::uint32_t p = a.p_;
  if (p == 2) return CyclotomicInteger::from_integer(2, checked_mul(a.coeffs_[0], b.coeffs_[0]));
  // Cyclic convolution modulo zeta^p = 1, then reduce zeta^(p-1).
  std::vector<i128> acc(p, 0);
  for (std::uint32_t i = 0; i + 1 < p; ++i) {
    const i64 x = a.coeffs_[i];
    if (x == 0) continue;
    for (std::uint32_t j = 0; j + 1 < p; ++j) {
      const i64 y = b.coeffs_[j];
      if (y == 0) continue;
      std::uint32_t k = i + j;
      if (k >= p) k -= p;
      acc[k] += static_cast<i128>(x) * y;
    }
  }
  std::vector<i64> tally(p);
  for (std::uint32_t k = 0; k < p; ++k) {
    if (acc[k] > INT64_MAX || acc[k] < INT64_MIN) throw std::overflow_error("cyclotomic product overflow");
    tally[k] = static_cast<i64>(acc[k]);
  }
  return CyclotomicInteger::from_tally(p, tally);
}

std::string CyclotomicInteger::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const i64 c = coeffs_[j];
    if (c == 0) continue;
    std::string term;
    if (j == 0) {
      term = std::to_string(c < 0 ? -c : c);
    } else {
      if (c != 1 && c != -1) term = std::to_string(c < 0 ? -c : c);
      term += "z";
      if (j > 1) term += "^" + std::to_string(j);
    }
    if (c < 0) {
      out += "-" + term;
    } else {
      out += (out.empty() ? "" : "+") + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::complex<double> embed_complex(const CyclotomicInteger& x) { return x.embed(); }

}  // namespace tracecodes
