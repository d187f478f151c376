#include "tracecodes/surd.hpp"

#include <cmath>

namespace tracecodes {

SurdValue::SurdValue(i64 u, i64 v, i64 w, i64 D) : u_(u), v_(v), w_(w), D_(D) {
  if (w_ == 0) throw ParameterError("surd with zero denominator");
  if (v_ != 0) {
    if (D_ == 0) {
      v_ = 0;
    } else {
      auto [k, f] = split_square(D_);
      v_ = checked_mul(v_, k);
      D_ = f;
      if (D_ == 1) {
        u_ = checked_add(u_, v_);
        v_ = 0;
      }
    }
  }
  if (v_ == 0) D_ = 1;
  if (w_ < 0) {
    u_ = -u_;
    v_ = -v_;
    w_ = -w_;
  }
  const i64 g = gcd(gcd(u_, v_), w_);
  if (g > 1) {
    u_ /= g;
    v_ /= g;
    w_ /= g;
  }
}

std::optional<i64> SurdValue::as_integer() const {
  if (v_ != 0 || u_ % w_ != 0) return std::nullopt;
  return u_ / w_;
}

std::complex<double> SurdValue::embed() const {
  const double root = std::sqrt(static_cast<double>(D_ < 0 ? -D_ : D_));
  const double w = static_cast<double>(w_);
  if (D_ < 0) return {static_cast<double>(u_) / w, static_cast<double>(v_) * root / w};
  return {(static_cast<double>(u_) + static_cast<double>(v_) * root) / w, 0.0};
}

SurdValue operator+(const SurdValue& a, const SurdValue& b) {
  if (a.v_ != 0 && b.v_ != 0 && a.D_ != b.D_) throw ParameterError("adding surds over different radicands");
  const i64 D = a.v_ != 0 ? a.D_ : b.D_;
  const i64 w = checked_mul(a.w_, b.w_);
  const i64 u = checked_add(checked_mul(a.u_, b.w_), checked_mul(b.u_, a.w_));
  const i64 v = checked_add(checked_mul(a.v_, b.w_), checked_mul(b.v_, a.w_));
  return {u, v, w, D};
}

SurdValue operator-(const SurdValue& a, const SurdValue& b) { return a + (-b); }

SurdValue operator*(const SurdValue& a, i64 k) {
  return {checked_mul(a.u_, k), checked_mul(a.v_, k), a.w_, a.D_};
}

SurdValue SurdValue::divided_by(i64 k) const {
  if (k == 0) throw ParameterError("surd division by zero");
  return {u_, v_, checked_mul(w_, k), D_};
}

bool SurdValue::at_most(i64 num, i64 den) const {
  if (D_ < 0 && v_ != 0) throw ParameterError("ordering of a non-real surd");
  // (u + v sqrt D)/w <= num/den  <=>  v den sqrt D <= num w - u den
  const i128 lhs_coeff = static_cast<i128>(v_) * den;
  const i128 rhs = static_cast<i128>(num) * w_ - static_cast<i128>(u_) * den;
  if (lhs_coeff == 0) return rhs >= 0;
  if (lhs_coeff < 0) {
    // -|c| sqrt D <= rhs  <=>  rhs >= 0 or c^2 D >= rhs^2
    if (rhs >= 0) return true;
    return lhs_coeff * lhs_coeff * D_ >= rhs * rhs;
  }
  if (rhs < 0) return false;
  return lhs_coeff * lhs_coeff * D_ <= rhs * rhs;
}

std::string SurdValue::to_string() const {
  if (auto i = as_integer()) return std::to_string(*i);
  std::string num;
  if (u_ != 0 || v_ == 0) num = std::to_string(u_);
  if (v_ != 0) {
    const i64 av = v_ < 0 ? -v_ : v_;
    if (!num.empty() || v_ < 0) num += v_ < 0 ? "-" : "+";
    if (av != 1) num += std::to_string(av) + "*";
    num += "sqrt(" + std::to_string(D_) + ")";
  }
  if (w_ == 1) return num;
  if (v_ == 0) return num + "/" + std::to_string(w_);
  return "(" + num + ")/" + std::to_string(w_);
}

}  // namespace tracecodes
