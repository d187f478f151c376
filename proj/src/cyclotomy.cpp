#include "tracecodes/cyclotomy.hpp"

#include <cmath>

#include "tracecodes/kernels.hpp"

namespace tracecodes {

namespace {

void require_order(const Field& f, u64 N) {
  if (N == 0 || f.group_order() % N != 0) {
    throw ParameterError("N = " + std::to_string(N) + " does not divide r-1 = " + std::to_string(f.group_order()));
  }
}

}  // namespace

CyclotomicClass::CyclotomicClass(const Field& f, u64 N, i64 i)
    : f_(&f), N_(N), i_(static_cast<u64>(floor_mod(i, static_cast<i64>(N)))), size_(f.group_order() / N) {}

CyclotomicClass::iterator CyclotomicClass::begin() const {
  return {f_, f_->exp(static_cast<i64>(i_)), f_->exp(static_cast<i64>(N_)), 0};
}

CyclotomicClass::iterator CyclotomicClass::end() const { return {f_, {}, {}, size_}; }

bool CyclotomicClass::contains(FieldElement x) const {
  if (x.code == 0) return false;
  return f_->log(x) % N_ == i_;
}

CyclotomicClass cyclotomic_class(const Field& f, u64 N, i64 i) {
  require_order(f, N);
  return {f, N, i};
}

u64 GaussPeriodSet::field_size() const { return static_cast<u64>(checked_pow(p, degree)); }

const CyclotomicInteger& GaussPeriodSet::at(i64 i) const {
  return values.at(static_cast<std::size_t>(floor_mod(i, static_cast<i64>(N))));
}

CyclotomicInteger GaussPeriodSet::sum() const {
  CyclotomicInteger acc(p);
  for (const auto& v : values) acc += v;
  return acc;
}

std::optional<std::vector<i64>> GaussPeriodSet::as_integers() const {
  std::vector<i64> out;
  for (const auto& v : values) {
    auto c = v.as_integer();
    if (!c) return std::nullopt;
    out.push_back(*c);
  }
  return out;
}

CyclotomicInteger gauss_period(const Field& f, u64 N, i64 i) {
  const std::uint32_t p = f.characteristic();
  std::vector<i64> tally(p, 0);
  for (FieldElement x : cyclotomic_class(f, N, i)) ++tally[f.trace(x, 1).code];
  return CyclotomicInteger::from_tally(p, tally);
}

namespace {

GaussPeriodSet from_tallies(std::uint32_t p, unsigned degree, u64 N, const std::vector<i64>& tally) {
  GaussPeriodSet out;
  out.p = p;
  out.degree = degree;
  out.N = N;
  const std::span<const i64> view(tally);
  for (u64 i = 0; i < N; ++i) out.values.push_back(CyclotomicInteger::from_tally(p, view.subspan(i * p, p)));
  return out;
}

}  // namespace

GaussPeriodSet gauss_periods(const Field& f, u64 N) {
  require_order(f, N);
  return from_tallies(f.characteristic(), f.degree(), N, kernels::class_trace_tally(f, N));
}

GaussPeriodSet subfield_gauss_periods(const Field& f, unsigned s_sub, u64 L) {
  const auto trace = kernels::prime_trace_table(f);
  return from_tallies(f.characteristic(), s_sub, L, kernels::subfield_class_trace_tally(f, s_sub, L, trace));
}

bool check_period_bound(const GaussPeriodSet& periods) {
  const double N = static_cast<double>(periods.N);
  const double bound = (N - 1.0) * std::sqrt(static_cast<double>(periods.field_size())) / N + 1e-9;
  for (const auto& v : periods.values) {
    if (std::abs(v.embed() + 1.0 / N) > bound) return false;
  }
  return true;
}

}  // namespace tracecodes
