#include <vector>

#include "tracecodes/codes.hpp"
#include "tracecodes/kernels.hpp"

namespace tracecodes {

namespace {

using Rows = std::vector<std::pair<i64, i64>>;

// Weight qN W / (qN), asserted to be a rational integer, and to lie in
// [0, n] unless the row never occurs.
i64 weight_from(const CyclotomicInteger& scaled, i64 denom, u64 n, const char* row, i64 freq = 1) {
  const auto value = scaled.as_integer();
  if (!value) throw IntegralityError(std::string(row) + ": weight is not rational (" + scaled.to_string() + ")");
  const i64 w = exact_div(*value, denom, row);
  if (freq != 0 && (w < 0 || static_cast<u64>(w) > n)) {
    throw IntegralityError(std::string(row) + ": weight " + std::to_string(w) + " outside [0, n]");
  }
  return w;
}

void require_periods(const GaussPeriodSet& s, std::uint32_t p, u64 N, const char* what) {
  if (s.p != p || s.N != N || s.values.size() != N) {
    throw ParameterError(std::string(what) + ": expected periods of order " + std::to_string(N) + " over characteristic " +
                         std::to_string(p));
  }
}

WeightDistribution finish(Rows rows, u64 expected_total) {
  auto dist = WeightDistribution::from_rows(Semantics::PairCounts, rows);
  if (dist.total() != expected_total) {
    throw IntegralityError("table frequencies sum to " + std::to_string(dist.total()) + ", expected " +
                           std::to_string(expected_total));
  }
  return dist;
}

std::vector<i64> concat_tallies(const GaussPeriodSet& s) {
  std::vector<i64> out;
  out.reserve(s.N * s.p);
  for (const auto& v : s.values) {
    const auto t = v.to_tally();
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

}  // namespace

WeightDistribution table_distribution_c1(const CodeSpec& spec, const GaussPeriodSet& periods_d,
                                         const GaussPeriodSet& periods_N, const GaussPeriodSet& periods_L) {
  if (spec.variant != Variant::C1) throw ParameterError("table_distribution_c1 needs variant c1");
  const auto p = static_cast<std::uint32_t>(spec.p);
  const u64 L = spec.N / spec.d;
  require_periods(periods_d, p, spec.d, "order-d periods");
  require_periods(periods_N, p, spec.N, "order-N periods");
  require_periods(periods_L, p, L, "subfield periods");

  const i64 q = static_cast<i64>(spec.q);
  const i64 R = static_cast<i64>(spec.r - 1);
  const i64 N = static_cast<i64>(spec.N);
  const i64 d = static_cast<i64>(spec.d);
  const i64 base = checked_mul(q - 1, R);
  const i64 qN = checked_mul(q, N);

  Rows rows{{0, 1}, {static_cast<i64>(spec.n), q - 1}};
  // a in C_l^(d,r), Tr(b) = 0
  for (i64 l = 0; l < d; ++l) {
    const auto scaled = periods_d.at(l) * (-(q - 1) * d) + base;
    rows.emplace_back(weight_from(scaled, qN, spec.n, "C1 table, Tr(b) = 0 row"), R / d);
  }
  if (spec.d == spec.N) {
    // a in C_j^(N,r), Tr(b) != 0
    for (i64 j = 0; j < N; ++j) {
      const auto scaled = periods_N.at(j) * N + base;
      rows.emplace_back(weight_from(scaled, qN, spec.n, "C1 table, Tr(b) != 0 row"), (q - 1) * R / N);
    }
    return finish(std::move(rows), spec.q * spec.r);
  }
  // a in C_j^(N,r), Tr(b) in C_k^(N/d,q). S_{j,k} = S_{j-ck,0}, so each
  // column-0 sum stands for L rows.
  const auto tally_N = concat_tallies(periods_N);
  const auto tally_L = concat_tallies(periods_L);
  const auto sums = kernels::cross_sums(tally_N, spec.N, tally_L, L, spec.subfield_step() % spec.N, p);
  const i64 freq = exact_div(checked_mul(checked_mul(d, q - 1), R), N * N, "C1 cross-row frequency");
  const std::span<const i64> view(sums);
  for (u64 j = 0; j < spec.N; ++j) {
    const auto S = CyclotomicInteger::from_tally(p, view.subspan(j * p, p));
    rows.emplace_back(weight_from(S * (-N) + base, qN, spec.n, "C1 table, cross row"), checked_mul(freq, static_cast<i64>(L)));
  }
  return finish(std::move(rows), spec.q * spec.r);
}

WeightDistribution table_distribution_c1(const Code& code) {
  const auto& spec = code.spec();
  const auto& f = code.field();
  return table_distribution_c1(spec, gauss_periods(f, spec.d), gauss_periods(f, spec.N),
                               subfield_gauss_periods(f, spec.s, spec.N / spec.d));
}

WeightDistribution table_distribution_c2(const CodeSpec& spec, const GaussPeriodSet& periods_N,
                                         const GaussPeriodSet& periods_2N) {
  if (auto why = c2_table_obstacle(spec); !why.empty()) throw ParameterError(why);
  const auto p = static_cast<std::uint32_t>(spec.p);
  require_periods(periods_N, p, spec.N, "order-N periods");
  require_periods(periods_2N, p, 2 * spec.N, "order-2N periods");

  const i64 q = static_cast<i64>(spec.q);
  const i64 R = static_cast<i64>(spec.r - 1);
  const i64 N = static_cast<i64>(spec.N);
  const i64 base = checked_mul(q - 1, R);
  const i64 qN = checked_mul(q, N);
  // Class of alpha^((q+1)/2) modulo 2N: 0 when (q+1)/(2N) is even, N when odd.
  const i64 s = ((spec.q + 1) / (2 * spec.N)) % 2 == 0 ? 0 : N;
  const i64 RR = checked_mul(R, R);
  const i64 twoNN = 2 * N * N;

  Rows rows{{0, 1}};
  for (i64 i = 0; i < N; ++i) {  // b = 0
    rows.emplace_back(weight_from(periods_N.at(i) * (-N * (q - 1)) + base, qN, spec.n, "C2 table, b = 0 row"), R / N);
  }
  for (i64 j = 0; j < 2 * N; ++j) {  // a = 0
    rows.emplace_back(weight_from(periods_2N.at(j) * (-2 * N * (q - 1)) + base, qN, spec.n, "C2 table, a = 0 row"),
                      R / (2 * N));
  }
  const i64 off_class = exact_div(checked_mul(N - 1, RR), twoNN, "C2 off-class frequency");
  for (i64 j = 0; j < 2 * N; ++j) {  // a outside C_0^(N,r)
    rows.emplace_back(weight_from(periods_2N.at(j) * (2 * N) + base, qN, spec.n, "C2 table, off-class row"), off_class);
  }
  const auto eta_s = periods_2N.at(s) * (2 * N);
  rows.emplace_back(weight_from(eta_s + (base - qN * (q - 1)), qN, spec.n, "C2 table, trace-zero row"), (q - 1) * R / N);
  const i64 same_class = checked_mul(R / N, R / (2 * N) - q + 1);
  rows.emplace_back(weight_from(eta_s + (base + qN), qN, spec.n, "C2 table, same-class row", same_class), same_class);
  const i64 in_class = exact_div(RR, twoNN, "C2 in-class frequency");
  for (i64 j = 0; j < 2 * N; ++j) {
    if (j == s) continue;
    rows.emplace_back(weight_from(periods_2N.at(j) * (2 * N) + (base + qN), qN, spec.n, "C2 table, in-class row"),
                      in_class);
  }
  return finish(std::move(rows), spec.r * spec.r);
}

WeightDistribution table_distribution_c2(const Code& code) {
  const auto& spec = code.spec();
  return table_distribution_c2(spec, gauss_periods(code.field(), spec.N), gauss_periods(code.field(), 2 * spec.N));
}

WeightDistribution table_distribution_c2_semiprimitive(const CodeSpec& spec) {
  if (auto why = c2_table_obstacle(spec); !why.empty()) throw ParameterError(why);
  const auto e = semiprimitive_exponent(spec.p, 2 * spec.N);
  if (!e || spec.s % *e != 0) {
    throw ParameterError("semi-primitive tables require q = p^(ef) with p^e = -1 (mod 2N)");
  }
  const i64 f = static_cast<i64>(spec.s / *e);
  const i64 q = static_cast<i64>(spec.q);
  const i64 N = static_cast<i64>(spec.N);
  const i64 R = static_cast<i64>(spec.r - 1);
  const i64 RR = checked_mul(R, R);
  const i64 twoNN = 2 * N * N;
  const i64 pe1 = checked_pow(static_cast<i64>(spec.p), *e) + 1;
  auto div = [](i64 a, i64 b) { return exact_div(a, b, "semi-primitive table"); };

  // Frequencies shared by both tables.
  const i64 f1 = R / N;
  const i64 f2 = div((4 * N - 3) * R, 2 * N);
  const i64 f3 = R / (2 * N);
  const i64 f4 = div(checked_mul(N - 1, RR), twoNN);
  const i64 f5 = div(checked_mul((N - 1) * (2 * N - 1), RR), twoNN);
  const i64 f6 = (q - 1) * R / N;
  const i64 f7 = checked_mul(R / N, R / (2 * N) - q + 1);
  const i64 f8 = div(checked_mul(2 * N - 1, RR), twoNN);

  Rows rows{{0, 1}};
  if (f % 2 == 1 && (pe1 / (2 * N)) % 2 == 1) {
    const i64 T = div((q + 1) * (q - 2), N);
    rows.insert(rows.end(), {{R / N - q + 1, f1},
                             {R / N, f2},
                             {R / N - 2 * q + 2, f3},
                             {T + 2, f4},
                             {T, f5},
                             {T - q + 3, f6},
                             {T + 3, f7},
                             {T + 1, f8}});
  } else {
    const i64 sg = f % 2 == 0 ? 1 : -1;  // (-1)^f
    const i64 T = div(q * q - q - 1 + sg, N);
    rows.insert(rows.end(), {{div((q - 1) * (q + sg * (N - 1)), N), f1},
                             {div((q - 1) * (q - sg), N), f2},
                             {div((q - 1) * (q + sg * (2 * N - 1)), N), f3},
                             {T - 2 * sg, f4},
                             {T, f5},
                             {T - 2 * sg - q + 1, f6},
                             {T - 2 * sg + 1, f7},
                             {T + 1, f8}});
  }
  return finish(std::move(rows), spec.r * spec.r);
}

}  // namespace tracecodes
