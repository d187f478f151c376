// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// the allowed budget. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tracecodes/cli.hpp"
#include "tracecodes/codes.hpp"
#include "tracecodes/cyclotomy.hpp"

using namespace tracecodes;

namespace {

// Collects failures for one criterion; keeps the first few for the report.
struct Check {
  u64 passed = 0;
  u64 failed = 0;
  std::vector<std::string> first_failures;

  void expect(bool ok, const std::string& what) {
    if (ok) {
      ++passed;
      return;
    }
    ++failed;
    if (first_failures.size() < 5) first_failures.push_back(what);
  }
};

std::vector<i64> sorted(std::vector<i64> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<i64> sorted_integers(const GaussPeriodSet& s) {
  const auto v = s.as_integers();
  return v ? sorted(*v) : std::vector<i64>{};
}

// Period sets of one field by (subfield degree, order).
class Periods {
 public:
  explicit Periods(const Field& f) : f_(f) {}
  const GaussPeriodSet& get(unsigned s, u64 N) {
    auto it = sets_.find({s, N});
    if (it == sets_.end()) {
      auto set = s == f_.degree() ? gauss_periods(f_, N) : subfield_gauss_periods(f_, s, N);
      it = sets_.emplace(std::pair{s, N}, std::move(set)).first;
    }
    return it->second;
  }
  const GaussPeriodSet& full(u64 N) { return get(f_.degree(), N); }

 private:
  const Field& f_;
  std::map<std::pair<unsigned, u64>, GaussPeriodSet> sets_;
};

// ---------------------------------------------------------------------------

void published_periods(Check& c) {
  const auto e25 = gauss_periods(build_field(5, 2), 2);
  c.expect(*e25.as_integers() == std::vector<i64>{-3, 2}, "eta(2,25) != {-3, 2}");

  const auto e27 = gauss_periods(build_field(3, 3), 2);
  const std::complex<double> w(-0.5, 1.5 * std::sqrt(3.0));
  std::vector<std::complex<double>> z{e27.values[0].embed(), e27.values[1].embed()};
  const bool ordered = std::abs(z[0] - std::conj(w)) < 1e-9 && std::abs(z[1] - w) < 1e-9;
  const bool swapped = std::abs(z[0] - w) < 1e-9 && std::abs(z[1] - std::conj(w)) < 1e-9;
  c.expect(ordered || swapped, "eta(2,27) does not embed to (-1 +- 3 sqrt(-3))/2");

  c.expect(sorted_integers(gauss_periods(build_field(7, 3), 3)) == std::vector<i64>{-12, 2, 9},
           "eta(3,343) != {2, -12, 9}");
  c.expect(*gauss_periods(build_field(5, 2), 3).as_integers() == std::vector<i64>{3, -2, -2},
           "eta(3,25) != {3, -2, -2}");
  c.expect(sorted_integers(gauss_periods(build_field(2, 6), 7)) == std::vector<i64>{-3, -3, -3, 1, 1, 1, 5},
           "eta(7,64) != {5, -3 x3, 1 x3}");
}

struct Printed {
  Variant variant;
  u64 p;
  unsigned s, m;
  u64 N;
  const char* enumerator;
};

const Printed kPrinted[] = {
    {Variant::C1, 3, 1, 3, 2, "1+26x^7+26x^9+26x^10+2x^13"},
    {Variant::C1, 5, 1, 2, 2, "1+12x^8+48x^9+48x^10+16x^12"},
    {Variant::C1, 7, 1, 3, 3, "1+114x^90+798x^96+684x^98+684x^99+114x^108+6x^114"},
    {Variant::C1, 5, 1, 2, 3, "1+8x^4+64x^6+32x^7+20x^8"},
    {Variant::C1, 2, 1, 6, 7, "1+9x^2+27x^3+27x^4+27x^5+27x^6+9x^7+x^9"},
    {Variant::C2, 3, 1, 2, 2, "1+12x^2+8x^3+6x^4"},
    {Variant::C2, 7, 1, 2, 2, "1+12x^12+144x^16+24x^18+864x^20+864x^21+288x^22+144x^23+60x^24"},
    {Variant::C2, 5, 1, 2, 3, "1+8x^4+64x^6+32x^7+20x^8"},
};

WeightDistribution table_of(const Code& code) {
  return code.spec().variant == Variant::C1 ? table_distribution_c1(code) : table_distribution_c2(code);
}

void printed_enumerators(Check& c) {
  for (const auto& e : kPrinted) {
    const Code code(CodeSpec::make(e.variant, e.p, e.s, e.m, e.N));
    const auto oracle = oracle_distribution(code);
    const auto table = table_of(code).to_codeword_counts(oracle.dedupe_factor);
    const std::string name = code.spec().describe();
    c.expect(enumerator_string(table) == e.enumerator, name + ": table gives " + enumerator_string(table));
    c.expect(enumerator_string(oracle.codewords) == e.enumerator,
             name + ": oracle gives " + enumerator_string(oracle.codewords));
  }
}

void adjudication(Check& c) {
  const Code code(CodeSpec::make(Variant::C1, 5, 1, 4, 4));
  const auto oracle = oracle_distribution(code);
  const auto& words = oracle.codewords;

  // 624x^112 as printed, or 624x^122 as the table with exact periods gives.
  c.expect(words.count(122) == 624 && words.count(112) != 624, "oracle does not carry 624x^122");

  const auto brute = gauss_periods(code.field(), 4);
  const std::set<i64> pair{*brute.values[1].as_integer(), *brute.values[3].as_integer()};
  c.expect(pair == std::set<i64>{16, -4}, "{eta_1, eta_3} is not {16, -4}");

  const auto table = table_distribution_c1(code);
  c.expect(table == oracle.pairs, "table differs from oracle");

  // Closed form: eta_0, eta_2 fixed; the pair {eta_1, eta_3} placed in slots 1, 3.
  const auto closed = closed_form_small_N(5, 4, 4);
  c.expect(closed.has_value() && closed_form_matches(*closed, brute), "closed form differs from brute force");
  if (closed) {
    GaussPeriodSet eta = brute;
    eta.provenance = "closed";
    std::vector<u64> open{1, 3};
    for (const auto& v : closed->values) {
      const u64 i = v.index ? *v.index : open.front();
      if (!v.index) open.erase(open.begin());
      eta.values[i] = surd_to_cyclotomic(v.value, 5);
    }
    const auto via_closed = table_distribution_c1(code.spec(), gauss_periods(code.field(), code.spec().d), eta,
                                                  subfield_gauss_periods(code.field(), 1, 1));
    c.expect(via_closed == oracle.pairs, "closed-form table differs from oracle");
  }

  // The discrepancy is carried in the report's errata.
  std::ostringstream out, err;
  const int rc = cli::run({"code", "--variant", "c1", "--p", "5", "--m", "4", "--N", "4", "--output", "json"}, out, err);
  const auto rep = nlohmann::json::parse(out.str());
  bool recorded = false;
  for (const auto& e : rep["errata"]) recorded |= e.get<std::string>().find("624x^122") != std::string::npos;
  c.expect(rc == cli::kOk && recorded, "erratum missing from the code report");
}

// ---------------------------------------------------------------------------
// Sweep

struct SweepTotals {
  u64 c1_specs = 0;
  u64 c2_specs = 0;
  u64 c1_pairs = 0;
  u64 c2_pairs = 0;
  u64 invariants = 0;
};

void coset_decomposition(Check& c, const Code& code) {
  const auto& spec = code.spec();
  const auto& f = code.field();
  std::vector<bool> hk(f.size()), classes(f.size());
  const auto beta = f.subfield_generator(spec.s);
  FieldElement h = f.one();
  const auto k0 = cyclotomic_class(f, spec.N, 0);
  for (u64 a = 0; a + 1 < spec.q; ++a, h = f.mul(h, beta)) {
    for (FieldElement k : k0) hk[f.mul(h, k).code] = true;
  }
  const u64 L = spec.N / spec.d;
  for (u64 i = 0; i < L; ++i) {
    for (FieldElement x : cyclotomic_class(f, spec.N, static_cast<i64>(spec.subfield_step() * i % spec.N))) {
      classes[x.code] = true;
    }
  }
  c.expect(hk == classes, spec.describe() + ": coset decomposition");
}

void trace_fibres(Check& c, const Field& f, unsigned s) {
  const auto tr = kernels::subfield_trace_table(f, s);
  std::vector<u64> count(tr.q, 0);
  ++count[0];  // Tr(0)
  for (auto code : tr.by_exponent) ++count[code];
  const u64 fibre = f.size() / tr.q;
  c.expect(std::all_of(count.begin(), count.end(), [&](u64 x) { return x == fibre; }),
           "trace fibres over GF(" + std::to_string(f.size()) + ")/GF(" + std::to_string(tr.q) + ")");
}

void period_invariants(Check& c, Periods& periods, const Field& f, u64 N) {
  const auto& eta = periods.full(N);
  const std::string name = "GF(" + std::to_string(f.size()) + "), N=" + std::to_string(N);
  c.expect(eta.sum() == CyclotomicInteger::from_integer(eta.p, -1), name + ": period sum");
  c.expect(check_period_bound(eta), name + ": magnitude bound");
  if (f.group_order() % (2 * N) == 0) {
    const auto& fine = periods.full(2 * N);
    bool ok = true;
    for (i64 i = 0; i < static_cast<i64>(N); ++i) ok &= eta.at(i) == fine.at(i) + fine.at(i + static_cast<i64>(N));
    c.expect(ok, name + ": refinement");
  }
}

void code_invariants(Check& c, const CodeSpec& spec, const OracleResult& res) {
  const std::string name = spec.describe();
  c.expect(res.pairs.weight_sum() * spec.q == spec.n * (spec.q - 1) * spec.pair_total(), name + ": mean weight");
  const auto bound = min_weight_bound(spec);
  if (bound) {
    c.expect(bound->at_most(static_cast<i64>(res.codewords.min_weight()), 1), name + ": minimum weight below bound");
  }
}

void sweep(Check& equivalence, Check& invariants, SweepTotals& totals) {
  constexpr u64 kC1Limit = 1'000'000;  // q r
  constexpr u64 kC2Limit = 10'000'000;  // r^2
  OracleOptions opts;
  opts.force = true;
  opts.hash_dedupe = false;

  for (u64 p = 2; p * p <= kC1Limit; ++p) {
    if (!is_prime(p)) continue;
    u64 r = p;
    for (unsigned sm = 1; p * r <= kC1Limit; ++sm, r *= p) {
      const Field f = build_field(p, sm);
      Periods periods(f);
      std::set<u64> orders;
      for (unsigned s = 1; s <= sm; ++s) {
        if (sm % s != 0) continue;
        const unsigned m = sm / s;
        const u64 q = static_cast<u64>(checked_pow(static_cast<i64>(p), s));
        trace_fibres(invariants, f, s);
        for (u64 N : divisors(r - 1)) {
          if (N < 2 || (r - 1) / N < 2) continue;
          const bool c1 = q * r <= kC1Limit;
          const bool c2 = r * r <= kC2Limit && m == 2 && ((r - 1) / N) % 2 == 0 && (q + 1) % (2 * N) == 0;
          if (!c1 && !c2) continue;
          orders.insert(N);
          for (Variant v : {Variant::C1, Variant::C2}) {
            if ((v == Variant::C1 && !c1) || (v == Variant::C2 && !c2)) continue;
            const auto spec = CodeSpec::make(v, p, s, m, N);
            const Code code(spec, f);
            const auto res = oracle_distribution(code, opts);
            WeightDistribution table;
            if (v == Variant::C1) {
              table = table_distribution_c1(spec, periods.full(spec.d), periods.full(N), periods.get(s, N / spec.d));
              ++totals.c1_specs;
              totals.c1_pairs += table.total();
              coset_decomposition(invariants, code);
            } else {
              table = table_distribution_c2(spec, periods.full(N), periods.full(2 * N));
              ++totals.c2_specs;
              totals.c2_pairs += table.total();
            }
            equivalence.expect(table == res.pairs, spec.describe() + ": table differs from oracle");
            equivalence.expect(table.total() == spec.pair_total(), spec.describe() + ": frequency sum");
            code_invariants(invariants, spec, res);
          }
        }
      }
      for (u64 N : orders) period_invariants(invariants, periods, f, N);
    }
  }
  totals.invariants = invariants.passed + invariants.failed;
}

void closed_vs_brute(Check& c, u64& checked) {
  for (u64 p = 2; p <= 4096; ++p) {
    if (!is_prime(p)) continue;
    u64 r = p;
    for (unsigned sm = 1; r <= 4096; ++sm, r *= p) {
      const Field f = build_field(p, sm);
      for (u64 N : divisors(r - 1)) {
        if (N < 2) continue;
        for (const auto& closed : applicable_closed_forms(p, sm, N)) {
          ++checked;
          c.expect(closed_form_matches(closed, gauss_periods(f, N)),
                   closed.family + " p=" + std::to_string(p) + " sm=" + std::to_string(sm) + " N=" + std::to_string(N));
        }
      }
    }
  }
}

void bound_witness(Check& c) {
  const auto spec = CodeSpec::make(Variant::C1, 5, 1, 2, 2);
  const auto bound = min_weight_bound(spec);
  c.expect(bound.has_value() && *bound == SurdValue::integer(8), "bound is not 8");
  const auto res = oracle_distribution(Code(spec));
  c.expect(res.codewords.min_weight() == 8, "minimum weight is not 8");
}

// ---------------------------------------------------------------------------

bool report(int id, const std::string& title, double limit_s, const std::function<std::string(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  try {
    detail = body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool ok = c.failed == 0 && in_time;
  std::printf("%s  %d  %-44s %8.2f s (limit %g s)  checks %llu/%llu%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(),
              secs, limit_s, static_cast<unsigned long long>(c.passed),
              static_cast<unsigned long long>(c.passed + c.failed), detail.empty() ? "" : "  ", detail.c_str());
  for (const auto& f : c.first_failures) std::printf("        %s\n", f.c_str());
  if (!in_time) std::printf("        over the time limit\n");
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "published Gauss periods", 1, [](Check& c) {
    published_periods(c);
    return std::string();
  });
  all &= report(2, "printed enumerators, table and oracle", 5, [](Check& c) {
    printed_enumerators(c);
    return std::string();
  });
  all &= report(3, "GF(5^4) N=4 adjudication", 5, [](Check& c) {
    adjudication(c);
    return std::string("624x^122, {eta_1, eta_3} = {16, -4}");
  });

  // Criteria 4 and 5 share one pass over the sweep; the timing is reported
  // on criterion 4.
  Check invariants;
  SweepTotals totals;
  all &= report(4, "sweep: table = oracle", 600, [&](Check& c) {
    sweep(c, invariants, totals);
    return "c1 " + std::to_string(totals.c1_specs) + " specs / " + std::to_string(totals.c1_pairs) + " pairs, c2 " +
           std::to_string(totals.c2_specs) + " specs / " + std::to_string(totals.c2_pairs) + " pairs";
  });
  all &= report(5, "sweep invariants", 600, [&](Check& c) {
    c = invariants;
    return std::string("checked during the sweep above");
  });

  u64 closed_checked = 0;
  all &= report(6, "closed forms vs brute force, r <= 2^12", 600, [&](Check& c) {
    closed_vs_brute(c, closed_checked);
    return std::to_string(closed_checked) + " applicable sets";
  });
  all &= report(7, "bound attained on [12,3,8]_5", 5, [](Check& c) {
    bound_witness(c);
    return std::string("bound 8 = minimum weight 8");
  });
  std::printf("%s\n", all ? "acceptance: all criteria pass" : "acceptance: FAILED");
  return all ? 0 : 1;
}
