#include <set>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "doctest.h"
#include "tracecodes/codes.hpp"
#include "tracecodes/kernels.hpp"

using namespace tracecodes;
namespace k = tracecodes::kernels;

namespace {

struct Case {
  u64 p;
  unsigned n;
  u64 N;
};

const Case kCases[] = {{2, 6, 7}, {2, 6, 3}, {3, 4, 8}, {5, 2, 3}, {5, 4, 4}, {7, 3, 3}, {3, 6, 14}, {2, 8, 5}};

void with_threads(int n, auto&& fn) {
#ifdef _OPENMP
  const int saved = omp_get_max_threads();
  omp_set_num_threads(n);
  fn();
  omp_set_num_threads(saved);
#else
  (void)n;
  fn();
#endif
}

}  // namespace

TEST_CASE("prime trace table follows Field::trace") {
  const Field f = build_field(3, 5);
  const auto tr = k::prime_trace_table(f);
  REQUIRE(tr.size() == f.group_order());
  for (u64 e = 0; e < f.group_order(); ++e) CHECK(tr[e] == f.trace(f.exp(static_cast<i64>(e)), 1).code);
}

TEST_CASE("compact subfield codes are a linear bijection") {
  const Field f = build_field(2, 6);
  for (unsigned s : {1u, 2u, 3u}) {
    const auto tr = k::subfield_trace_table(f, s);
    const u64 q = u64{1} << s;
    REQUIRE(tr.q == q);
    std::set<std::uint32_t> codes;
    std::vector<FieldElement> sub{f.zero()};
    for (u64 c = 1; c < f.size(); ++c) {
      if (f.in_subfield({static_cast<std::uint32_t>(c)}, s)) sub.push_back({static_cast<std::uint32_t>(c)});
    }
    REQUIRE(sub.size() == q);
    for (auto z : sub) codes.insert(tr.code_of(f, z));
    CHECK(codes.size() == q);
    CHECK(tr.code_of(f, f.zero()) == 0);
    for (auto a : sub) {
      CHECK(tr.negate[tr.code_of(f, a)] == tr.code_of(f, f.neg(a)));
      for (auto b : sub) CHECK((tr.code_of(f, f.add(a, b)) ^ tr.code_of(f, a)) == tr.code_of(f, b));  // p = 2: digits add as xor
    }
    for (u64 e = 0; e < f.group_order(); ++e) {
      CHECK(tr.by_exponent[e] == tr.code_of(f, f.trace(f.exp(static_cast<i64>(e)), s)));
    }
  }
}

TEST_CASE("class trace tallies: parallel matches serial") {
  for (const auto& c : kCases) {
    CAPTURE(c.p);
    CAPTURE(c.n);
    CAPTURE(c.N);
    const Field f = build_field(c.p, c.n);
    const auto serial = k::class_trace_tally_serial(f, c.N);
    with_threads(1, [&] { CHECK(k::class_trace_tally(f, c.N) == serial); });
    with_threads(4, [&] { CHECK(k::class_trace_tally(f, c.N) == serial); });
    i64 total = 0;
    for (i64 t : serial) total += t;
    CHECK(static_cast<u64>(total) == f.group_order());
  }
}

TEST_CASE("subfield class tallies: parallel matches serial") {
  const Field f = build_field(3, 4);
  const auto ptr = k::prime_trace_table(f);
  for (auto [s, L] : {std::pair<unsigned, u64>{2, 4}, {2, 8}, {1, 2}, {4, 5}}) {
    CHECK(k::subfield_class_trace_tally(f, s, L, ptr) == k::subfield_class_trace_tally_serial(f, s, L));
  }
}

TEST_CASE("cross sums: parallel column equals serial and the orbit shortcut holds") {
  for (auto [p, s, m, N] : {std::tuple<u64, unsigned, unsigned, u64>{5, 1, 4, 4}, {3, 2, 2, 4}, {2, 2, 3, 9},
                            {7, 1, 2, 6}, {2, 1, 6, 21}, {3, 1, 4, 10},
                            {13, 1, 1, 4}, {11, 1, 2, 5}}) {
    CAPTURE(p);
    CAPTURE(N);
    const auto spec = CodeSpec::make(Variant::C1, p, s, m, N);
    const Field f = build_field(p, s * m);
    const u64 L = N / spec.d;
    const u64 shift = spec.subfield_step() % N;
    const auto tN = k::class_trace_tally(f, N);
    const auto tL = k::subfield_class_trace_tally_serial(f, s, L);
    const auto serial = k::cross_sums_serial(tN, N, tL, L, shift, static_cast<std::uint32_t>(p));
    REQUIRE(serial.size() == N * L);
    const auto par = k::cross_sums(tN, N, tL, L, shift, static_cast<std::uint32_t>(p));
    const std::span<const i64> view(par);
    for (u64 j = 0; j < N; ++j) {
      CHECK(CyclotomicInteger::from_tally(static_cast<std::uint32_t>(p), view.subspan(j * p, p)) == serial[j * L]);
      for (u64 kk = 0; kk < L; ++kk) CHECK(serial[j * L + kk] == serial[((j + N * L - shift * kk % N) % N) * L]);
    }
  }
}

TEST_CASE("pair histograms: orbit, full and full-b enumeration agree") {
  for (auto [p, s, m, N] : {std::tuple<u64, unsigned, unsigned, u64>{3, 1, 3, 2}, {5, 1, 2, 3}, {2, 2, 3, 3},
                            {2, 1, 6, 7}, {3, 2, 2, 2}, {7, 1, 2, 4}}) {
    CAPTURE(p);
    CAPTURE(N);
    const auto c1 = CodeSpec::make(Variant::C1, p, s, m, N);
    const Field f = build_field(p, s * m);
    const auto tr = k::subfield_trace_table(f, s);
    const auto orbit = k::c1_pair_histogram(tr, N, c1.n, k::Enumeration::Orbit);
    const auto full = k::c1_pair_histogram(tr, N, c1.n, k::Enumeration::Full);
    const auto full_b = k::c1_pair_histogram(tr, N, c1.n, k::Enumeration::FullB);
    CHECK(orbit == full);
    const u64 fibre = c1.r / c1.q;
    for (u64 w = 0; w <= c1.n; ++w) CHECK(full_b[w] == full[w] * fibre);
    with_threads(3, [&] { CHECK(k::c1_pair_histogram(tr, N, c1.n, k::Enumeration::Orbit) == orbit); });

    if (c1.n % 2 == 0) {
      const auto c2 = CodeSpec::make(Variant::C2, p, s, m, N);
      const auto o2 = k::c2_pair_histogram(tr, N, c2.n, k::Enumeration::Orbit);
      CHECK(o2 == k::c2_pair_histogram(tr, N, c2.n, k::Enumeration::Full));
      with_threads(2, [&] { CHECK(k::c2_pair_histogram(tr, N, c2.n, k::Enumeration::Orbit) == o2); });
      CHECK_THROWS_AS((void)k::c2_pair_histogram(tr, N, c2.n, k::Enumeration::FullB), ParameterError);
    }
  }
}

TEST_CASE("kernel histograms match the Field-arithmetic reference oracle") {
  for (auto [v, p, s, m, N] : {std::tuple<Variant, u64, unsigned, unsigned, u64>{Variant::C1, 3, 1, 3, 2},
                               {Variant::C1, 2, 2, 3, 3}, {Variant::C2, 3, 1, 2, 2}, {Variant::C2, 5, 1, 2, 3},
                               {Variant::C2, 3, 2, 2, 4}}) {
    const Code code(CodeSpec::make(v, p, s, m, N));
    OracleOptions opts;
    opts.enumeration = k::Enumeration::Full;
    CHECK(oracle_distribution(code, opts).pairs == oracle_distribution_reference(code));
  }
}
