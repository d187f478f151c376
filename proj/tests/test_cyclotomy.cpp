#include <algorithm>
#include <set>

#include "doctest.h"
#include "tracecodes/codes.hpp"
#include "tracecodes/cyclotomy.hpp"

using namespace tracecodes;

namespace {

std::vector<i64> sorted_integers(const GaussPeriodSet& s) {
  auto v = s.as_integers();
  REQUIRE(v.has_value());
  std::sort(v->begin(), v->end());
  return *v;
}

}  // namespace

TEST_CASE("cyclotomic classes") {
  const Field f25 = build_field(5, 2);
  CHECK(cyclotomic_class(f25, 1, 0).size() == 24);
  CHECK(cyclotomic_class(f25, 2, 1).size() == 12);

  const Field f27 = build_field(3, 3);
  std::set<std::uint32_t> seen;
  for (i64 i = 0; i < 2; ++i) {
    for (FieldElement x : cyclotomic_class(f27, 2, i)) {
      CHECK(seen.insert(x.code).second);
      CHECK(cyclotomic_class(f27, 2, i).contains(x));
      CHECK_FALSE(cyclotomic_class(f27, 2, 1 - i).contains(x));
    }
  }
  CHECK(seen.size() == 26);
  CHECK(seen.count(0) == 0);
  CHECK_THROWS_AS((void)cyclotomic_class(f27, 4, 0), ParameterError);
}

TEST_CASE("class sizes are (r-1)/N") {
  for (auto [p, n] : {std::pair<u64, unsigned>{2, 6}, {3, 4}, {7, 2}}) {
    const Field f = build_field(p, n);
    for (u64 N : divisors(f.group_order())) {
      for (i64 i = 0; i < static_cast<i64>(N); ++i) {
        const auto c = cyclotomic_class(f, N, i);
        CHECK(c.size() == f.group_order() / N);
        CHECK(static_cast<u64>(std::distance(c.begin(), c.end())) == c.size());
      }
    }
  }
}

TEST_CASE("published periods") {
  const Field f25 = build_field(5, 2);
  CHECK(gauss_period(f25, 2, 0) == CyclotomicInteger::from_integer(5, -3));
  CHECK(gauss_period(f25, 2, 1) == CyclotomicInteger::from_integer(5, 2));
  CHECK(sorted_integers(gauss_periods(f25, 3)) == std::vector<i64>{-2, -2, 3});
  CHECK(*gauss_periods(f25, 3).as_integers() == std::vector<i64>{3, -2, -2});

  CHECK(sorted_integers(gauss_periods(build_field(7, 3), 3)) == std::vector<i64>{-12, 2, 9});
  CHECK(*gauss_periods(build_field(2, 6), 7).as_integers() == std::vector<i64>{5, -3, -3, 1, -3, 1, 1});

  const auto z = gauss_period(build_field(3, 3), 2, 0).embed();
  const auto expected = SurdValue(-1, -3, 2, -3).embed();
  CHECK(std::abs(z - expected) < 1e-9);

  // Order-4 periods of GF(5^4): {eta_1, eta_3} = {16, -4}, not {1, 11}.
  CHECK(*gauss_periods(build_field(5, 4), 4).as_integers() == std::vector<i64>{1, -4, -14, 16});
}

TEST_CASE("single period and kernel agree") {
  const Field f = build_field(3, 4);
  const auto all = gauss_periods(f, 10);
  for (i64 i = 0; i < 10; ++i) CHECK(gauss_period(f, 10, i) == all.at(i));
  CHECK(all.at(-1) == all.at(9));
  CHECK(gauss_period(f, 1, 0) == CyclotomicInteger::from_integer(3, -1));
  CHECK_THROWS_AS((void)gauss_periods(f, 7), ParameterError);
}

TEST_CASE("period sums, refinement and the magnitude bound for every N, r <= 2^12") {
  int fields = 0;
  for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 31u, 61u, 4093u}) {
    u64 r = p;
    for (unsigned n = 1; r <= 4096; ++n, r *= p) {
      const Field f = build_field(p, n);
      ++fields;
      for (u64 N : divisors(r - 1)) {
        CAPTURE(r);
        CAPTURE(N);
        const auto eta = gauss_periods(f, N);
        CHECK(eta.sum() == CyclotomicInteger::from_integer(eta.p, -1));
        CHECK(std::abs(eta.sum().embed() + 1.0) < 1e-9);
        CHECK(check_period_bound(eta));
        if ((r - 1) % (2 * N) == 0) {
          const auto fine = gauss_periods(f, 2 * N);
          for (i64 i = 0; i < static_cast<i64>(N); ++i) CHECK(eta.at(i) == fine.at(i) + fine.at(i + static_cast<i64>(N)));
        }
      }
    }
  }
  CHECK(fields > 20);
}

TEST_CASE("coset decomposition of GF(q)^* C_0") {
  for (auto [p, s, m, N] : {std::tuple<u64, unsigned, unsigned, u64>{5, 1, 4, 4}, {3, 2, 2, 4}, {2, 2, 3, 9},
                            {7, 1, 2, 6}, {11, 1, 2, 5}, {3, 1, 4, 10}, {2, 3, 2, 7}}) {
    const auto spec = CodeSpec::make(Variant::C1, p, s, m, N);
    const Field f = build_field(p, s * m);
    // HK with H = GF(q)^*, K = C_0^(N,r)
    std::set<std::uint32_t> hk;
    const auto beta = f.subfield_generator(s);
    FieldElement h = f.one();
    for (u64 a = 0; a + 1 < spec.q; ++a, h = f.mul(h, beta)) {
      for (FieldElement k : cyclotomic_class(f, N, 0)) hk.insert(f.mul(h, k).code);
    }
    const u64 L = N / spec.d;
    std::set<std::uint32_t> classes;
    for (u64 i = 0; i < L; ++i) {
      for (FieldElement x : cyclotomic_class(f, N, static_cast<i64>(spec.subfield_step() * i % N))) classes.insert(x.code);
    }
    CHECK(hk == classes);
    CHECK(hk.size() / cyclotomic_class(f, N, 0).size() == L);
  }
}

TEST_CASE("subfield periods use the subfield generator") {
  const Field f = build_field(3, 4);
  const auto sub = subfield_gauss_periods(f, 2, 4);
  const auto direct = gauss_periods(build_field(3, 2), 4);
  // GF(9) inside GF(81) is generated by beta = alpha^10; classes over the
  // stand-alone GF(9) may be permuted, the multiset is not.
  auto a = sub.as_integers();
  auto b = direct.as_integers();
  REQUIRE(a);
  REQUIRE(b);
  std::sort(a->begin(), a->end());
  std::sort(b->begin(), b->end());
  CHECK(*a == *b);
  CHECK(sub.sum() == CyclotomicInteger::from_integer(3, -1));
}
