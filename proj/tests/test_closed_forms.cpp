#include <algorithm>

#include "doctest.h"
#include "tracecodes/cyclotomy.hpp"

using namespace tracecodes;

namespace {

std::vector<i64> integers(const std::vector<ClosedFormValue>& vals) {
  std::vector<i64> out;
  for (const auto& v : vals) {
    REQUIRE(v.value.as_integer());
    out.push_back(*v.value.as_integer());
  }
  return out;
}

}  // namespace

TEST_CASE("order 2") {
  const auto c = closed_form_small_N(5, 2, 2);
  REQUIRE(c);
  CHECK_FALSE(c->has_unordered());
  const auto by_index = c->by_index();
  REQUIRE(by_index);
  CHECK((*by_index)[0] == SurdValue::integer(-3));
  CHECK((*by_index)[1] == SurdValue::integer(2));

  const auto c27 = closed_form_small_N(3, 3, 2);
  REQUIRE(c27);
  CHECK(c27->by_index()->at(0) == SurdValue(-1, -3, 2, -3));
  CHECK(closed_form_matches(*c27, gauss_periods(build_field(3, 3), 2)));
  CHECK(closed_form_indices_match(*c27, gauss_periods(build_field(3, 3), 2)));

  CHECK_FALSE(closed_form_small_N(2, 4, 2));
}

TEST_CASE("order 3") {
  const auto c = closed_form_small_N(7, 3, 3);
  REQUIRE(c);
  CHECK(c->has_unordered());
  REQUIRE(c->values.size() == 3);
  const auto* eta0 = &c->values[0];
  for (const auto& v : c->values) {
    if (v.index && *v.index == 0) eta0 = &v;
  }
  CHECK(eta0->value == SurdValue::integer(2));
  auto ints = integers(c->values);
  std::sort(ints.begin(), ints.end());
  CHECK(ints == std::vector<i64>{-12, 2, 9});
  CHECK(closed_form_matches(*c, gauss_periods(build_field(7, 3), 3)));
  CHECK_FALSE(closed_form_small_N(5, 3, 3));  // p = 2 (mod 3)
  CHECK_FALSE(closed_form_small_N(7, 2, 3));  // 3 does not divide sm
}

TEST_CASE("order 4 over GF(5^4) gives {eta_1, eta_3} = {16, -4}") {
  const auto c = closed_form_small_N(5, 4, 4);
  REQUIRE(c);
  CHECK(c->has_unordered());
  auto ints = integers(c->values);
  std::sort(ints.begin(), ints.end());
  CHECK(ints == std::vector<i64>{-14, -4, 1, 16});
  for (const auto& v : c->values) {
    if (v.index && *v.index == 0) CHECK(v.value == SurdValue::integer(1));
    if (v.index && *v.index == 2) CHECK(v.value == SurdValue::integer(-14));
  }
  CHECK(closed_form_matches(*c, gauss_periods(build_field(5, 4), 4)));
}

TEST_CASE("two-square and cubic solvers") {
  CHECK(*solve_c1_d1(7, 3) == std::pair<i64, i64>{1, 1});
  CHECK(*solve_c1_d1(13, 3) == std::pair<i64, i64>{-5, 1});  // 52 = 25 + 27, -5 = 1 (mod 3)
  CHECK(*solve_c1_d1(7, 6) == std::pair<i64, i64>{13, 1});   // 4*49 = 196 = 169 + 27
  CHECK_FALSE(solve_c1_d1(5, 3));
  CHECK_FALSE(solve_c1_d1(7, 2));

  CHECK(*solve_s1_t1(5, 4) == std::pair<i64, i64>{-3, 2});
  CHECK(*solve_s1_t1(5, 2) == std::pair<i64, i64>{1, 1});
  CHECK(*solve_s1_t1(13, 2) == std::pair<i64, i64>{-3, 1});
  CHECK_FALSE(solve_s1_t1(7, 2));
}

TEST_CASE("semi-primitive case") {
  CHECK(semiprimitive_exponent(5, 3) == 1u);
  CHECK(semiprimitive_exponent(2, 3) == 1u);
  CHECK(semiprimitive_exponent(2, 5) == 2u);
  CHECK_FALSE(semiprimitive_exponent(2, 7));  // <2> mod 7 has odd order
  const auto c = closed_form_semiprimitive(5, 1, 1, 3);
  REQUIRE(c);
  CHECK(integers(c->values) == std::vector<i64>{3, -2, -2});
  const auto c9 = closed_form_semiprimitive(3, 1, 1, 2);
  REQUIRE(c9);
  CHECK(integers(c9->values) == std::vector<i64>{1, -2});
  CHECK(*gauss_periods(build_field(3, 2), 2).as_integers() == std::vector<i64>{1, -2});
  CHECK_FALSE(closed_form_semiprimitive(5, 2, 1, 3));  // e is not least
  for (const auto& cf : {*c, *c9}) {
    SurdValue sum = SurdValue::integer(0);
    for (const auto& v : cf.values) sum = sum + v.value;
    CHECK(sum == SurdValue::integer(-1));
  }
}

TEST_CASE("class numbers by reduced forms") {
  CHECK(class_number(3) == 1);
  CHECK(class_number(7) == 1);
  CHECK(class_number(11) == 1);
  CHECK(class_number(19) == 1);
  CHECK(class_number(23) == 3);
  CHECK(class_number(31) == 3);
  CHECK(class_number(47) == 5);
  CHECK(class_number(71) == 7);
  CHECK(class_number(163) == 1);
  CHECK_THROWS_AS((void)class_number(5), ParameterError);
  CHECK_THROWS_AS((void)class_number(15), ParameterError);
}

TEST_CASE("index-2 case over GF(2^6)") {
  const auto c = closed_form_index2(2, 7, 2);
  REQUIRE(c);
  const auto by_index = c->by_index();
  REQUIRE(by_index);
  std::vector<i64> ints;
  for (const auto& v : *by_index) ints.push_back(*v.as_integer());
  CHECK(ints == std::vector<i64>{5, -3, -3, 1, -3, 1, 1});
  const auto brute = gauss_periods(build_field(2, 6), 7);
  CHECK(closed_form_matches(*c, brute));
  CHECK(closed_form_indices_match(*c, brute));
  CHECK_FALSE(closed_form_index2(2, 5, 1));  // N = 1 (mod 4)
  CHECK_FALSE(closed_form_index2(3, 7, 1));  // 3 generates (Z/7)^*
}

TEST_CASE("index-2 attribution depends on the primitive element, the multiset does not") {
  const auto c = closed_form_index2(5, 11, 1);
  REQUIRE(c);
  const auto brute = gauss_periods(build_field(5, 5), 11);
  CHECK(closed_form_matches(*c, brute));
  CHECK_FALSE(closed_form_indices_match(*c, brute));
}

TEST_CASE("closed forms agree with brute force on every applicable set with r <= 2^10") {
  int checked = 0;
  for (u64 p = 2; p < 1024; ++p) {
    if (!is_prime(p)) continue;
    u64 r = p;
    for (unsigned sm = 1; r <= 1024; ++sm, r *= p) {
      const Field f = build_field(p, sm);
      for (u64 N : divisors(r - 1)) {
        if (N < 2) continue;
        for (const auto& c : applicable_closed_forms(p, sm, N)) {
          CAPTURE(p);
          CAPTURE(sm);
          CAPTURE(N);
          CAPTURE(c.family);
          CHECK(closed_form_matches(c, gauss_periods(f, N)));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("closed forms map into Z[zeta_p]") {
  const auto c = *closed_form_small_N(3, 3, 2);
  const auto set = to_period_set(c);
  CHECK(set.sum() == CyclotomicInteger::from_integer(3, -1));
  CHECK(set.values == gauss_periods(build_field(3, 3), 2).values);
}
