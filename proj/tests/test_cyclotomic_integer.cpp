#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tracecodes/cyclotomic_integer.hpp"
#include "tracecodes/cyclotomy.hpp"
#include "tracecodes/surd.hpp"

using namespace tracecodes;

namespace {

CyclotomicInteger gauss_sum(std::uint32_t p) {
  CyclotomicInteger g(p);
  for (std::uint32_t t = 1; t < p; ++t) g += CyclotomicInteger::zeta_power(p, t) * legendre(t, p);
  return g;
}

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("powers of zeta") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    CAPTURE(p);
    CHECK(CyclotomicInteger::zeta_power(p, p) == CyclotomicInteger::from_integer(p, 1));
    CyclotomicInteger sum(p);
    for (std::uint32_t k = 0; k < p; ++k) sum += CyclotomicInteger::zeta_power(p, k);
    CHECK(sum.is_zero());
    const auto z = CyclotomicInteger::zeta_power(p, 1);
    CHECK(z * CyclotomicInteger::zeta_power(p, p - 1) == CyclotomicInteger::from_integer(p, 1));
  }
}

TEST_CASE("rational integers are detected exactly") {
  const auto c = CyclotomicInteger::from_integer(7, -12);
  REQUIRE(c.as_integer());
  CHECK(*c.as_integer() == -12);
  CHECK_FALSE(CyclotomicInteger::zeta_power(7, 3).as_integer());
  // -1 written as the sum of the nontrivial powers
  CyclotomicInteger minus_one(7);
  for (std::uint32_t k = 1; k < 7; ++k) minus_one += CyclotomicInteger::zeta_power(7, k);
  REQUIRE(minus_one.as_integer());
  CHECK(*minus_one.as_integer() == -1);
}

TEST_CASE("tallies round-trip") {
  const std::vector<i64> tally{4, 1, 0, 3, 2};
  const auto x = CyclotomicInteger::from_tally(5, tally);
  const auto back = x.to_tally();
  // Tallies are defined up to adding a constant to every entry.
  REQUIRE(back.size() == 5);
  for (std::size_t i = 1; i < 5; ++i) CHECK(back[i] - back[0] == tally[i] - tally[0]);
  CHECK(CyclotomicInteger::from_tally(5, back) == x);
}

TEST_CASE("ring arithmetic") {
  const std::uint32_t p = 5;
  const auto one = CyclotomicInteger::from_integer(p, 1);
  const auto z = CyclotomicInteger::zeta_power(p, 1);
  CHECK((one + z) * (one - z) == one - z * z);
  CHECK((z * 3).divided_exactly(3) == z);
  CHECK_THROWS_AS((void)(z * 3 + one).divided_exactly(3), IntegralityError);
  CHECK_THROWS((void)(z + CyclotomicInteger::zeta_power(7, 1)));
}

TEST_CASE("quadratic Gauss sums square to p*") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u}) {
    CAPTURE(p);
    const i64 pstar = p % 4 == 1 ? static_cast<i64>(p) : -static_cast<i64>(p);
    const auto g = gauss_sum(p);
    CHECK(g * g == CyclotomicInteger::from_integer(p, pstar));
    const auto sqrt_pstar = SurdValue(0, 1, 1, pstar);
    CHECK(surd_to_cyclotomic(sqrt_pstar, p) == g);
    CHECK(near(g.embed(), sqrt_pstar.embed()));
  }
}

TEST_CASE("embeddings") {
  CHECK(near(CyclotomicInteger::from_integer(3, 4).embed(), {4.0, 0.0}));
  const double t = 2 * std::numbers::pi / 3;
  CHECK(near(embed_complex(CyclotomicInteger::zeta_power(3, 1)), {std::cos(t), std::sin(t)}));
}

TEST_CASE("surd normalization and printing") {
  const SurdValue a(2, 4, 2, 5);
  CHECK(a.u() == 1);
  CHECK(a.v() == 2);
  CHECK(a.w() == 1);
  CHECK(a.to_string() == "1+2*sqrt(5)");
  const SurdValue b(-1, -3, 2, -3);
  CHECK(b.to_string() == "(-1-3*sqrt(-3))/2");
  CHECK(near(b.embed(), {-0.5, -1.5 * std::sqrt(3.0)}));
  CHECK(SurdValue(6, 0, 3, 7) == SurdValue::integer(2));
  CHECK(SurdValue::integer(-4).to_string() == "-4");
  CHECK(SurdValue::rational(3, 6).to_string() == "1/2");
}

TEST_CASE("surd arithmetic and exact comparison") {
  const SurdValue r7(0, 1, 1, 7);
  const SurdValue bound = SurdValue::integer(98) - r7 * 4;  // 98 - 4 sqrt(7) ~ 87.42
  CHECK(bound.at_most(88, 1));
  CHECK_FALSE(bound.at_most(87, 1));
  CHECK(bound.at_most(8742, 100));
  CHECK_FALSE(bound.at_most(8741, 100));
  CHECK((r7 * 2).divided_by(2) == r7);
  CHECK((r7 + SurdValue::integer(1)).as_integer() == std::nullopt);
  CHECK((r7 - r7).as_integer() == 0);
  CHECK_THROWS((void)(r7 + SurdValue(0, 1, 1, 5)));
}
