#include <algorithm>
#include <cmath>

#include "tracecodes/cyclotomy.hpp"

namespace tracecodes {

namespace {

std::string str(u64 v) { return std::to_string(v); }

ClosedFormSet make_set(std::string family, u64 p, unsigned sm, u64 N) {
  ClosedFormSet s;
  s.family = std::move(family);
  s.p = static_cast<std::uint32_t>(p);
  s.sm = sm;
  s.N = N;
  return s;
}

i64 ipow(u64 p, unsigned e) { return checked_pow(static_cast<i64>(p), e); }

Outcome<ClosedFormSet> quadratic(u64 p, unsigned sm) {
  if (p == 2) return Outcome<ClosedFormSet>::not_applicable("order 2 needs p odd");
  auto set = make_set("quadratic", p, sm, 2);
  const i64 sign = sm % 2 == 1 ? 1 : -1;  // (-1)^(sm-1)
  SurdValue eta0;
  if (sm % 2 == 0) {
    i64 root = ipow(p, sm / 2);
    // (sqrt(-1))^sm = (-1)^(sm/2) when p = 3 (mod 4)
    if (p % 4 == 3 && (sm / 2) % 2 == 1) root = -root;
    eta0 = SurdValue::rational(-1 + sign * root, 2);
  } else {
    const i64 k = ipow(p, (sm - 1) / 2);
    if (p % 4 == 1) {
      eta0 = SurdValue(-1, sign * k, 2, static_cast<i64>(p));
    } else {
      // (sqrt(-1))^sm sqrt(p) = (-1)^((sm-1)/2) sqrt(-p)
      const i64 unit = ((sm - 1) / 2) % 2 == 0 ? 1 : -1;
      eta0 = SurdValue(-1, sign * unit * k, 2, -static_cast<i64>(p));
    }
  }
  set.values.push_back({eta0, 0});
  set.values.push_back({SurdValue::integer(-1) - eta0, 1});
  return Outcome<ClosedFormSet>::ok(std::move(set));
}

Outcome<ClosedFormSet> cubic(u64 p, unsigned sm) {
  if (p % 3 != 1 || sm % 3 != 0) return Outcome<ClosedFormSet>::not_applicable("order 3 needs p = 1 (mod 3) and 3 | sm");
  const auto cd = solve_c1_d1(p, sm);
  if (!cd) return Outcome<ClosedFormSet>::not_applicable(cd.reason());
  const auto [c1, d1] = *cd;
  const i64 R = ipow(p, sm / 3);
  auto set = make_set("cubic", p, sm, 3);
  set.notes.push_back("c1=" + std::to_string(c1) + " d1=" + std::to_string(d1));
  set.values.push_back({SurdValue::rational(-1 + c1 * R, 3), 0});
  set.values.push_back({SurdValue::rational(-2 - (c1 + 9 * d1) * R, 6), std::nullopt});
  set.values.push_back({SurdValue::rational(-2 - (c1 - 9 * d1) * R, 6), std::nullopt});
  return Outcome<ClosedFormSet>::ok(std::move(set));
}

Outcome<ClosedFormSet> quartic(u64 p, unsigned sm) {
  if (p % 4 != 1 || sm % 4 != 0) return Outcome<ClosedFormSet>::not_applicable("order 4 needs p = 1 (mod 4) and 4 | sm");
  const auto st = solve_s1_t1(p, sm);
  if (!st) return Outcome<ClosedFormSet>::not_applicable(st.reason());
  const auto [s1, t1] = *st;
  const i64 S = ipow(p, sm / 2);
  const i64 Q = ipow(p, sm / 4);
  auto set = make_set("quartic", p, sm, 4);
  set.notes.push_back("s1=" + std::to_string(s1) + " t1=" + std::to_string(t1));
  set.values.push_back({SurdValue::rational(-1 - S - 2 * s1 * Q, 4), 0});
  set.values.push_back({SurdValue::rational(-1 + S + 4 * t1 * Q, 4), std::nullopt});
  set.values.push_back({SurdValue::rational(-1 - S + 2 * s1 * Q, 4), 2});
  set.values.push_back({SurdValue::rational(-1 + S - 4 * t1 * Q, 4), std::nullopt});
  return Outcome<ClosedFormSet>::ok(std::move(set));
}

}  // namespace

bool ClosedFormSet::has_unordered() const {
  return std::any_of(values.begin(), values.end(), [](const ClosedFormValue& v) { return !v.index; });
}

std::optional<std::vector<SurdValue>> ClosedFormSet::by_index() const {
  if (has_unordered()) return std::nullopt;
  std::vector<SurdValue> out(N);
  for (const auto& v : values) out.at(*v.index) = v.value;
  return out;
}

std::vector<std::complex<double>> ClosedFormSet::embeddings() const {
  std::vector<std::complex<double>> out;
  for (const auto& v : values) out.push_back(v.value.embed());
  return out;
}

Outcome<ClosedFormSet> closed_form_small_N(u64 p, unsigned sm, u64 N) {
  if (!is_prime(p)) return Outcome<ClosedFormSet>::not_applicable("p must be prime");
  if (sm == 0) return Outcome<ClosedFormSet>::not_applicable("extension degree must be positive");
  switch (N) {
    case 2:
      return quadratic(p, sm);
    case 3:
      return cubic(p, sm);
    case 4:
      return quartic(p, sm);
    default:
      return Outcome<ClosedFormSet>::not_applicable("small-order closed forms cover N = 2, 3, 4");
  }
}

Outcome<std::pair<i64, i64>> solve_c1_d1(u64 p, unsigned e3) {
  using Out = Outcome<std::pair<i64, i64>>;
  if (!is_prime(p) || p % 3 != 1) return Out::not_applicable("needs a prime p = 1 (mod 3)");
  if (e3 == 0 || e3 % 3 != 0) return Out::not_applicable("needs 3 | e3");
  const i64 target = checked_mul(4, ipow(p, e3 / 3));
  const auto bound = static_cast<i64>(isqrt(static_cast<u64>(target)));
  std::vector<std::pair<i64, i64>> found;
  for (i64 c = -bound; c <= bound; ++c) {
    if (floor_mod(c, 3) != 1 || gcd(c, static_cast<i64>(p)) != 1) continue;
    const i64 rest = target - c * c;
    if (rest < 0 || rest % 27 != 0 || !is_square(static_cast<u64>(rest / 27))) continue;
    found.emplace_back(c, static_cast<i64>(isqrt(static_cast<u64>(rest / 27))));
  }
  if (found.size() != 1) {
    return Out::not_applicable("4p^(e3/3) = c1^2 + 27d1^2 has " + std::to_string(found.size()) +
                               " admissible solutions");
  }
  return Out::ok(found.front());
}

Outcome<std::pair<i64, i64>> solve_s1_t1(u64 p, unsigned e4) {
  using Out = Outcome<std::pair<i64, i64>>;
  if (!is_prime(p) || p % 4 != 1) return Out::not_applicable("needs a prime p = 1 (mod 4)");
  if (e4 == 0 || e4 % 2 != 0) return Out::not_applicable("needs 2 | e4");
  const i64 target = ipow(p, e4 / 2);
  const auto bound = static_cast<i64>(isqrt(static_cast<u64>(target)));
  std::vector<std::pair<i64, i64>> found;
  for (i64 s = -bound; s <= bound; ++s) {
    if (floor_mod(s, 4) != 1 || gcd(s, static_cast<i64>(p)) != 1) continue;
    const i64 rest = target - s * s;
    if (rest < 0 || rest % 4 != 0 || !is_square(static_cast<u64>(rest / 4))) continue;
    found.emplace_back(s, static_cast<i64>(isqrt(static_cast<u64>(rest / 4))));
  }
  if (found.size() != 1) {
    return Out::not_applicable("p^(e4/2) = s1^2 + 4t1^2 has " + std::to_string(found.size()) +
                               " admissible solutions");
  }
  return Out::ok(found.front());
}

std::optional<unsigned> semiprimitive_exponent(u64 p, u64 N) {
  if (N < 2 || p % N == 0) return std::nullopt;
  u64 power = 1;
  const u64 ord = multiplicative_order(p % N, N);
  for (unsigned e = 1; e <= ord; ++e) {
    power = power * (p % N) % N;
    if (power == N - 1) return e;
  }
  return std::nullopt;
}

Outcome<ClosedFormSet> closed_form_semiprimitive(u64 p, unsigned e, unsigned f, u64 N) {
  using Out = Outcome<ClosedFormSet>;
  if (!is_prime(p)) return Out::not_applicable("p must be prime");
  if (f == 0) return Out::not_applicable("f must be positive");
  const auto least = semiprimitive_exponent(p, N);
  if (!least) return Out::not_applicable("no power of p is -1 mod " + str(N));
  if (*least != e) return Out::not_applicable("least e with p^e = -1 (mod N) is " + std::to_string(*least));

  const i64 root = ipow(p, e * f);  // sqrt(r)
  const i64 n = static_cast<i64>(N);
  const i64 pe1 = ipow(p, e) + 1;
  auto set = make_set("semiprimitive", p, 2 * e * f, N);
  set.notes.push_back("e=" + std::to_string(e) + " f=" + std::to_string(f));
  const bool case_one = f % 2 == 1 && p % 2 == 1 && (pe1 / n) % 2 == 1;
  if (case_one) {
    for (u64 i = 0; i < N; ++i) {
      const SurdValue v = i == N / 2 ? SurdValue::rational((n - 1) * root - 1, n) : SurdValue::rational(-root - 1, n);
      set.values.push_back({v, i});
    }
  } else {
    const i64 sf = f % 2 == 0 ? 1 : -1;  // (-1)^f
    for (u64 i = 0; i < N; ++i) {
      const SurdValue v = i == 0 ? SurdValue::rational(-sf * (n - 1) * root - 1, n) : SurdValue::rational(sf * root - 1, n);
      set.values.push_back({v, i});
    }
  }
  return Out::ok(std::move(set));
}

u64 class_number(u64 N) {
  if (!is_prime(N) || N % 4 != 3) throw ParameterError("class_number needs a prime N = 3 (mod 4)");
  const auto D = static_cast<i64>(N);
  u64 h = 0;
  // Reduced forms: |b| <= a <= c, b >= 0 when |b| = a or a = c; 3a^2 <= N.
  for (i64 a = 1; 3 * a * a <= D; ++a) {
    for (i64 b = -a + 1; b <= a; ++b) {
      const i64 num = b * b + D;
      if (num % (4 * a) != 0) continue;
      const i64 c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (gcd(gcd(a, b), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

Outcome<ClosedFormSet> closed_form_index2(u64 p, u64 N, unsigned k) {
  using Out = Outcome<ClosedFormSet>;
  if (!is_prime(p)) return Out::not_applicable("p must be prime");
  if (!is_prime(N) || N <= 3 || N % 4 != 3) return Out::not_applicable("index-2 case needs a prime N > 3, N = 3 (mod 4)");
  if (p == N || multiplicative_order(p % N, N) != (N - 1) / 2) {
    return Out::not_applicable("<p> does not have index 2 in (Z/" + str(N) + ")^*");
  }
  if (k == 0) return Out::not_applicable("k must be positive");
  const u64 h = class_number(N);
  const i64 n = static_cast<i64>(N);
  const i64 ex_num = static_cast<i64>(k) * (n - 1 - 2 * static_cast<i64>(h));
  if (ex_num < 0 || ex_num % 4 != 0) return Out::not_applicable("k(N-1-2h)/4 is not a nonnegative integer");

  // 4p^h = a^2 + N b^2, a = -2 p^((N-1+2h)/4) (mod N), b > 0, p does not divide b.
  const i64 target = checked_mul(4, ipow(p, static_cast<unsigned>(h)));
  const i64 a_residue = floor_mod(-2 * static_cast<i64>(mod_pow(p, (N - 1 + 2 * h) / 4, N)), n);
  std::vector<std::pair<i64, i64>> found;
  for (i64 b = 1; n * b * b <= target; ++b) {
    if (b % static_cast<i64>(p) == 0) continue;
    const i64 rest = target - n * b * b;
    if (!is_square(static_cast<u64>(rest))) continue;
    const auto root = static_cast<i64>(isqrt(static_cast<u64>(rest)));
    for (i64 a : {root, -root}) {
      if (floor_mod(a, n) == a_residue) found.emplace_back(a, b);
      if (root == 0) break;
    }
  }
  if (found.size() != 1) {
    return Out::not_applicable("4p^h = a^2 + Nb^2 has " + std::to_string(found.size()) + " admissible solutions");
  }
  const auto [a, b] = found.front();

  // ((a + b sqrt(-N)) / 2)^k = (X + Y sqrt(-N)) / 2 with X = Y (mod 2).
  i64 X = a, Y = b;
  for (unsigned step = 1; step < k; ++step) {
    const i64 nx = exact_div(checked_sub(checked_mul(X, a), checked_mul(n, checked_mul(Y, b))), 2, "index-2 power");
    const i64 ny = exact_div(checked_add(checked_mul(X, b), checked_mul(Y, a)), 2, "index-2 power");
    X = nx;
    Y = ny;
  }
  const i64 P = (k % 2 == 1 ? 1 : -1) * ipow(p, static_cast<unsigned>(ex_num / 4));
  const i64 PX = checked_mul(P, X);
  const i64 PYN = checked_mul(checked_mul(P, Y), n);

  auto set = make_set("index2", p, static_cast<unsigned>((N - 1) / 2 * k), N);
  set.notes.push_back("h=" + str(h) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
  set.values.push_back({SurdValue::rational(checked_mul(PX, n - 1) - 2, 2 * n), 0});
  for (u64 u = 1; u < N; ++u) {
    const i64 sign = legendre(static_cast<i64>(u), N) == 1 ? 1 : -1;
    set.values.push_back({SurdValue::rational(-(PX + sign * PYN + 2), 2 * n), u});
  }
  return Out::ok(std::move(set));
}

std::vector<ClosedFormSet> applicable_closed_forms(u64 p, unsigned sm, u64 N) {
  std::vector<ClosedFormSet> out;
  if (!is_prime(p) || sm == 0) return out;
  const u64 r = static_cast<u64>(ipow(p, sm));
  if (N < 2 || (r - 1) % N != 0) return out;
  if (auto s = closed_form_small_N(p, sm, N)) out.push_back(*s);
  if (auto e = semiprimitive_exponent(p, N); e && sm % (2 * *e) == 0) {
    if (auto s = closed_form_semiprimitive(p, *e, sm / (2 * *e), N)) out.push_back(*s);
  }
  if (is_prime(N) && N > 3 && N % 4 == 3 && p != N && multiplicative_order(p % N, N) == (N - 1) / 2 &&
      sm % ((N - 1) / 2) == 0) {
    if (auto s = closed_form_index2(p, N, static_cast<unsigned>(sm / ((N - 1) / 2)))) out.push_back(*s);
  }
  return out;
}

bool closed_form_matches(const ClosedFormSet& closed, const GaussPeriodSet& brute, double tol) {
  if (closed.values.size() != brute.values.size()) return false;
  std::vector<bool> used(brute.values.size(), false);
  for (const auto& v : closed.values) {
    const auto z = v.value.embed();
    bool hit = false;
    for (std::size_t i = 0; i < brute.values.size(); ++i) {
      if (!used[i] && std::abs(brute.values[i].embed() - z) <= tol) {
        used[i] = true;
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

bool closed_form_indices_match(const ClosedFormSet& closed, const GaussPeriodSet& brute, double tol) {
  for (const auto& v : closed.values) {
    if (!v.index) continue;
    if (std::abs(brute.at(static_cast<i64>(*v.index)).embed() - v.value.embed()) > tol) return false;
  }
  return true;
}

CyclotomicInteger surd_to_cyclotomic(const SurdValue& v, std::uint32_t p) {
  if (v.is_rational()) return CyclotomicInteger::from_integer(p, exact_div(v.u(), v.w(), "surd to cyclotomic"));
  const i64 p_star = p % 4 == 1 ? static_cast<i64>(p) : -static_cast<i64>(p);
  if (p == 2 || v.D() != p_star) {
    throw ParameterError("sqrt(" + std::to_string(v.D()) + ") is not in Q(zeta_" + std::to_string(p) + ")");
  }
  // Quadratic Gauss sum sum_t (t/p) zeta^t equals the principal sqrt(p*).
  std::vector<i64> tally(p, 0);
  for (std::uint32_t t = 1; t < p; ++t) tally[t] = legendre(t, p);
  const auto gauss = CyclotomicInteger::from_tally(p, tally);
  return (gauss * v.v() + v.u()).divided_exactly(v.w());
}

GaussPeriodSet to_period_set(const ClosedFormSet& closed) {
  const auto ordered = closed.by_index();
  if (!ordered) throw ParameterError("closed form leaves some class indices unresolved");
  GaussPeriodSet out;
  out.p = closed.p;
  out.degree = closed.sm;
  out.N = closed.N;
  out.provenance = closed.family;
  for (const auto& v : *ordered) out.values.push_back(surd_to_cyclotomic(v, closed.p));
  return out;
}

}  // namespace tracecodes
