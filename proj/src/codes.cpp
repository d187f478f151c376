#include "tracecodes/codes.hpp"

#include <algorithm>
#include <cctype>

namespace tracecodes {

std::string to_string(Variant v) { return v == Variant::C1 ? "c1" : "c2"; }

Variant parse_variant(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (t == "c1") return Variant::C1;
  if (t == "c2") return Variant::C2;
  throw ParameterError("unknown code variant '" + text + "' (expected c1 or c2)");
}

CodeSpec CodeSpec::make(Variant variant, u64 p, unsigned s, unsigned m, u64 N) {
  if (!is_prime(p)) throw ParameterError("p = " + std::to_string(p) + " is not prime");
  if (s == 0 || m == 0) throw ParameterError("s and m must be positive");
  CodeSpec spec;
  spec.variant = variant;
  spec.p = p;
  spec.s = s;
  spec.m = m;
  spec.N = N;
  const unsigned total = s * m;
  // p^(sm) <= 2^31 keeps every exponent and code in 32 bits.
  u64 r = 1;
  for (unsigned i = 0; i < total; ++i) {
    r *= p;
    if (r > Field::kMaxSize) throw ParameterError("r = p^(sm) exceeds the field size bound 2^31");
  }
  spec.q = static_cast<u64>(checked_pow(static_cast<i64>(p), s));
  spec.r = r;
  if (N < 2) throw ParameterError("codes need N > 1");
  if ((r - 1) % N != 0) throw ParameterError("N = " + std::to_string(N) + " does not divide r-1 = " + std::to_string(r - 1));
  spec.n = (r - 1) / N;
  if (spec.n < 2) throw ParameterError("codes need n = (r-1)/N > 1");
  if (variant == Variant::C2 && spec.n % 2 != 0) {
    throw ParameterError("C2 needs n = (r-1)/N even so that g^2 has order n/2");
  }
  spec.d = static_cast<u64>(gcd(static_cast<i64>(N), static_cast<i64>(spec.subfield_step())));
  return spec;
}

std::string CodeSpec::describe() const {
  return to_string(variant) + " p=" + std::to_string(p) + " s=" + std::to_string(s) + " m=" + std::to_string(m) +
         " N=" + std::to_string(N) + " (q=" + std::to_string(q) + " r=" + std::to_string(r) + " n=" + std::to_string(n) +
         ")";
}

std::string c2_table_obstacle(const CodeSpec& spec) {
  if (spec.variant != Variant::C2) return "C2 tables apply to variant c2 only";
  if (spec.m != 2) return "C2 tables require r = q^2 (m = 2)";
  if ((spec.q + 1) % (2 * spec.N) != 0) return "C2 tables require 2N | (q+1)";
  return {};
}

Code::Code(const CodeSpec& spec, u64 table_cap) : Code(spec, build_field(spec.p, spec.extension_degree(), table_cap)) {}

Code::Code(const CodeSpec& spec, Field field) : spec_(spec), field_(std::move(field)), g_(field_.exp(static_cast<i64>(spec.N))) {
  if (field_.characteristic() != spec.p || field_.degree() != spec.extension_degree()) {
    throw ParameterError("field does not match the code parameters");
  }
}

std::vector<FieldElement> Code::codeword(FieldElement a, FieldElement b) const {
  std::vector<FieldElement> out;
  out.reserve(spec_.n);
  const FieldElement g2 = field_.mul(g_, g_);
  FieldElement x = field_.one();
  FieldElement x2 = field_.one();
  for (u64 j = 0; j < spec_.n; ++j) {
    const FieldElement second = spec_.variant == Variant::C1 ? b : field_.mul(b, x2);
    out.push_back(field_.trace(field_.add(field_.mul(a, x), second), spec_.s));
    x = field_.mul(x, g_);
    x2 = field_.mul(x2, g2);
  }
  return out;
}

FieldPoly Code::parity_check() const {
  const FieldElement g_inv = field_.inv(g_);
  const FieldPoly h1 = field_.minimal_polynomial(g_inv, spec_.s);
  const u64 k = multiplicative_order(spec_.q % spec_.n, spec_.n);
  if (static_cast<u64>(h1.degree()) != k) {
    throw IntegralityError("degree of h_{g^-1} differs from the order of q mod n");
  }
  if (spec_.variant == Variant::C1) {
    const FieldPoly x_minus_1{spec_.s, {field_.neg(field_.one()), field_.one()}};
    return field_.poly_mul(x_minus_1, h1);
  }
  const FieldPoly h2 = field_.minimal_polynomial(field_.mul(g_inv, g_inv), spec_.s);
  return field_.poly_mul(h1, h2);
}

unsigned Code::dimension() const { return static_cast<unsigned>(parity_check().degree()); }

Outcome<SurdValue> min_weight_bound(const CodeSpec& spec) {
  using Out = Outcome<SurdValue>;
  const i64 q = static_cast<i64>(spec.q);
  const i64 r = static_cast<i64>(spec.r);
  const i64 N = static_cast<i64>(spec.N);
  if (spec.variant == Variant::C1) {
    if (spec.subfield_step() % spec.N != 0) return Out::not_applicable("C1 bound requires N | (r-1)/(q-1)");
    if (q < 3) return Out::not_applicable("C1 bound requires q >= 3");
    if (N * N >= r) return Out::not_applicable("C1 bound requires N < sqrt(r)");
    // (q-1)(r - (N-1) sqrt(r)) / (qN), sqrt(r) = k sqrt(D)
    const auto [k, D] = split_square(r);
    return Out::ok(SurdValue(checked_mul(q - 1, r), -checked_mul(checked_mul(q - 1, N - 1), k), checked_mul(q, N), D));
  }
  if (auto why = c2_table_obstacle(spec); !why.empty()) return Out::not_applicable(why.replace(0, 17, "C2 bound requires"));
  if (N < 5) return Out::not_applicable("C2 bound requires N >= 5");
  if (2 * N >= q) return Out::not_applicable("C2 bound requires N < sqrt(r)/2");
  // sqrt(r) = q
  return Out::ok(SurdValue::rational(checked_mul(q - 1, r - (2 * N - 1) * q), checked_mul(q, N)));
}

}  // namespace tracecodes
