#pragma once

// The two trace codes over GF(q), q = p^s, r = q^m, g = alpha^N, n = (r-1)/N:
//
//   C1: c(a, b)_j = Tr_{r/q}(a g^j + b)
//   C2: c(a, b)_j = Tr_{r/q}(a g^j + b g^(2j))
//
// Weight distributions come from two independent routes: closed tables
// evaluated from exact Gauss periods, and a codeword-enumeration oracle.
// Both report pair counts; codeword counts follow by dividing through by
// the dedupe factor pair_total / q^dim.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tracecodes/arith.hpp"
#include "tracecodes/cyclotomy.hpp"
#include "tracecodes/field.hpp"
#include "tracecodes/kernels.hpp"
#include "tracecodes/surd.hpp"
#include "tracecodes/weight_distribution.hpp"

namespace tracecodes {

enum class Variant { C1, C2 };

std::string to_string(Variant v);
/// "c1" / "c2" (case-insensitive); ParameterError otherwise.
Variant parse_variant(const std::string& text);

struct CodeSpec {
  Variant variant = Variant::C1;
  u64 p = 2;
  unsigned s = 1;
  unsigned m = 1;
  u64 N = 2;

  // Derived by make().
  u64 q = 2;
  u64 r = 2;
  u64 n = 1;
  u64 d = 1;  // gcd(N, (r-1)/(q-1))

  /// Validates and fills in the derived quantities. Throws ParameterError
  /// naming the violated condition.
  static CodeSpec make(Variant variant, u64 p, unsigned s, unsigned m, u64 N);

  [[nodiscard]] unsigned extension_degree() const { return s * m; }
  /// (r-1)/(q-1): exponent of the subfield generator.
  [[nodiscard]] u64 subfield_step() const { return (r - 1) / (q - 1); }
  [[nodiscard]] u64 pair_total() const { return variant == Variant::C1 ? q * r : r * r; }
  [[nodiscard]] std::string describe() const;
};

/// Reason the C2 tables do not apply to `spec`, or empty when they do
/// (r = q^2 and 2N | q+1).
std::string c2_table_obstacle(const CodeSpec& spec);

/// A spec bound to its field.
class Code {
 public:
  explicit Code(const CodeSpec& spec, u64 table_cap = Field::kTableCap);
  Code(const CodeSpec& spec, Field field);

  [[nodiscard]] const CodeSpec& spec() const { return spec_; }
  [[nodiscard]] const Field& field() const { return field_; }
  [[nodiscard]] FieldElement g() const { return g_; }

  /// Symbols in GF(q), embedded in GF(r).
  [[nodiscard]] std::vector<FieldElement> codeword(FieldElement a, FieldElement b) const;

  /// C1: (X - 1) h_{g^-1}(X); C2: h_{g^-1}(X) h_{g^-2}(X); coefficients in GF(q).
  [[nodiscard]] FieldPoly parity_check() const;
  [[nodiscard]] unsigned dimension() const;

 private:
  CodeSpec spec_;
  Field field_;
  FieldElement g_;
};

// ---------------------------------------------------------------------------
// Tables

/// Pair counts over (a, Tr b), total q r. `periods_d` and `periods_N` are of
/// orders d and N over GF(r); `periods_L` of order N/d over GF(q). When
/// d = N the simplified table with two rows per class is used.
WeightDistribution table_distribution_c1(const CodeSpec& spec, const GaussPeriodSet& periods_d,
                                         const GaussPeriodSet& periods_N, const GaussPeriodSet& periods_L);
/// Same, computing the periods by brute force.
WeightDistribution table_distribution_c1(const Code& code);

/// Pair counts over (a, b), total r^2; needs r = q^2 and 2N | q+1. The table
/// is picked by the parity of (q+1)/(2N).
WeightDistribution table_distribution_c2(const CodeSpec& spec, const GaussPeriodSet& periods_N,
                                         const GaussPeriodSet& periods_2N);
WeightDistribution table_distribution_c2(const Code& code);

/// Integer-only tables for the semi-primitive case q = p^(ef), e least with
/// p^e = -1 (mod 2N).
WeightDistribution table_distribution_c2_semiprimitive(const CodeSpec& spec);

// ---------------------------------------------------------------------------
// Oracle

struct OracleOptions {
  kernels::Enumeration enumeration = kernels::Enumeration::Orbit;
  u64 max_pairs = 10'000'000;  // guardrail on the pair space
  bool force = false;
  /// Enumerate every codeword and count distinct ones by fingerprint. Runs
  /// by default when r <= 2^10.
  std::optional<bool> hash_dedupe;
};

struct OracleResult {
  WeightDistribution pairs;
  WeightDistribution codewords;
  u64 dedupe_factor = 1;
  unsigned dimension = 0;
  /// Number of distinct codewords found by fingerprinting, when run.
  std::optional<u64> distinct_codewords;
};

OracleResult oracle_distribution(const Code& code, const OracleOptions& options = {});

/// Reference oracle: builds each codeword through Field arithmetic. Slow;
/// for cross-checking the table-driven kernels on small fields.
WeightDistribution oracle_distribution_reference(const Code& code);

/// Distinct codewords over the full pair space, by 128-bit fingerprints.
u64 count_distinct_codewords(const Code& code);

// ---------------------------------------------------------------------------
// Bounds

/// Lower bound on the minimum weight as an exact surd, or the unmet
/// hypothesis. C1: N | (r-1)/(q-1), q >= 3, N < sqrt(r). C2: r = q^2,
/// 2N | q+1, 5 <= N < sqrt(r)/2.
Outcome<SurdValue> min_weight_bound(const CodeSpec& spec);

}  // namespace tracecodes
