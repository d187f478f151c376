#pragma once

// Data-parallel inner loops.
//
// Every kernel here has an OpenMP implementation (the default entry point)
// and, where the parallel version takes a table-driven shortcut, a serial
// reference that follows the textbook definition through Field arithmetic.
// Tests hold the two against each other; bench/ times them.
//
// Without OpenMP the pragmas compile away and the parallel entry points run
// single-threaded with identical results.

#include <cstdint>
#include <span>
#include <vector>

#include "tracecodes/arith.hpp"
#include "tracecodes/cyclotomic_integer.hpp"
#include "tracecodes/field.hpp"

namespace tracecodes::kernels {

/// Tr_{r/p}(alpha^e) as an integer in [0, p), indexed by e in [0, r-1).
std::vector<std::uint32_t> prime_trace_table(const Field& f);

/// Tr_{r/q}(alpha^e) for every exponent, in compact subfield coordinates.
///
/// The compact code of z in GF(q) is sum_k p^k Tr_{q/p}(beta^k z), with beta
/// the subfield generator. This is an F_p-linear bijection GF(q) -> [0, q)
/// sending 0 to 0, so "symbol is zero" and "symbols cancel" are exact tests
/// on codes.
struct SubfieldTraceTable {
  std::uint32_t p = 2;
  unsigned s_sub = 1;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> by_exponent;
  std::vector<std::uint32_t> negate;

  /// Compact code of an element of GF(q) given as a field element.
  [[nodiscard]] std::uint32_t code_of(const Field& f, FieldElement z) const;
};

SubfieldTraceTable subfield_trace_table(const Field& f, unsigned s_sub);

/// Upper bound on N * p for the tally kernels (memory guard).
inline constexpr u64 kMaxTallyEntries = u64{1} << 24;

/// tally[i * p + t] = |{x in C_i^(N,r) : Tr_{r/p}(x) = t}|.
std::vector<i64> class_trace_tally(const Field& f, u64 N, std::span<const std::uint32_t> prime_trace);
std::vector<i64> class_trace_tally(const Field& f, u64 N);
std::vector<i64> class_trace_tally_serial(const Field& f, u64 N);

/// Same for the order-L classes beta^i <beta^L> of GF(q)^*, q = p^s_sub, with
/// the trace Tr_{q/p}.
std::vector<i64> subfield_class_trace_tally(const Field& f, unsigned s_sub, u64 L,
                                            std::span<const std::uint32_t> prime_trace);
std::vector<i64> subfield_class_trace_tally_serial(const Field& f, unsigned s_sub, u64 L);

/// Cross sums S_{j,k} = sum_{i<L} eta^(N,r)_{shift*i + j} * eta^(L,q)_{i + k}.
/// shift * L must vanish mod N, so S_{j,k} = S_{j - shift*k, 0} and only the
/// column k = 0 is returned, in tally form: out[j * p + t] for j < N.
std::vector<i64> cross_sums(std::span<const i64> tally_N, u64 N, std::span<const i64> tally_L, u64 L, u64 shift,
                            std::uint32_t p);
/// Reference route through CyclotomicInteger multiplication, every (j, k):
/// out[j * L + k].
std::vector<CyclotomicInteger> cross_sums_serial(std::span<const i64> tally_N, u64 N, std::span<const i64> tally_L,
                                                 u64 L, u64 shift, std::uint32_t p);

enum class Enumeration {
  Orbit,  // one representative per cyclic-shift orbit, weighted by orbit size
  Full,   // every pair of the pair space
  FullB,  // C1 only: every b in GF(r) instead of one b per trace value
};

/// Pair-count weight histograms (index = weight, length n + 1) computed from
/// trace tables. C1 pair space: (a, Tr(b)) in GF(r) x GF(q), or GF(r)^2 for
/// FullB. C2 pair space: GF(r)^2.
std::vector<u64> c1_pair_histogram(const SubfieldTraceTable& tr, u64 N, u64 n, Enumeration mode);
std::vector<u64> c2_pair_histogram(const SubfieldTraceTable& tr, u64 N, u64 n, Enumeration mode);

}  // namespace tracecodes::kernels
