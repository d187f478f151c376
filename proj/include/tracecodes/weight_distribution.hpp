#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tracecodes/arith.hpp"

namespace tracecodes {

/// What the counts of a distribution count.
enum class Semantics {
  PairCounts,      // parameter pairs (a, b) or (a, Tr b), before deduplication
  CodewordCounts,  // distinct codewords
};

std::string to_string(Semantics s);

/// Weight -> count multiset in ascending weight order.
///
/// Pair-count distributions convert to codeword counts by dividing every
/// entry by dedupe_factor = pair_total / q^dim; the conversion checks that
/// the division is exact and that the zero codeword appears exactly once.
class WeightDistribution {
 public:
  WeightDistribution() = default;
  WeightDistribution(Semantics semantics, std::map<u64, u64> entries);

  /// Merges rows with equal weight and drops zero counts. Negative counts and
  /// weights are rejected with IntegralityError.
  static WeightDistribution from_rows(Semantics semantics, std::span<const std::pair<i64, i64>> rows);
  /// histogram[w] = count.
  static WeightDistribution from_histogram(Semantics semantics, std::span<const u64> histogram);

  [[nodiscard]] Semantics semantics() const { return semantics_; }
  [[nodiscard]] const std::map<u64, u64>& entries() const { return entries_; }
  [[nodiscard]] u64 total() const;
  [[nodiscard]] u64 count(u64 weight) const;
  /// Smallest nonzero weight with a nonzero count; 0 for the zero code.
  [[nodiscard]] u64 min_weight() const;
  /// sum w * count.
  [[nodiscard]] u64 weight_sum() const;

  [[nodiscard]] WeightDistribution to_codeword_counts(u64 dedupe_factor) const;

  bool operator==(const WeightDistribution&) const = default;

 private:
  Semantics semantics_ = Semantics::PairCounts;
  std::map<u64, u64> entries_;
};

/// "1+12x^2+8x^3+6x^4" (ascending weight, zero counts omitted). Rejects
/// pair-count distributions with ParameterError.
std::string enumerator_string(const WeightDistribution& dist);

}  // namespace tracecodes
