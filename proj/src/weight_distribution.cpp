#include "tracecodes/weight_distribution.hpp"

namespace tracecodes {

std::string to_string(Semantics s) { return s == Semantics::PairCounts ? "pair-counts" : "codeword-counts"; }

WeightDistribution::WeightDistribution(Semantics semantics, std::map<u64, u64> entries)
    : semantics_(semantics), entries_(std::move(entries)) {
  std::erase_if(entries_, [](const auto& kv) { return kv.second == 0; });
}

WeightDistribution WeightDistribution::from_rows(Semantics semantics, std::span<const std::pair<i64, i64>> rows) {
  std::map<u64, u64> merged;
  for (const auto& [w, c] : rows) {
    if (c == 0) continue;
    if (w < 0 || c < 0) {
      throw IntegralityError("negative weight or frequency (" + std::to_string(w) + ", " + std::to_string(c) + ")");
    }
    merged[static_cast<u64>(w)] += static_cast<u64>(c);
  }
  return {semantics, std::move(merged)};
}

WeightDistribution WeightDistribution::from_histogram(Semantics semantics, std::span<const u64> histogram) {
  std::map<u64, u64> entries;
  for (std::size_t w = 0; w < histogram.size(); ++w) {
    if (histogram[w] != 0) entries[w] = histogram[w];
  }
  return {semantics, std::move(entries)};
}

u64 WeightDistribution::total() const {
  u64 t = 0;
  for (const auto& [w, c] : entries_) t += c;
  return t;
}

u64 WeightDistribution::count(u64 weight) const {
  auto it = entries_.find(weight);
  return it == entries_.end() ? 0 : it->second;
}

u64 WeightDistribution::min_weight() const {
  for (const auto& [w, c] : entries_) {
    if (w != 0) return w;
  }
  return 0;
}

u64 WeightDistribution::weight_sum() const {
  u64 s = 0;
  for (const auto& [w, c] : entries_) s += w * c;
  return s;
}

WeightDistribution WeightDistribution::to_codeword_counts(u64 dedupe_factor) const {
  if (semantics_ == Semantics::CodewordCounts) return *this;
  if (dedupe_factor == 0) throw ParameterError("dedupe factor must be positive");
  std::map<u64, u64> out;
  for (const auto& [w, c] : entries_) {
    if (c % dedupe_factor != 0) {
      throw IntegralityError("pair count " + std::to_string(c) + " at weight " + std::to_string(w) +
                             " is not divisible by the dedupe factor " + std::to_string(dedupe_factor));
    }
    out[w] = c / dedupe_factor;
  }
  if (out[0] != 1) throw IntegralityError("zero codeword count is " + std::to_string(out[0]) + ", expected 1");
  return {Semantics::CodewordCounts, std::move(out)};
}

std::string enumerator_string(const WeightDistribution& dist) {
  if (dist.semantics() != Semantics::CodewordCounts) {
    throw ParameterError("enumerator needs codeword counts; convert the pair counts first");
  }
  std::string out;
  for (const auto& [w, c] : dist.entries()) {
    if (!out.empty()) out += "+";
    if (w == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += "x";
      if (w != 1) out += "^" + std::to_string(w);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace tracecodes
