#include <algorithm>

#include "tracecodes/codes.hpp"
#include "tracecodes/kernels.hpp"

namespace tracecodes {

namespace {

// Digit-wise addition of compact subfield codes (they are F_p-linear).
std::vector<std::uint32_t> addition_table(std::uint32_t p, unsigned s_sub, u64 q) {
  std::vector<std::uint32_t> out(q * q);
  for (u64 x = 0; x < q; ++x) {
    for (u64 y = 0; y < q; ++y) {
      u64 a = x, b = y, sum = 0, place = 1;
      for (unsigned k = 0; k < s_sub; ++k) {
        sum += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
      }
      out[x * q + y] = static_cast<std::uint32_t>(sum);
    }
  }
  return out;
}

struct Fingerprint {
  u64 h1 = 0, h2 = 0;
  void push(std::uint32_t sym) {
    constexpr u64 kMul1 = 0x9E3779B97F4A7C15ULL;
    constexpr u64 kMersenne61 = (u64{1} << 61) - 1;
    constexpr u64 kMul2 = 0x1F3D5B79A1C3E5F7ULL % kMersenne61;
    h1 = h1 * kMul1 + sym + 1;
    const u128 t = static_cast<u128>(h2) * kMul2 + sym + 1;
    u64 folded = static_cast<u64>(t & kMersenne61) + static_cast<u64>(t >> 61);
    while (folded >= kMersenne61) folded -= kMersenne61;
    h2 = folded;
  }
  auto operator<=>(const Fingerprint&) const = default;
};

}  // namespace

u64 count_distinct_codewords(const Code& code) {
  const auto& spec = code.spec();
  const u64 pairs = spec.pair_total();
  if (spec.q > 4096 || pairs > (u64{1} << 26)) {
    throw GuardrailError("fingerprint dedupe is limited to q <= 4096 and 2^26 codewords");
  }
  const auto tr = kernels::subfield_trace_table(code.field(), spec.s);
  const auto add = addition_table(tr.p, tr.s_sub, tr.q);
  const auto& T = tr.by_exponent;
  const u64 ord = spec.r - 1, q = spec.q, n = spec.n, N = spec.N;
  std::vector<Fingerprint> prints(pairs);

  if (spec.variant == Variant::C1) {
    // a index 0 is a = 0, index e+1 is alpha^e; second coordinate is Tr(b).
#pragma omp parallel for schedule(dynamic)
    for (i64 ai = 0; ai < static_cast<i64>(spec.r); ++ai) {
      for (u64 c = 0; c < q; ++c) {
        Fingerprint fp;
        u64 e = ai == 0 ? 0 : static_cast<u64>(ai - 1);
        for (u64 j = 0; j < n; ++j) {
          fp.push(ai == 0 ? static_cast<std::uint32_t>(c) : add[T[e] * q + c]);
          e += N;
          if (e >= ord) e -= ord;
        }
        prints[static_cast<u64>(ai) * q + c] = fp;
      }
    }
  } else {
    const u64 r = spec.r;
    const u64 step2 = 2 * N % ord;
#pragma omp parallel for schedule(dynamic)
    for (i64 ai = 0; ai < static_cast<i64>(r); ++ai) {
      for (u64 bi = 0; bi < r; ++bi) {
        Fingerprint fp;
        u64 x = ai == 0 ? 0 : static_cast<u64>(ai - 1);
        u64 y = bi == 0 ? 0 : bi - 1;
        for (u64 j = 0; j < n; ++j) {
          const std::uint32_t u = ai == 0 ? 0 : T[x];
          const std::uint32_t v = bi == 0 ? 0 : T[y];
          fp.push(add[u * q + v]);
          x += N;
          if (x >= ord) x -= ord;
          y += step2;
          if (y >= ord) y -= ord;
        }
        prints[static_cast<u64>(ai) * r + bi] = fp;
      }
    }
  }
  std::sort(prints.begin(), prints.end());
  return static_cast<u64>(std::unique(prints.begin(), prints.end()) - prints.begin());
}

OracleResult oracle_distribution(const Code& code, const OracleOptions& options) {
  const auto& spec = code.spec();
  const bool full_b = options.enumeration == kernels::Enumeration::FullB;
  if (full_b && spec.variant != Variant::C1) throw ParameterError("full-b enumeration applies to c1 only");
  const u64 pair_total = full_b ? spec.r * spec.r : spec.pair_total();
  if (pair_total > options.max_pairs && !options.force) {
    throw GuardrailError("pair space of " + std::to_string(pair_total) + " exceeds the guardrail of " +
                         std::to_string(options.max_pairs) + " (use --force or raise --max-pairs)");
  }

  const auto tr = kernels::subfield_trace_table(code.field(), spec.s);
  const auto hist = spec.variant == Variant::C1 ? kernels::c1_pair_histogram(tr, spec.N, spec.n, options.enumeration)
                                                : kernels::c2_pair_histogram(tr, spec.N, spec.n, options.enumeration);
  OracleResult out;
  out.pairs = WeightDistribution::from_histogram(Semantics::PairCounts, hist);
  if (out.pairs.total() != pair_total) {
    throw IntegralityError("oracle counted " + std::to_string(out.pairs.total()) + " pairs, expected " +
                           std::to_string(pair_total));
  }
  out.dimension = code.dimension();
  const u64 size = static_cast<u64>(checked_pow(static_cast<i64>(spec.q), out.dimension));
  out.dedupe_factor = static_cast<u64>(exact_div(static_cast<i64>(pair_total), static_cast<i64>(size), "dedupe factor"));
  out.codewords = out.pairs.to_codeword_counts(out.dedupe_factor);
  if (options.hash_dedupe.value_or(spec.r <= 1024)) out.distinct_codewords = count_distinct_codewords(code);
  return out;
}

WeightDistribution oracle_distribution_reference(const Code& code) {
  const auto& spec = code.spec();
  const auto& f = code.field();
  std::vector<u64> hist(spec.n + 1, 0);
  auto weight = [](const std::vector<FieldElement>& word) {
    return static_cast<u64>(std::count_if(word.begin(), word.end(), [](FieldElement x) { return x.code != 0; }));
  };
  if (spec.variant == Variant::C1) {
    // One b per trace value: b = c u with Tr(u) = 1.
    FieldElement u{};
    for (std::uint32_t code_u = 1; code_u < spec.r; ++code_u) {
      if (f.trace({code_u}, spec.s) == f.one()) {
        u = {code_u};
        break;
      }
    }
    std::vector<FieldElement> subfield{f.zero()};
    const FieldElement beta = f.subfield_generator(spec.s);
    for (FieldElement y = f.one(); subfield.size() < spec.q; y = f.mul(y, beta)) subfield.push_back(y);
    for (std::uint32_t a = 0; a < spec.r; ++a) {
      for (FieldElement c : subfield) ++hist[weight(code.codeword({a}, f.mul(c, u)))];
    }
  } else {
    for (std::uint32_t a = 0; a < spec.r; ++a) {
      for (std::uint32_t b = 0; b < spec.r; ++b) ++hist[weight(code.codeword({a}, {b}))];
    }
  }
  return WeightDistribution::from_histogram(Semantics::PairCounts, hist);
}

}  // namespace tracecodes
