#include "tracecodes/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tracecodes::kernels {

namespace {

void require_tally_size(u64 classes, std::uint32_t p) {
  if (classes * p > kMaxTallyEntries) {
    throw GuardrailError("class tally of " + std::to_string(classes) + " x " + std::to_string(p) +
                         " entries exceeds the kernel memory bound");
  }
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int thread_id() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

// Sums per-thread histograms into one.
template <class T>
std::vector<T> merge(const std::vector<std::vector<T>>& parts, std::size_t len) {
  std::vector<T> out(len, 0);
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < len; ++i) out[i] += part[i];
  }
  return out;
}

std::uint32_t relative_trace_to_prime(const Field& f, FieldElement y, unsigned from_degree) {
  FieldElement acc = y;
  FieldElement conj = y;
  for (unsigned i = 1; i < from_degree; ++i) {
    conj = f.frobenius(conj, 1);
    acc = f.add(acc, conj);
  }
  return acc.code;
}

}  // namespace

std::vector<std::uint32_t> prime_trace_table(const Field& f) {
  const std::uint32_t p = f.characteristic();
  const unsigned n = f.degree();
  const u64 ord = f.group_order();
  // Tr_{r/p} is F_p-linear in the coefficient vector.
  std::vector<std::uint32_t> basis_trace(n);
  for (unsigned i = 0; i < n; ++i) {
    std::vector<std::uint32_t> c(n, 0);
    c[i] = 1;
    basis_trace[i] = f.trace(f.from_coefficients(c), 1).code;
  }
  std::vector<std::uint32_t> out(ord);
  if (f.has_tables()) {
#pragma omp parallel for schedule(static)
    for (i64 e = 0; e < static_cast<i64>(ord); ++e) {
      std::uint32_t code = f.exp(e).code;
      u64 acc = 0;
      for (unsigned i = 0; i < n && code != 0; ++i) {
        acc += static_cast<u64>(code % p) * basis_trace[i];
        code /= p;
      }
      out[static_cast<std::size_t>(e)] = static_cast<std::uint32_t>(acc % p);
    }
    return out;
  }
  FieldElement y = f.one();
  const FieldElement alpha = f.primitive_element();
  for (u64 e = 0; e < ord; ++e) {
    std::uint32_t code = y.code;
    u64 acc = 0;
    for (unsigned i = 0; i < n && code != 0; ++i) {
      acc += static_cast<u64>(code % p) * basis_trace[i];
      code /= p;
    }
    out[e] = static_cast<std::uint32_t>(acc % p);
    y = f.mul(y, alpha);
  }
  return out;
}

std::uint32_t SubfieldTraceTable::code_of(const Field& f, FieldElement z) const {
  if (!f.in_subfield(z, s_sub)) throw ParameterError("element is not in the subfield");
  const FieldElement beta = f.subfield_generator(s_sub);
  FieldElement beta_k = f.one();
  u64 code = 0, place = 1;
  for (unsigned k = 0; k < s_sub; ++k) {
    code += relative_trace_to_prime(f, f.mul(beta_k, z), s_sub) * place;
    place *= p;
    beta_k = f.mul(beta_k, beta);
  }
  return static_cast<std::uint32_t>(code);
}

SubfieldTraceTable subfield_trace_table(const Field& f, unsigned s_sub) {
  f.require_subfield_degree(s_sub);
  SubfieldTraceTable t;
  t.p = f.characteristic();
  t.s_sub = s_sub;
  u64 q = 1;
  for (unsigned i = 0; i < s_sub; ++i) q *= t.p;
  t.q = static_cast<std::uint32_t>(q);
  const unsigned n = f.degree();
  const std::uint32_t p = t.p;

  // Functionals y -> Tr_{r/p}(beta^k y), one row per k, as coefficient weights.
  const FieldElement beta = f.subfield_generator(s_sub);
  std::vector<std::vector<std::uint32_t>> weights(s_sub, std::vector<std::uint32_t>(n));
  FieldElement beta_k = f.one();
  for (unsigned k = 0; k < s_sub; ++k) {
    for (unsigned i = 0; i < n; ++i) {
      std::vector<std::uint32_t> c(n, 0);
      c[i] = 1;
      weights[k][i] = f.trace(f.mul(beta_k, f.from_coefficients(c)), 1).code;
    }
    beta_k = f.mul(beta_k, beta);
  }

  const u64 ord = f.group_order();
  t.by_exponent.resize(ord);
  auto encode = [&](FieldElement y) {
    const auto digits = f.coefficients(y);
    u64 code = 0, place = 1;
    for (unsigned k = 0; k < s_sub; ++k) {
      u64 acc = 0;
      for (unsigned i = 0; i < n; ++i) acc += static_cast<u64>(digits[i]) * weights[k][i];
      code += (acc % p) * place;
      place *= p;
    }
    return static_cast<std::uint32_t>(code);
  };
  if (f.has_tables()) {
#pragma omp parallel for schedule(static)
    for (i64 e = 0; e < static_cast<i64>(ord); ++e) t.by_exponent[static_cast<std::size_t>(e)] = encode(f.exp(e));
  } else {
    FieldElement y = f.one();
    for (u64 e = 0; e < ord; ++e) {
      t.by_exponent[e] = encode(y);
      y = f.mul(y, f.primitive_element());
    }
  }

  t.negate.resize(q);
  for (u64 code = 0; code < q; ++code) {
    u64 rest = code, out = 0, place = 1;
    for (unsigned k = 0; k < s_sub; ++k) {
      out += ((p - rest % p) % p) * place;
      rest /= p;
      place *= p;
    }
    t.negate[code] = static_cast<std::uint32_t>(out);
  }
  return t;
}

std::vector<i64> class_trace_tally(const Field& f, u64 N, std::span<const std::uint32_t> prime_trace) {
  const u64 ord = f.group_order();
  const std::uint32_t p = f.characteristic();
  if (N == 0 || ord % N != 0) throw ParameterError("N must divide r-1");
  require_tally_size(N, p);
  const std::size_t len = N * p;
  std::vector<std::vector<i64>> parts(static_cast<std::size_t>(thread_count()));
#pragma omp parallel
  {
    auto& local = parts[static_cast<std::size_t>(thread_id())];
    local.assign(len, 0);
#pragma omp for schedule(static)
    for (i64 e = 0; e < static_cast<i64>(ord); ++e) {
      const u64 cls = static_cast<u64>(e) % N;
      ++local[cls * p + prime_trace[static_cast<std::size_t>(e)]];
    }
  }
  return merge(parts, len);
}

std::vector<i64> class_trace_tally(const Field& f, u64 N) {
  const auto table = prime_trace_table(f);
  return class_trace_tally(f, N, table);
}

std::vector<i64> class_trace_tally_serial(const Field& f, u64 N) {
  const u64 ord = f.group_order();
  const std::uint32_t p = f.characteristic();
  if (N == 0 || ord % N != 0) throw ParameterError("N must divide r-1");
  require_tally_size(N, p);
  std::vector<i64> out(N * p, 0);
  const u64 size = ord / N;
  for (u64 i = 0; i < N; ++i) {
    for (u64 k = 0; k < size; ++k) {
      const FieldElement x = f.exp(static_cast<i64>(i + k * N));
      ++out[i * p + f.trace(x, 1).code];
    }
  }
  return out;
}

std::vector<i64> subfield_class_trace_tally(const Field& f, unsigned s_sub, u64 L,
                                            std::span<const std::uint32_t> prime_trace) {
  f.require_subfield_degree(s_sub);
  const std::uint32_t p = f.characteristic();
  u64 q = 1;
  for (unsigned i = 0; i < s_sub; ++i) q *= p;
  if (L == 0 || (q - 1) % L != 0) throw ParameterError("L must divide q-1");
  require_tally_size(L, p);
  const u64 step = f.group_order() / (q - 1);
  const u64 m = f.degree() / s_sub;
  std::vector<i64> out(L * p, 0);
  // On GF(q), Tr_{r/p} = m Tr_{q/p}; invert m when p does not divide it.
  if (m % p != 0) {
    const u64 m_inv = mod_pow(m % p, p - 2, p);
    for (u64 u = 0; u + 1 < q; ++u) {
      const u64 t = prime_trace[u * step] * m_inv % p;
      ++out[(u % L) * p + t];
    }
    return out;
  }
  for (u64 u = 0; u + 1 < q; ++u) {
    const FieldElement y = f.exp(static_cast<i64>(u * step));
    ++out[(u % L) * p + relative_trace_to_prime(f, y, s_sub)];
  }
  return out;
}

std::vector<i64> subfield_class_trace_tally_serial(const Field& f, unsigned s_sub, u64 L) {
  f.require_subfield_degree(s_sub);
  const std::uint32_t p = f.characteristic();
  u64 q = 1;
  for (unsigned i = 0; i < s_sub; ++i) q *= p;
  if (L == 0 || (q - 1) % L != 0) throw ParameterError("L must divide q-1");
  const FieldElement beta = f.subfield_generator(s_sub);
  std::vector<i64> out(L * p, 0);
  for (u64 i = 0; i < L; ++i) {
    for (u64 k = 0; k < (q - 1) / L; ++k) {
      const FieldElement y = f.pow(beta, i + k * L);
      ++out[i * p + relative_trace_to_prime(f, y, s_sub)];
    }
  }
  return out;
}

std::vector<i64> cross_sums(std::span<const i64> tally_N, u64 N, std::span<const i64> tally_L, u64 L, u64 shift,
                            std::uint32_t p) {
  if (tally_N.size() != N * p || tally_L.size() != L * p) throw ParameterError("cross_sums: tally shape mismatch");
  // Sparse view of the subfield tallies: most rows have few nonzero traces.
  std::vector<std::vector<std::pair<std::uint32_t, i64>>> sparse_L(L);
  for (u64 k = 0; k < L; ++k) {
    for (std::uint32_t t = 0; t < p; ++t) {
      if (const i64 c = tally_L[k * p + t]; c != 0) sparse_L[k].emplace_back(t, c);
    }
  }
  if (shift % N * L % N != 0) throw ParameterError("cross_sums: shift * L must vanish mod N");
  std::vector<std::vector<std::pair<std::uint32_t, i64>>> sparse_N(N);
  for (u64 i = 0; i < N; ++i) {
    for (std::uint32_t t = 0; t < p; ++t) {
      if (const i64 c = tally_N[i * p + t]; c != 0) sparse_N[i].emplace_back(t, c);
    }
  }
  std::vector<i64> out(N * p, 0);
#pragma omp parallel for schedule(dynamic)
  for (i64 js = 0; js < static_cast<i64>(N); ++js) {
    const u64 j = static_cast<u64>(js);
    i64* dst = &out[j * p];
    for (u64 i = 0; i < L; ++i) {
      const u64 row = ((shift % N) * i % N + j) % N;
      if (4 * sparse_N[row].size() < p) {
        for (const auto& [t1, c1] : sparse_N[row]) {
          for (const auto& [t2, c2] : sparse_L[i]) {
            const std::uint32_t t = t1 + t2;
            dst[t >= p ? t - p : t] += c1 * c2;
          }
        }
        continue;
      }
      const i64* a = &tally_N[row * p];
      for (const auto& [t2, c2] : sparse_L[i]) {
        // dst[(t1 + t2) mod p] += a[t1] * c2, split to avoid the modulo
        const std::uint32_t split = p - t2;
        for (std::uint32_t t1 = 0; t1 < split; ++t1) dst[t1 + t2] += a[t1] * c2;
        for (std::uint32_t t1 = split; t1 < p; ++t1) dst[t1 - split] += a[t1] * c2;
      }
    }
  }
  return out;
}

std::vector<CyclotomicInteger> cross_sums_serial(std::span<const i64> tally_N, u64 N, std::span<const i64> tally_L,
                                                 u64 L, u64 shift, std::uint32_t p) {
  std::vector<CyclotomicInteger> eta_N, eta_L;
  for (u64 i = 0; i < N; ++i) eta_N.push_back(CyclotomicInteger::from_tally(p, tally_N.subspan(i * p, p)));
  for (u64 k = 0; k < L; ++k) eta_L.push_back(CyclotomicInteger::from_tally(p, tally_L.subspan(k * p, p)));
  std::vector<CyclotomicInteger> out;
  out.reserve(N * L);
  for (u64 j = 0; j < N; ++j) {
    for (u64 k = 0; k < L; ++k) {
      CyclotomicInteger acc(p);
      for (u64 i = 0; i < L; ++i) acc += eta_N[(shift * i + j) % N] * eta_L[(i + k) % L];
      out.push_back(std::move(acc));
    }
  }
  return out;
}

namespace {

// Weight of the C1 codeword with a = alpha^ea and Tr(b) having compact code c.
u64 c1_weight(const std::vector<std::uint32_t>& tr, u64 ord, u64 ea, u64 N, u64 n, std::uint32_t neg_c) {
  u64 zeros = 0;
  u64 e = ea;
  for (u64 j = 0; j < n; ++j) {
    zeros += tr[e] == neg_c;
    e += N;
    if (e >= ord) e -= ord;
  }
  return n - zeros;
}

// Weight of the C2 codeword with a = alpha^ea, b = alpha^eb (both nonzero).
u64 c2_weight(const std::vector<std::uint32_t>& tr, const std::vector<std::uint32_t>& neg, u64 ord, u64 ea, u64 eb,
              u64 N, u64 n) {
  u64 zeros = 0;
  u64 x = ea, y = eb;
  const u64 step2 = 2 * N % ord;
  for (u64 j = 0; j < n; ++j) {
    zeros += tr[x] == neg[tr[y]];
    x += N;
    if (x >= ord) x -= ord;
    y += step2;
    if (y >= ord) y -= ord;
  }
  return n - zeros;
}

// Weight of sum_j Tr(alpha^e g^(step j)) with the other term zero.
u64 single_weight(const std::vector<std::uint32_t>& tr, u64 ord, u64 e, u64 step, u64 n) {
  u64 zeros = 0;
  step %= ord;
  for (u64 j = 0; j < n; ++j) {
    zeros += tr[e] == 0;
    e += step;
    if (e >= ord) e -= ord;
  }
  return n - zeros;
}

}  // namespace

std::vector<u64> c1_pair_histogram(const SubfieldTraceTable& trt, u64 N, u64 n, Enumeration mode) {
  const auto& tr = trt.by_exponent;
  const u64 ord = tr.size();
  const u64 q = trt.q;
  if (N * n != ord) throw ParameterError("C1 histogram: N n must equal r-1");
  const std::size_t len = n + 1;
  std::vector<std::vector<u64>> parts(static_cast<std::size_t>(thread_count()));

  if (mode == Enumeration::FullB) {
    // b = 0 and b = alpha^eb, with Tr(b) read from the table.
#pragma omp parallel
    {
      auto& local = parts[static_cast<std::size_t>(thread_id())];
      local.assign(len, 0);
#pragma omp for schedule(dynamic)
      for (i64 ebs = -1; ebs < static_cast<i64>(ord); ++ebs) {
        const std::uint32_t c = ebs < 0 ? 0 : tr[static_cast<std::size_t>(ebs)];
        const std::uint32_t neg_c = trt.negate[c];
        ++local[c == 0 ? 0 : n];  // a = 0
        for (u64 ea = 0; ea < ord; ++ea) ++local[c1_weight(tr, ord, ea, N, n, neg_c)];
      }
    }
    return merge(parts, len);
  }

  const u64 a_reps = mode == Enumeration::Orbit ? N : ord;
  const u64 mult = mode == Enumeration::Orbit ? n : 1;
#pragma omp parallel
  {
    auto& local = parts[static_cast<std::size_t>(thread_id())];
    local.assign(len, 0);
    std::vector<u64> symbols(q);
#pragma omp for schedule(dynamic)
    for (i64 eas = 0; eas < static_cast<i64>(a_reps); ++eas) {
      if (mode == Enumeration::Orbit) {
        // One pass tallies Tr(a g^j); the codeword for Tr(b) = c vanishes
        // exactly where Tr(a g^j) = -c.
        std::fill(symbols.begin(), symbols.end(), 0);
        u64 e = static_cast<u64>(eas);
        for (u64 j = 0; j < n; ++j) {
          ++symbols[tr[e]];
          e += N;
          if (e >= ord) e -= ord;
        }
        for (std::uint32_t c = 0; c < q; ++c) local[n - symbols[trt.negate[c]]] += mult;
      } else {
        for (std::uint32_t c = 0; c < q; ++c) {
          local[c1_weight(tr, ord, static_cast<u64>(eas), N, n, trt.negate[c])] += mult;
        }
      }
    }
  }
  auto hist = merge(parts, len);
  // a = 0: constant codeword Tr(b).
  hist[0] += 1;
  hist[n] += q - 1;
  return hist;
}

std::vector<u64> c2_pair_histogram(const SubfieldTraceTable& trt, u64 N, u64 n, Enumeration mode) {
  const auto& tr = trt.by_exponent;
  const u64 ord = tr.size();
  if (N * n != ord) throw ParameterError("C2 histogram: N n must equal r-1");
  if (mode == Enumeration::FullB) throw ParameterError("FullB enumeration applies to C1 only");
  if (n % 2 != 0) throw ParameterError("C2 needs n even");
  const std::size_t len = n + 1;
  std::vector<std::vector<u64>> parts(static_cast<std::size_t>(thread_count()));
  const bool orbit = mode == Enumeration::Orbit;
  const u64 a_reps = orbit ? N : ord;
  const u64 mult = orbit ? n : 1;
#pragma omp parallel
  {
    auto& local = parts[static_cast<std::size_t>(thread_id())];
    local.assign(len, 0);
#pragma omp for schedule(dynamic)
    for (i64 eas = 0; eas < static_cast<i64>(a_reps); ++eas) {
      const u64 ea = static_cast<u64>(eas);
      local[single_weight(tr, ord, ea, N, n)] += mult;  // b = 0
      for (u64 eb = 0; eb < ord; ++eb) local[c2_weight(tr, trt.negate, ord, ea, eb, N, n)] += mult;
    }
  }
  auto hist = merge(parts, len);
  hist[0] += 1;  // a = b = 0
  // a = 0, b != 0: b -> b g^2 has orbits of size n/2 with representatives alpha^i, i < 2N.
  if (orbit) {
    for (u64 i = 0; i < 2 * N; ++i) hist[single_weight(tr, ord, i, 2 * N, n)] += n / 2;
  } else {
    for (u64 eb = 0; eb < ord; ++eb) hist[single_weight(tr, ord, eb, 2 * N, n)] += 1;
  }
  return hist;
}

}  // namespace tracecodes::kernels
