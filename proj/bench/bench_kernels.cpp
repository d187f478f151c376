// Parallel kernels against their serial references.
//
//   ./build/bench/bench_kernels --benchmark_filter=Tally
//   OMP_NUM_THREADS=4 ./build/bench/bench_kernels

#include <benchmark/benchmark.h>

#include <map>

#include "tracecodes/codes.hpp"
#include "tracecodes/kernels.hpp"

using namespace tracecodes;
namespace k = tracecodes::kernels;

namespace {

// Fields are built once per (p, n); log tables dominate setup otherwise.
const Field& field(u64 p, unsigned n) {
  static std::map<std::pair<u64, unsigned>, Field> cache;
  auto it = cache.find({p, n});
  if (it == cache.end()) it = cache.emplace(std::pair{p, n}, build_field(p, n)).first;
  return it->second;
}

void BM_TallySerial(benchmark::State& state) {
  const Field& f = field(2, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(k::class_trace_tally_serial(f, 3));
  state.SetItemsProcessed(static_cast<i64>(state.iterations() * f.group_order()));
}

void BM_TallyParallel(benchmark::State& state) {
  const Field& f = field(2, static_cast<unsigned>(state.range(0)));
  const auto tr = k::prime_trace_table(f);
  for (auto _ : state) benchmark::DoNotOptimize(k::class_trace_tally(f, 3, tr));
  state.SetItemsProcessed(static_cast<i64>(state.iterations() * f.group_order()));
}

struct CrossInput {
  std::vector<i64> tN, tL;
  u64 N, L, shift;
  std::uint32_t p;
};

// GF(q) = GF(r): m = 1, d = 1, L = N.
CrossInput cross_input(u64 p, u64 N) {
  const Field& f = field(p, 1);
  const auto spec = CodeSpec::make(Variant::C1, p, 1, 1, N);
  return {k::class_trace_tally(f, N), k::subfield_class_trace_tally_serial(f, 1, N), N, N,
          spec.subfield_step() % N, static_cast<std::uint32_t>(p)};
}

void BM_CrossSumsSerial(benchmark::State& state) {
  const auto in = cross_input(static_cast<u64>(state.range(0)), static_cast<u64>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(k::cross_sums_serial(in.tN, in.N, in.tL, in.L, in.shift, in.p));
}

void BM_CrossSumsParallel(benchmark::State& state) {
  const auto in = cross_input(static_cast<u64>(state.range(0)), static_cast<u64>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(k::cross_sums(in.tN, in.N, in.tL, in.L, in.shift, in.p));
}

void histogram(benchmark::State& state, k::Enumeration mode) {
  const auto spec = CodeSpec::make(Variant::C1, 3, 1, static_cast<unsigned>(state.range(0)), 2);
  const Field& f = field(3, spec.m);
  const auto tr = k::subfield_trace_table(f, 1);
  for (auto _ : state) benchmark::DoNotOptimize(k::c1_pair_histogram(tr, spec.N, spec.n, mode));
  state.SetItemsProcessed(static_cast<i64>(state.iterations() * spec.pair_total()));
}

void BM_HistogramFull(benchmark::State& state) { histogram(state, k::Enumeration::Full); }
void BM_HistogramOrbit(benchmark::State& state) { histogram(state, k::Enumeration::Orbit); }

void BM_OracleReference(benchmark::State& state) {
  const Code code(CodeSpec::make(Variant::C1, 3, 1, static_cast<unsigned>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_distribution_reference(code));
  state.SetItemsProcessed(static_cast<i64>(state.iterations() * code.spec().pair_total()));
}

}  // namespace

BENCHMARK(BM_TallySerial)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TallyParallel)->Arg(14)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossSumsSerial)->Args({1009, 8})->Args({2003, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossSumsParallel)->Args({1009, 8})->Args({2003, 7})->Args({8191, 90})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramFull)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramOrbit)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleReference)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
