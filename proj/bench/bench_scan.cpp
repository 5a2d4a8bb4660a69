#include <benchmark/benchmark.h>

#include <map>

#include "permpoly/families.hpp"
#include "permpoly/localmethod.hpp"
#include "permpoly/scan.hpp"

using namespace permpoly;

namespace {

// f1 with A = 1 on GF(2^{3m}).
const families::FamilyParams& f1(unsigned m) {
  static std::map<unsigned, families::FamilyParams> cache;
  auto it = cache.find(m);
  if (it == cache.end()) {
    it = cache.emplace(m, families::FamilyParams::make(families::Family::f1, tower::Tower::make(2, m), 1)).first;
  }
  return it->second;
}

scan::PointMap eval_map(const families::FamilyParams& fp) {
  return [poly = families::family_poly(fp)](gf::Code x) { return poly.eval(x); };
}

template <bool Parallel>
void BM_IsPermutation(benchmark::State& state) {
  const auto& fp = f1(static_cast<unsigned>(state.range(0)));
  const auto f = eval_map(fp);
  for (auto _ : state) {
    auto r = Parallel ? scan::parallel::is_permutation(fp.field(), f) : scan::serial::is_permutation(fp.field(), f);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fp.field().order()));
}

template <bool Parallel>
void BM_BruteInverse(benchmark::State& state) {
  const auto& fp = f1(static_cast<unsigned>(state.range(0)));
  const auto f = eval_map(fp);
  for (auto _ : state) {
    auto t = Parallel ? scan::parallel::brute_inverse_table(fp.field(), f)
                      : scan::serial::brute_inverse_table(fp.field(), f);
    benchmark::DoNotOptimize(t);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fp.field().order()));
}

template <bool Parallel>
void BM_LemmaCertify(benchmark::State& state) {
  const auto& fp = f1(static_cast<unsigned>(state.range(0)));
  const auto scheme = localmethod::frobenius_scheme(fp.tower(), families::family_poly(fp),
                                                    localmethod::theorem_combiner(fp));
  for (auto _ : state) {
    auto c = Parallel ? localmethod::lemma_certify(scheme) : localmethod::serial::lemma_certify(scheme);
    benchmark::DoNotOptimize(c);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fp.field().order()));
}

}  // namespace

BENCHMARK(BM_IsPermutation<false>)->Name("is_permutation/serial")->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsPermutation<true>)->Name("is_permutation/parallel")->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BruteInverse<false>)->Name("brute_inverse/serial")->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteInverse<true>)->Name("brute_inverse/parallel")->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LemmaCertify<false>)->Name("lemma_certify/serial")->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LemmaCertify<true>)->Name("lemma_certify/parallel")->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
