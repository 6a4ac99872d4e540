// Microbenchmarks for the distance implementations. Trains are uniform with
// a 35 ms mean ISI, so the observation interval grows with the spike count.

#include <benchmark/benchmark.h>

#include "spikedist/baselines.hpp"
#include "spikedist/generate.hpp"
#include "spikedist/metrics.hpp"

using namespace spikedist;

namespace {

constexpr double kMeanIsi = 35.0;

struct Pair {
	SpikeTrain a;
	SpikeTrain b;
	Bounds bounds;
};

Pair make_pair_of(int n)
{
	auto rng = make_stream(99, static_cast<std::uint64_t>(n));
	return {gen_uniform(n, kMeanIsi, rng), gen_uniform(n, kMeanIsi, rng),
	        Bounds(0.0, n * kMeanIsi)};
}

void bm_modulus_alg1(benchmark::State &state)
{
	auto p = make_pair_of(static_cast<int>(state.range(0)));
	for (auto _ : state) {
		benchmark::DoNotOptimize(modulus_metric_alg1(p.a, p.b, p.bounds));
	}
}

void bm_modulus_alg2(benchmark::State &state)
{
	auto p = make_pair_of(static_cast<int>(state.range(0)));
	for (auto _ : state) {
		benchmark::DoNotOptimize(modulus_metric_alg2(p.a, p.b, p.bounds));
	}
}

void bm_hausdorff(benchmark::State &state)
{
	auto p = make_pair_of(static_cast<int>(state.range(0)));
	for (auto _ : state) {
		benchmark::DoNotOptimize(hausdorff(p.a, p.b, p.bounds));
	}
}

void bm_max_metric(benchmark::State &state)
{
	auto p = make_pair_of(static_cast<int>(state.range(0)));
	auto h = KernelH::exponential(10.0);
	for (auto _ : state) {
		benchmark::DoNotOptimize(max_metric(p.a, p.b, p.bounds, h));
	}
}

void bm_localized_max(benchmark::State &state)
{
	auto p = make_pair_of(static_cast<int>(state.range(0)));
	auto l = KernelL::exponential(20.0);
	for (auto _ : state) {
		benchmark::DoNotOptimize(localized_max_metric(p.a, p.b, p.bounds, l));
	}
}

void bm_van_rossum_exact(benchmark::State &state)
{
	auto p = make_pair_of(static_cast<int>(state.range(0)));
	for (auto _ : state) {
		benchmark::DoNotOptimize(van_rossum_exact(p.a, p.b, 10.0));
	}
}

void bm_van_rossum_discrete(benchmark::State &state)
{
	auto p = make_pair_of(static_cast<int>(state.range(0)));
	for (auto _ : state) {
		benchmark::DoNotOptimize(van_rossum_discrete(p.a, p.b, 10.0, p.bounds));
	}
}

void bm_victor_purpura(benchmark::State &state)
{
	auto p = make_pair_of(static_cast<int>(state.range(0)));
	VPParams q(0.2);
	for (auto _ : state) {
		benchmark::DoNotOptimize(victor_purpura(p.a, p.b, q));
	}
}

void bm_kreuz_spike(benchmark::State &state)
{
	auto p = make_pair_of(static_cast<int>(state.range(0)));
	for (auto _ : state) {
		benchmark::DoNotOptimize(kreuz_spike(p.a, p.b, p.bounds));
	}
}

} // namespace

BENCHMARK(bm_modulus_alg1)->RangeMultiplier(4)->Range(8, 512);
BENCHMARK(bm_modulus_alg2)->RangeMultiplier(4)->Range(8, 512);
BENCHMARK(bm_hausdorff)->RangeMultiplier(4)->Range(8, 512);
BENCHMARK(bm_max_metric)->RangeMultiplier(4)->Range(8, 128);
BENCHMARK(bm_localized_max)->RangeMultiplier(4)->Range(8, 512);
BENCHMARK(bm_van_rossum_exact)->RangeMultiplier(4)->Range(8, 512);
BENCHMARK(bm_van_rossum_discrete)->RangeMultiplier(4)->Range(8, 512);
BENCHMARK(bm_victor_purpura)->RangeMultiplier(4)->Range(8, 512);
BENCHMARK(bm_kreuz_spike)->RangeMultiplier(4)->Range(8, 512);

BENCHMARK_MAIN();
