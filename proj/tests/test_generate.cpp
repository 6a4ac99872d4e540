#include "doctest.h"

#include "spikedist/generate.hpp"

using namespace spikedist;

TEST_CASE("streams are deterministic and independent per index")
{
	auto a = make_stream(42, 0);
	auto b = make_stream(42, 0);
	auto c = make_stream(42, 1);
	CHECK(a() == b());
	CHECK(a() == b());
	auto a2 = make_stream(42, 0);
	CHECK(a2() != c());
}

TEST_CASE("poisson generation is deterministic per seed and respects bounds")
{
	GenConfig cfg;
	cfg.seed = 7;
	auto t1 = gen_poisson(cfg);
	auto t2 = gen_poisson(cfg);
	CHECK(t1 == t2);
	for (double t : t1.times()) {
		CHECK(t >= 0.0);
		CHECK(t <= cfg.duration_ms);
	}
	cfg.seed = 8;
	CHECK_FALSE(gen_poisson(cfg) == t1);
}

TEST_CASE("poisson rate is roughly honored")
{
	GenConfig cfg;
	cfg.rate_hz = 100.0;
	cfg.duration_ms = 200.0; // expectation: 20 spikes
	double total = 0.0;
	for (std::uint64_t i = 0; i < 200; ++i) {
		cfg.seed = i;
		total += static_cast<double>(gen_poisson(cfg).size());
	}
	CHECK(total / 200.0 == doctest::Approx(20.0).epsilon(0.15));
}

TEST_CASE("required_count rejection-samples to an exact spike count")
{
	GenConfig cfg;
	cfg.rate_hz = 20.0;
	cfg.duration_ms = 500.0;
	cfg.required_count = 10;
	for (std::uint64_t i = 0; i < 20; ++i) {
		cfg.seed = i;
		CHECK(gen_poisson(cfg).size() == 10);
	}
}

TEST_CASE("perturb with no noise returns the train unchanged")
{
	Bounds b(0, 200);
	auto t = SpikeTrain::validate({10, 20, 30}, b);
	auto rng = make_stream(1, 1);
	CHECK(perturb(t, b, 0.0, 0.0, rng) == t);
}

TEST_CASE("perturb keeps counts under pure jitter and clamps to bounds")
{
	Bounds b(0, 200);
	GenConfig cfg;
	cfg.seed = 11;
	auto t = gen_poisson(cfg);
	auto rng = make_stream(2, 3);
	auto jittered = perturb(t, b, 5.0, 0.0, rng);
	CHECK(jittered.size() == t.size());
	for (double x : jittered.times()) {
		CHECK(b.contains(x));
	}
	for (std::size_t i = 1; i < jittered.size(); ++i) {
		CHECK(jittered[i] > jittered[i - 1]);
	}
}

TEST_CASE("perturb removal shrinks trains but never empties them")
{
	Bounds b(0, 200);
	GenConfig cfg;
	cfg.seed = 13;
	auto t = gen_poisson(cfg);
	double kept = 0.0;
	for (std::uint64_t i = 0; i < 100; ++i) {
		auto rng = make_stream(5, i);
		auto p = perturb(t, b, 0.0, 0.5, rng);
		CHECK(p.size() >= 1);
		CHECK(p.size() <= t.size());
		kept += static_cast<double>(p.size());
	}
	CHECK(kept / 100.0 == doctest::Approx(0.5 * static_cast<double>(t.size())).epsilon(0.2));

	auto rng = make_stream(5, 0);
	CHECK_THROWS_AS(perturb(t, b, 0.0, 1.0, rng), RejectionExhausted);
	CHECK_THROWS_AS(perturb(t, b, -1.0, 0.0, rng), ParamError);
	CHECK_THROWS_AS(perturb(t, b, 0.0, 1.5, rng), ParamError);
}

TEST_CASE("uniform trains for the speed benchmark")
{
	auto rng = make_stream(3, 3);
	auto t = gen_uniform(100, 35.0, rng);
	CHECK(t.size() == 100);
	for (std::size_t i = 1; i < t.size(); ++i) {
		CHECK(t[i] > t[i - 1]);
	}
	CHECK(t.front() >= 0.0);
	CHECK(t.back() <= 100.0 * 35.0);
}
