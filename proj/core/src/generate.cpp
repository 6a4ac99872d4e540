#include "spikedist/generate.hpp"

#include <algorithm>
#include <cmath>

namespace spikedist {

namespace {

constexpr int kMaxAttempts = 1000000;
constexpr double kCollisionNudge = 1e-6; // ms
constexpr double kSpikeTol = 1e-9;       // ms, generation-time dedup

std::uint64_t splitmix64(std::uint64_t x)
{
	x += 0x9e3779b97f4a7c15ULL;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
	return x ^ (x >> 31);
}

// Sorts and pushes collided spikes apart, keeping everything inside bounds.
std::vector<double> separate(std::vector<double> times, const Bounds &bounds)
{
	std::sort(times.begin(), times.end());
	for (std::size_t i = 1; i < times.size(); ++i) {
		if (times[i] - times[i - 1] < kCollisionNudge) {
			times[i] = times[i - 1] + kCollisionNudge;
		}
	}
	// Forward nudges may overshoot b; walk back from the end.
	double ceiling = bounds.b;
	for (std::size_t i = times.size(); i-- > 0;) {
		if (times[i] > ceiling) {
			times[i] = ceiling;
		}
		ceiling = times[i] - kCollisionNudge;
	}
	return times;
}

} // namespace

std::mt19937_64 make_stream(std::uint64_t master_seed, std::uint64_t index)
{
	return std::mt19937_64(splitmix64(master_seed ^ splitmix64(index)));
}

SpikeTrain gen_poisson(const GenConfig &cfg, std::mt19937_64 &rng)
{
	if (!(cfg.rate_hz > 0.0) || !(cfg.duration_ms > 0.0)) {
		throw ParamError("rate and duration must be positive");
	}
	std::exponential_distribution<double> gap(cfg.rate_hz / 1000.0); // events per ms
	Bounds bounds(0.0, cfg.duration_ms);
	for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
		std::vector<double> times;
		double t = gap(rng);
		while (t <= cfg.duration_ms) {
			if (times.empty() || t - times.back() >= kSpikeTol) {
				times.push_back(t);
			}
			t += gap(rng);
		}
		if (times.empty()) {
			continue;
		}
		if (cfg.required_count && static_cast<int>(times.size()) != *cfg.required_count) {
			continue;
		}
		return SpikeTrain::validate(std::move(times), bounds);
	}
	throw RejectionExhausted("gen_poisson: no acceptable train after 1e6 attempts");
}

SpikeTrain gen_poisson(const GenConfig &cfg)
{
	auto rng = make_stream(cfg.seed, 0);
	return gen_poisson(cfg, rng);
}

SpikeTrain perturb(const SpikeTrain &train, const Bounds &bounds, double sigma, double p,
                   std::mt19937_64 &rng)
{
	if (!(sigma >= 0.0) || !(p >= 0.0) || !(p <= 1.0)) {
		throw ParamError("perturb requires sigma >= 0 and p in [0, 1]");
	}
	if (sigma == 0.0 && p == 0.0) {
		return train;
	}
	std::uniform_real_distribution<double> unit(0.0, 1.0);
	std::normal_distribution<double> noise(0.0, sigma);
	for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
		std::vector<double> survivors;
		survivors.reserve(train.size());
		for (double t : train.times()) {
			if (p == 0.0 || unit(rng) >= p) {
				survivors.push_back(t);
			}
		}
		if (survivors.empty()) {
			continue; // train must stay nonempty
		}
		if (sigma > 0.0) {
			for (double &t : survivors) {
				t = std::clamp(t + noise(rng), bounds.a, bounds.b);
			}
		}
		return SpikeTrain::validate(separate(std::move(survivors), bounds), bounds);
	}
	throw RejectionExhausted("perturb: every attempt removed all spikes");
}

SpikeTrain gen_uniform(int n, double mean_isi, std::mt19937_64 &rng)
{
	if (n < 1 || !(mean_isi > 0.0)) {
		throw ParamError("gen_uniform requires n >= 1 and a positive mean ISI");
	}
	Bounds bounds(0.0, static_cast<double>(n) * mean_isi);
	std::uniform_real_distribution<double> pick(bounds.a, bounds.b);
	std::vector<double> times(static_cast<std::size_t>(n));
	for (double &t : times) {
		t = pick(rng);
	}
	return SpikeTrain::validate(separate(std::move(times), bounds), bounds);
}

} // namespace spikedist
