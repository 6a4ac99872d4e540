#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "spikedist/train.hpp"

namespace spikedist {

/// Stochastic spike-train generation parameters.
struct GenConfig {
	double rate_hz = 100.0;
	double duration_ms = 200.0;
	std::uint64_t seed = 0;
	double jitter_sigma = 0.0; // ms, standard deviation
	double removal_p = 0.0;    // per-spike removal probability
	std::optional<int> required_count;
};

/// Deterministic per-trial RNG stream derived from (master seed, index), so
/// trials can run in any order.
std::mt19937_64 make_stream(std::uint64_t master_seed, std::uint64_t index);

/// Homogeneous Poisson train on [0, duration]; rejection-samples when
/// required_count is set. Deterministic per seed.
SpikeTrain gen_poisson(const GenConfig &cfg);
SpikeTrain gen_poisson(const GenConfig &cfg, std::mt19937_64 &rng);

/// Removes each spike with probability p, then jitters survivors with
/// N(0, sigma^2), clamping to bounds and separating collisions by 1e-6 ms
/// nudges. Resamples if everything is removed.
SpikeTrain perturb(const SpikeTrain &train, const Bounds &bounds, double sigma, double p,
                   std::mt19937_64 &rng);

/// n spike times uniform on [0, n * mean_isi], strictly increasing.
SpikeTrain gen_uniform(int n, double mean_isi, std::mt19937_64 &rng);

} // namespace spikedist
