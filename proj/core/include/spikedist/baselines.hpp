#pragma once

#include "spikedist/metrics.hpp"
#include "spikedist/train.hpp"

namespace spikedist {

/// Victor & Purpura shift cost per ms; q = 0 counts spikes, large q counts
/// non-coincident spikes.
struct VPParams {
	double q = 0.2; // ms^-1

	VPParams() = default;
	explicit VPParams(double q_);
};

/// |n - nbar| / max(n, nbar), in [0, 1).
double spike_count_distance(const SpikeTrain &train, const SpikeTrain &other);

/// Van Rossum distance (integral of the squared difference of causally
/// filtered trains), exact via the pairwise-exponential closed form with a
/// linear-time markage recursion. Result in ms.
double van_rossum_exact(const SpikeTrain &train, const SpikeTrain &other, double tau);

/// Van Rossum distance by discrete-time trapezoid integration on
/// [a, b + 8 tau]; a documented approximation.
double van_rossum_discrete(const SpikeTrain &train, const SpikeTrain &other, double tau,
                           const Bounds &bounds, const GridSpec &grid = {});

/// Victor & Purpura edit distance, O(n * nbar) dynamic program.
double victor_purpura(const SpikeTrain &train, const SpikeTrain &other, const VPParams &params);

/// Schreiber et al. correlation distance: 1 - cosine similarity of
/// Gaussian-filtered trains sampled on the grid. In [0, 1].
double schreiber_distance(const SpikeTrain &train, const SpikeTrain &other, double sigma,
                          const Bounds &bounds, const GridSpec &grid = {});

/// Kreuz ISI-distance: time average of the normalized instantaneous ISI
/// dissimilarity; auxiliary edge spikes at a and b are added first. In [0, 1].
double kreuz_isi(const SpikeTrain &train, const SpikeTrain &other, const Bounds &bounds,
                 const GridSpec &grid = {});

/// Kreuz improved SPIKE-distance, same conventions as kreuz_isi. In [0, 1].
double kreuz_spike(const SpikeTrain &train, const SpikeTrain &other, const Bounds &bounds,
                   const GridSpec &grid = {});

} // namespace spikedist
