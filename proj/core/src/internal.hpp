#pragma once

// Shared numeric helpers for the metric implementations. Internal to the
// library; not installed.

#include <cmath>
#include <cstddef>
#include <vector>

#include "spikedist/train.hpp"

namespace spikedist::detail {

// Identical inputs must give exactly zero; the integration paths would
// otherwise leave rounding residue of order 1e-14.
inline bool same_times(const SpikeTrain &a, const SpikeTrain &b)
{
	return a.times() == b.times();
}

inline double trapezoid(const std::vector<double> &xs, const std::vector<double> &q)
{
	double total = 0.0;
	for (std::size_t i = 1; i < xs.size(); ++i) {
		total += (xs[i] - xs[i - 1]) * (q[i] + q[i - 1]) * 0.5;
	}
	return total;
}

// Causal exponentially filtered train g(s) = sum_i H(s - t_i) exp(-(s-t_i)/tau)
// sampled just before and just after each grid point; g jumps by 1 at spikes.
inline void causal_filtered(const std::vector<double> &xs, const std::vector<double> &spikes,
                            double tau, std::vector<double> &before, std::vector<double> &after)
{
	constexpr double kEdge = 1e-9;
	before.assign(xs.size(), 0.0);
	after.assign(xs.size(), 0.0);
	double g = 0.0;
	std::size_t k = 0;
	for (std::size_t i = 0; i < xs.size(); ++i) {
		if (i > 0) {
			g *= std::exp(-(xs[i] - xs[i - 1]) / tau);
		}
		while (k < spikes.size() && spikes[k] < xs[i] - kEdge) {
			g += std::exp(-(xs[i] - spikes[k]) / tau);
			++k;
		}
		before[i] = g;
		while (k < spikes.size() && spikes[k] <= xs[i] + kEdge) {
			g += std::exp(-(xs[i] - spikes[k]) / tau);
			++k;
		}
		after[i] = g;
	}
}

} // namespace spikedist::detail
