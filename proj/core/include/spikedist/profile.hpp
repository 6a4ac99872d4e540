#pragma once

#include <vector>

#include "spikedist/train.hpp"

namespace spikedist {

struct ProfilePoint {
	double s;   // ms
	double phi; // ms
};

/// The piecewise-linear function phi(s) = |d(s,T) - d(s,Tbar)| sampled at a
/// complete set of breakpoints: the true function is linear between
/// consecutive points.
struct Profile {
	std::vector<ProfilePoint> points;

	double max_phi() const;

	/// Linear interpolation; s must lie within [front.s, back.s].
	double interpolate(double s) const;
};

/// The breakpoint set P of phi: all spikes of both trains, midpoints of
/// neighboring same-train spike pairs, midpoints of neighboring cross-train
/// spike pairs, and the bounds. Sorted, deduplicated at 1e-12 ms.
std::vector<double> breakpoints(const SpikeTrain &train, const SpikeTrain &other,
                                const Bounds &bounds);

/// phi evaluated at every breakpoint.
Profile profile(const SpikeTrain &train, const SpikeTrain &other, const Bounds &bounds);

/// Exact trapezoid integral of a piecewise-linear profile, in ms^2.
double integrate_profile(const Profile &p);

/// The running maximum from the right, M(s) = sup_{x in [s, b]} phi(x),
/// returned as its own piecewise-linear profile. Exact: segment interiors
/// contribute only where phi is decreasing, handled via crossing points.
Profile suffix_max_profile(const Profile &p);

/// Sorted union of values, merging entries closer than 1e-12.
std::vector<double> merge_sorted_unique(std::vector<double> values);

} // namespace spikedist
