#pragma once

#include <span>
#include <vector>

#include "spikedist/errors.hpp"

namespace spikedist {

/// Integration interval [a, b] in ms. Every spike train used with these
/// bounds must lie inside the interval.
struct Bounds {
	double a;
	double b;

	Bounds(double a_, double b_);

	double width() const { return b - a; }
	bool contains(double t) const { return a <= t && t <= b; }
};

/// What to do with coincident spikes during validation. Reject keeps the
/// metric axioms intact; Merge collapses duplicates; Keep retains them,
/// turning the profile-based distances into pseudo-metrics.
enum class DuplicatePolicy { Reject, Merge, Keep };

/// An ordered, bounded, nonempty list of spike times in ms.
class SpikeTrain {
public:
	static SpikeTrain validate(std::vector<double> times, const Bounds &bounds,
	                           DuplicatePolicy policy = DuplicatePolicy::Reject);

	/// Construction from times already known to be sorted and in bounds.
	static SpikeTrain from_sorted_unchecked(std::vector<double> times);

	std::size_t size() const { return times_.size(); }
	const std::vector<double> &times() const { return times_; }
	double operator[](std::size_t i) const { return times_[i]; }
	double front() const { return times_.front(); }
	double back() const { return times_.back(); }

	bool operator==(const SpikeTrain &other) const { return times_ == other.times_; }

private:
	SpikeTrain() = default;
	std::vector<double> times_;
};

/// d(x, T): distance from an arbitrary timing to the nearest spike.
double point_distance(double x, const SpikeTrain &train);

/// Same, over a raw sorted span (used by hot loops).
double point_distance(double x, std::span<const double> times);

/// Smallest interval covering every train: [min first spike, max last spike].
Bounds extreme_bounds(std::span<const SpikeTrain> trains);

} // namespace spikedist
