#include "spikedist/train.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spikedist {

namespace {
// Two spike times closer than this are considered the same instant.
constexpr double kCoincidenceTol = 1e-12;
} // namespace

Bounds::Bounds(double a_, double b_) : a(a_), b(b_)
{
	if (!std::isfinite(a) || !std::isfinite(b)) {
		throw ValidationError(ValidationError::Kind::NonFinite, "bounds must be finite");
	}
	if (!(a < b)) {
		throw ValidationError(ValidationError::Kind::OutOfBounds, "bounds require a < b");
	}
}

SpikeTrain SpikeTrain::validate(std::vector<double> times, const Bounds &bounds,
                                DuplicatePolicy policy)
{
	if (times.empty()) {
		throw ValidationError(ValidationError::Kind::Empty, "spike train is empty");
	}
	for (double t : times) {
		if (!std::isfinite(t)) {
			throw ValidationError(ValidationError::Kind::NonFinite,
			                      "spike train contains a non-finite time");
		}
	}
	for (std::size_t i = 1; i < times.size(); ++i) {
		if (times[i] < times[i - 1]) {
			throw ValidationError(ValidationError::Kind::NotSorted,
			                      "spike times are not sorted");
		}
		if (times[i] - times[i - 1] < kCoincidenceTol) {
			switch (policy) {
			case DuplicatePolicy::Reject:
				throw ValidationError(ValidationError::Kind::Duplicate,
				                      "duplicate spike time " + std::to_string(times[i]));
			case DuplicatePolicy::Merge:
			case DuplicatePolicy::Keep:
				break;
			}
		}
	}
	if (policy == DuplicatePolicy::Merge) {
		std::vector<double> merged;
		merged.reserve(times.size());
		for (double t : times) {
			if (merged.empty() || t - merged.back() >= kCoincidenceTol) {
				merged.push_back(t);
			}
		}
		times = std::move(merged);
	}
	if (times.front() < bounds.a || times.back() > bounds.b) {
		throw ValidationError(ValidationError::Kind::OutOfBounds,
		                      "spike outside [" + std::to_string(bounds.a) + ", " +
		                          std::to_string(bounds.b) + "]");
	}
	SpikeTrain train;
	train.times_ = std::move(times);
	return train;
}

SpikeTrain SpikeTrain::from_sorted_unchecked(std::vector<double> times)
{
	SpikeTrain train;
	train.times_ = std::move(times);
	return train;
}

double point_distance(double x, std::span<const double> times)
{
	auto it = std::lower_bound(times.begin(), times.end(), x);
	double best = std::numeric_limits<double>::infinity();
	if (it != times.end()) {
		best = *it - x;
	}
	if (it != times.begin()) {
		best = std::min(best, x - *(it - 1));
	}
	return best;
}

double point_distance(double x, const SpikeTrain &train)
{
	return point_distance(x, std::span<const double>(train.times()));
}

Bounds extreme_bounds(std::span<const SpikeTrain> trains)
{
	if (trains.empty()) {
		throw ValidationError(ValidationError::Kind::Empty, "no trains to derive bounds from");
	}
	double a = trains[0].front();
	double b = trains[0].back();
	for (const auto &train : trains) {
		a = std::min(a, train.front());
		b = std::max(b, train.back());
	}
	if (!(a < b)) {
		// Degenerate case: all spikes coincide; open up a minimal interval.
		b = a + 1.0;
	}
	return Bounds(a, b);
}

} // namespace spikedist
