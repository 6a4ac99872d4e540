#include "spikedist/profile.hpp"

#include <algorithm>
#include <cmath>

namespace spikedist {

namespace {
constexpr double kDedupTol = 1e-12;
} // namespace

double Profile::max_phi() const
{
	double best = 0.0;
	for (const auto &pt : points) {
		best = std::max(best, pt.phi);
	}
	return best;
}

double Profile::interpolate(double s) const
{
	auto it = std::lower_bound(points.begin(), points.end(), s,
	                           [](const ProfilePoint &p, double v) { return p.s < v; });
	if (it == points.end()) {
		return points.back().phi;
	}
	if (it == points.begin() || it->s == s) {
		return it->phi;
	}
	const auto &hi = *it;
	const auto &lo = *(it - 1);
	double w = (s - lo.s) / (hi.s - lo.s);
	return lo.phi + w * (hi.phi - lo.phi);
}

std::vector<double> merge_sorted_unique(std::vector<double> values)
{
	std::sort(values.begin(), values.end());
	std::vector<double> out;
	out.reserve(values.size());
	for (double v : values) {
		if (out.empty() || v - out.back() >= kDedupTol) {
			out.push_back(v);
		}
	}
	return out;
}

std::vector<double> breakpoints(const SpikeTrain &train, const SpikeTrain &other,
                                const Bounds &bounds)
{
	const auto &t1 = train.times();
	const auto &t2 = other.times();
	std::vector<double> pts;
	pts.reserve(2 * (t1.size() + t2.size()) + 2);
	pts.push_back(bounds.a);
	pts.push_back(bounds.b);
	pts.insert(pts.end(), t1.begin(), t1.end());
	pts.insert(pts.end(), t2.begin(), t2.end());
	for (std::size_t i = 1; i < t1.size(); ++i) {
		pts.push_back(0.5 * (t1[i - 1] + t1[i]));
	}
	for (std::size_t i = 1; i < t2.size(); ++i) {
		pts.push_back(0.5 * (t2[i - 1] + t2[i]));
	}
	// Cross-train midpoints: consecutive entries of the merged sequence that
	// come from different trains.
	std::size_t i1 = 0;
	std::size_t i2 = 0;
	double prev = 0.0;
	int prev_train = 0;
	while (i1 < t1.size() || i2 < t2.size()) {
		int cur_train;
		double cur;
		if (i2 == t2.size() || (i1 < t1.size() && t1[i1] <= t2[i2])) {
			cur = t1[i1++];
			cur_train = 1;
		} else {
			cur = t2[i2++];
			cur_train = 2;
		}
		if (prev_train != 0 && prev_train != cur_train) {
			pts.push_back(0.5 * (prev + cur));
		}
		prev = cur;
		prev_train = cur_train;
	}
	return merge_sorted_unique(std::move(pts));
}

Profile profile(const SpikeTrain &train, const SpikeTrain &other, const Bounds &bounds)
{
	Profile p;
	auto pts = breakpoints(train, other, bounds);
	p.points.reserve(pts.size());
	for (double s : pts) {
		p.points.push_back({s, std::abs(point_distance(s, train) - point_distance(s, other))});
	}
	return p;
}

double integrate_profile(const Profile &p)
{
	double total = 0.0;
	for (std::size_t i = 1; i < p.points.size(); ++i) {
		total += (p.points[i].s - p.points[i - 1].s) *
		         (p.points[i].phi + p.points[i - 1].phi) * 0.5;
	}
	return total;
}

Profile suffix_max_profile(const Profile &p)
{
	const auto &pts = p.points;
	std::vector<ProfilePoint> rev; // built right to left
	double running = pts.back().phi;
	rev.push_back(pts.back());
	for (std::size_t k = pts.size() - 1; k > 0; --k) {
		const auto &right = pts[k];
		const auto &left = pts[k - 1];
		if (left.phi <= running) {
			// The running max dominates the whole segment.
			if (rev.back().s != left.s) {
				rev.push_back({left.s, running});
			}
		} else {
			// phi exceeds the running max somewhere in the segment; since
			// left.phi > running >= right.phi, phi decreases rightward and
			// crosses the running level once.
			if (running > right.phi) {
				double w = (running - right.phi) / (left.phi - right.phi);
				double sc = right.s + w * (left.s - right.s);
				if (sc > left.s && sc < right.s) {
					rev.push_back({sc, running});
				}
			}
			rev.push_back(left);
			running = left.phi;
		}
	}
	Profile out;
	out.points.assign(rev.rbegin(), rev.rend());
	return out;
}

} // namespace spikedist
