#include "spikedist/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "internal.hpp"

namespace spikedist {

using detail::trapezoid;

namespace {

// Causal/anticausal running sums of exp(-|x - t|/tau) over the sorted grid;
// safe against overflow for wide intervals.
std::vector<double> filtered_train(const std::vector<double> &xs, const std::vector<double> &spikes,
                                   double tau)
{
	std::vector<double> f(xs.size(), 0.0);
	double sum = 0.0;
	std::size_t k = 0;
	for (std::size_t i = 0; i < xs.size(); ++i) {
		if (i > 0) {
			sum *= std::exp(-(xs[i] - xs[i - 1]) / tau);
		}
		while (k < spikes.size() && spikes[k] <= xs[i]) {
			sum += std::exp(-(xs[i] - spikes[k]) / tau);
			++k;
		}
		f[i] = sum;
	}
	sum = 0.0;
	k = spikes.size();
	for (std::size_t i = xs.size(); i-- > 0;) {
		if (i + 1 < xs.size()) {
			sum *= std::exp(-(xs[i + 1] - xs[i]) / tau);
		}
		while (k > 0 && spikes[k - 1] > xs[i]) {
			sum += std::exp(-(spikes[k - 1] - xs[i]) / tau);
			--k;
		}
		f[i] += sum;
	}
	return f;
}

// Integral over s of sup_x { values[x] * H(|s-x|) } with both s and x
// running over the same grid.
double sup_weighted_integral(const std::vector<double> &xs, const std::vector<double> &values,
                             const KernelH &kernel)
{
	std::vector<double> q(xs.size(), 0.0);
	for (std::size_t i = 0; i < xs.size(); ++i) {
		double s = xs[i];
		double best = 0.0;
		for (std::size_t j = 0; j < xs.size(); ++j) {
			double w = values[j] * kernel(std::abs(s - xs[j]));
			if (w > best) {
				best = w;
			}
		}
		q[i] = best;
	}
	return trapezoid(xs, q);
}

} // namespace

std::vector<double> build_grid(const Bounds &bounds, const GridSpec &grid,
                               std::vector<double> extras)
{
	if (!(grid.step > 0.0) || !std::isfinite(grid.step)) {
		throw GridError("grid step must be positive and finite");
	}
	if (grid.step > bounds.width()) {
		throw GridError("grid step exceeds the integration interval");
	}
	auto count = static_cast<std::size_t>(std::floor(bounds.width() / grid.step));
	std::vector<double> pts;
	pts.reserve(count + 2 + extras.size());
	for (std::size_t i = 0; i <= count; ++i) {
		pts.push_back(std::min(bounds.a + static_cast<double>(i) * grid.step, bounds.b));
	}
	pts.push_back(bounds.b);
	pts.insert(pts.end(), extras.begin(), extras.end());
	return merge_sorted_unique(std::move(pts));
}

double hausdorff(const SpikeTrain &train, const SpikeTrain &other, const Bounds &bounds)
{
	if (detail::same_times(train, other)) {
		return 0.0;
	}
	return profile(train, other, bounds).max_phi();
}

double modulus_metric_alg1(const SpikeTrain &train, const SpikeTrain &other,
                           const Bounds &bounds)
{
	if (detail::same_times(train, other)) {
		return 0.0;
	}
	const auto &t1 = train.times();
	const auto &t2 = other.times();
	const std::size_t n1 = t1.size();
	const std::size_t n2 = t2.size();

	std::vector<double> merged;
	merged.reserve(n1 + n2);
	std::merge(t1.begin(), t1.end(), t2.begin(), t2.end(), std::back_inserter(merged));

	std::vector<double> pts;
	pts.reserve(3 * merged.size() + 2);
	pts.insert(pts.end(), merged.begin(), merged.end());
	for (std::size_t i = 1; i < n1; ++i) {
		pts.push_back(0.5 * (t1[i] + t1[i - 1]));
	}
	for (std::size_t i = 1; i < n2; ++i) {
		pts.push_back(0.5 * (t2[i] + t2[i - 1]));
	}
	for (std::size_t i = 1; i < merged.size(); ++i) {
		pts.push_back(0.5 * (merged[i] + merged[i - 1]));
	}
	pts.push_back(bounds.a);
	pts.push_back(bounds.b);
	std::sort(pts.begin(), pts.end());

	double total = 0.0;
	std::size_t i1 = 0;
	std::size_t i2 = 0;
	double s_prev = bounds.a;
	double phi_prev = std::abs(t1[0] - t2[0]);
	for (double s : pts) {
		if (s <= s_prev && s != bounds.a) {
			continue; // duplicate point, zero-width cell
		}
		while (s >= t1[i1] && i1 < n1 - 1) {
			++i1;
		}
		while (s >= t2[i2] && i2 < n2 - 1) {
			++i2;
		}
		double d1 = bounds.width();
		if (i1 > 0) {
			d1 = s - t1[i1 - 1];
		}
		d1 = std::min(d1, std::abs(t1[i1] - s));
		double d2 = bounds.width();
		if (i2 > 0) {
			d2 = s - t2[i2 - 1];
		}
		d2 = std::min(d2, std::abs(t2[i2] - s));
		double phi = std::abs(d1 - d2);
		total += (s - s_prev) * (phi + phi_prev) * 0.5;
		s_prev = s;
		phi_prev = phi;
	}
	return total;
}

namespace {

// Single merge pass over the spikes of both trains, emitting the breakpoint
// set P with phi values inline.
struct ModulusMergePass {
	const std::vector<double> &t1;
	const std::vector<double> &t2;
	std::size_t i1 = 0, i2 = 0; // current spike indices
	std::size_t p1 = 0, p2 = 0; // previously processed spike indices
	int last = 0;               // train of the previously processed spike, 0 = none
	std::vector<ProfilePoint> pts;

	ModulusMergePass(const std::vector<double> &a, const std::vector<double> &b) : t1(a), t2(b)
	{
		pts.reserve(3 * (t1.size() + t2.size()) + 2);
	}

	const std::vector<double> &train(int j) const { return j == 1 ? t1 : t2; }
	std::size_t &cur(int j) { return j == 1 ? i1 : i2; }
	std::size_t &prev(int j) { return j == 1 ? p1 : p2; }

	// d(t, T_k) given an index i with t <= T_k[i] or i the last spike;
	// walks backwards to the nearest spike.
	static double dist_at(double t, const std::vector<double> &tk, std::size_t i)
	{
		double d = std::abs(tk[i] - t);
		for (std::size_t j = i; j-- > 0;) {
			double dj = std::abs(tk[j] - t);
			if (dj > d) {
				break;
			}
			d = dj;
		}
		return d;
	}

	// Processes the current spike of train j while train k still has spikes
	// at or after it.
	void step(int j, int k)
	{
		const auto &tj = train(j);
		const auto &tk = train(k);
		std::size_t ij = cur(j);
		std::size_t ik = cur(k);
		std::size_t pk = prev(k);
		if (ij > 0) {
			double t = 0.5 * (tj[ij] + tj[ij - 1]);
			pts.push_back(
			    {t, std::abs(0.5 * (tj[ij] - tj[ij - 1]) - dist_at(t, tk, ik))});
		}
		if (last == k) {
			pts.push_back({0.5 * (tj[ij] + tk[pk]), 0.0});
		}
		double t = tj[ij];
		pts.push_back({t, std::min(std::abs(t - tk[pk]), tk[ik] - t)});
		prev(j) = ij;
		cur(j) = ij + 1;
		last = j;
	}

	// Processes the current spike of train j after train k has been
	// exhausted; prev(k) then indexes the last spike of k.
	void step_tail(int j, int k)
	{
		const auto &tj = train(j);
		const auto &tk = train(k);
		std::size_t ij = cur(j);
		std::size_t pk = prev(k);
		if (ij > 0) {
			double t = 0.5 * (tj[ij] + tj[ij - 1]);
			pts.push_back(
			    {t, std::abs(0.5 * (tj[ij] - tj[ij - 1]) - dist_at(t, tk, pk))});
		}
		if (last == k) {
			pts.push_back({0.5 * (tj[ij] + tk[pk]), 0.0});
		}
		double t = tj[ij];
		pts.push_back({t, t - tk[pk]});
		cur(j) = ij + 1;
		last = j;
	}
};

} // namespace

double modulus_metric_alg2(const SpikeTrain &train, const SpikeTrain &other,
                           const Bounds &bounds)
{
	if (detail::same_times(train, other)) {
		return 0.0;
	}
	const auto &t1 = train.times();
	const auto &t2 = other.times();
	ModulusMergePass pass(t1, t2);
	pass.pts.push_back({bounds.a, std::abs(t1[0] - t2[0])});
	while (pass.i1 < t1.size() && pass.i2 < t2.size()) {
		if (t1[pass.i1] <= t2[pass.i2]) {
			pass.step(1, 2);
		} else {
			pass.step(2, 1);
		}
	}
	while (pass.i1 < t1.size()) {
		pass.step_tail(1, 2);
	}
	while (pass.i2 < t2.size()) {
		pass.step_tail(2, 1);
	}
	pass.pts.push_back({bounds.b, std::abs(t1.back() - t2.back())});
	std::sort(pass.pts.begin(), pass.pts.end(),
	          [](const ProfilePoint &x, const ProfilePoint &y) { return x.s < y.s; });
	double total = 0.0;
	for (std::size_t i = 1; i < pass.pts.size(); ++i) {
		total += (pass.pts[i].s - pass.pts[i - 1].s) *
		         (pass.pts[i].phi + pass.pts[i - 1].phi) * 0.5;
	}
	return total;
}

double max_metric(const SpikeTrain &train, const SpikeTrain &other, const Bounds &bounds,
                  const KernelH &kernel, const GridSpec &grid)
{
	if (detail::same_times(train, other)) {
		return 0.0;
	}
	std::vector<double> extras;
	if (grid.refine_with_breakpoints) {
		extras = breakpoints(train, other, bounds);
	}
	auto xs = build_grid(bounds, grid, std::move(extras));
	std::vector<double> phi(xs.size());
	for (std::size_t i = 0; i < xs.size(); ++i) {
		phi[i] = std::abs(point_distance(xs[i], train) - point_distance(xs[i], other));
	}
	return sup_weighted_integral(xs, phi, kernel);
}

double convolution_max_metric(const SpikeTrain &train, const SpikeTrain &other,
                              const Bounds &bounds, const KernelK &filter,
                              const KernelH &kernel, const GridSpec &grid)
{
	if (detail::same_times(train, other)) {
		return 0.0;
	}
	GridSpec uniform{grid.step, false};
	auto xs = build_grid(bounds, uniform);
	auto f = filtered_train(xs, train.times(), filter.tau());
	auto fbar = filtered_train(xs, other.times(), filter.tau());
	std::vector<double> diff(xs.size());
	for (std::size_t i = 0; i < xs.size(); ++i) {
		diff[i] = std::abs(f[i] - fbar[i]);
	}
	return sup_weighted_integral(xs, diff, kernel);
}

double localized_max_metric(const SpikeTrain &train, const SpikeTrain &other,
                            const Bounds &bounds, const KernelL &kernel, const GridSpec &grid)
{
	if (detail::same_times(train, other)) {
		return 0.0;
	}
	Profile suffix = suffix_max_profile(profile(train, other, bounds));
	std::vector<double> extras;
	if (grid.refine_with_breakpoints) {
		extras.reserve(suffix.points.size());
		for (const auto &pt : suffix.points) {
			extras.push_back(pt.s);
		}
	}
	auto xs = build_grid(bounds, grid, std::move(extras));
	std::vector<double> q(xs.size());
	for (std::size_t i = 0; i < xs.size(); ++i) {
		q[i] = kernel(bounds.b - xs[i]) * suffix.interpolate(xs[i]);
	}
	return trapezoid(xs, q);
}

double localized_modulus_metric(const SpikeTrain &train, const SpikeTrain &other,
                                const Bounds &bounds, const KernelL &kernel,
                                const GridSpec &grid)
{
	if (detail::same_times(train, other)) {
		return 0.0;
	}
	std::vector<double> extras;
	if (grid.refine_with_breakpoints) {
		extras = breakpoints(train, other, bounds);
	}
	auto xs = build_grid(bounds, grid, std::move(extras));
	std::vector<double> q(xs.size());
	for (std::size_t i = 0; i < xs.size(); ++i) {
		double phi = std::abs(point_distance(xs[i], train) - point_distance(xs[i], other));
		q[i] = kernel(bounds.b - xs[i]) * phi;
	}
	return trapezoid(xs, q);
}

double localized_van_rossum(const SpikeTrain &train, const SpikeTrain &other,
                            const Bounds &bounds, double tau, const KernelL &kernel,
                            const GridSpec &grid)
{
	if (!(tau > 0.0) || !std::isfinite(tau)) {
		throw ParamError("tau must be positive and finite");
	}
	if (detail::same_times(train, other)) {
		return 0.0;
	}
	std::vector<double> extras;
	if (grid.refine_with_breakpoints) {
		extras = train.times();
		extras.insert(extras.end(), other.times().begin(), other.times().end());
	}
	auto xs = build_grid(bounds, grid, std::move(extras));
	std::vector<double> gb, ga, hb, ha;
	detail::causal_filtered(xs, train.times(), tau, gb, ga);
	detail::causal_filtered(xs, other.times(), tau, hb, ha);
	// The integrand jumps at spikes, so each cell is integrated with
	// one-sided endpoint values.
	double total = 0.0;
	for (std::size_t i = 1; i < xs.size(); ++i) {
		double left = ga[i - 1] - ha[i - 1];
		double right = gb[i] - hb[i];
		double wl = kernel(bounds.b - xs[i - 1]);
		double wr = kernel(bounds.b - xs[i]);
		total += (xs[i] - xs[i - 1]) * (left * left * wl + right * right * wr) * 0.5;
	}
	return total;
}

} // namespace spikedist
