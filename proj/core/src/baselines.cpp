#include "spikedist/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "internal.hpp"

namespace spikedist {

VPParams::VPParams(double q_) : q(q_)
{
	if (!(q >= 0.0) || !std::isfinite(q)) {
		throw ParamError("q must be nonnegative and finite");
	}
}

double spike_count_distance(const SpikeTrain &train, const SpikeTrain &other)
{
	auto n = static_cast<double>(train.size());
	auto nbar = static_cast<double>(other.size());
	return std::abs(n - nbar) / std::max(n, nbar);
}

namespace {

void check_tau(double tau)
{
	if (!(tau > 0.0) || !std::isfinite(tau)) {
		throw ParamError("tau must be positive and finite");
	}
}

// Markage recursion: sum over ordered pairs i < j of exp(-(t_j - t_i)/tau).
double decayed_pair_sum(const std::vector<double> &times, double tau)
{
	double total = 0.0;
	double running = 0.0;
	for (std::size_t j = 1; j < times.size(); ++j) {
		running = (running + 1.0) * std::exp(-(times[j] - times[j - 1]) / tau);
		total += running;
	}
	return total;
}

// Sum over all cross pairs of exp(-|t_i - tbar_j|/tau) in one merged pass.
double decayed_cross_sum(const std::vector<double> &t1, const std::vector<double> &t2,
                         double tau)
{
	double cross = 0.0;
	double sum1 = 0.0; // decayed count of processed t1 spikes
	double sum2 = 0.0;
	double last = 0.0;
	bool first = true;
	std::size_t i = 0;
	std::size_t j = 0;
	while (i < t1.size() || j < t2.size()) {
		bool take1 = j == t2.size() || (i < t1.size() && t1[i] <= t2[j]);
		double t = take1 ? t1[i] : t2[j];
		if (!first) {
			double decay = std::exp(-(t - last) / tau);
			sum1 *= decay;
			sum2 *= decay;
		}
		if (take1) {
			cross += sum2;
			sum1 += 1.0;
			++i;
		} else {
			cross += sum1;
			sum2 += 1.0;
			++j;
		}
		last = t;
		first = false;
	}
	return cross;
}

} // namespace

double van_rossum_exact(const SpikeTrain &train, const SpikeTrain &other, double tau)
{
	check_tau(tau);
	if (detail::same_times(train, other)) {
		return 0.0;
	}
	const auto &t1 = train.times();
	const auto &t2 = other.times();
	double self1 = static_cast<double>(t1.size()) + 2.0 * decayed_pair_sum(t1, tau);
	double self2 = static_cast<double>(t2.size()) + 2.0 * decayed_pair_sum(t2, tau);
	double cross = decayed_cross_sum(t1, t2, tau);
	double value = 0.5 * tau * (self1 + self2 - 2.0 * cross);
	return std::max(value, 0.0);
}

double van_rossum_discrete(const SpikeTrain &train, const SpikeTrain &other, double tau,
                           const Bounds &bounds, const GridSpec &grid)
{
	check_tau(tau);
	if (detail::same_times(train, other)) {
		return 0.0;
	}
	// The squared tails beyond b + 8 tau contribute less than 1e-6 relative.
	Bounds extended(bounds.a, bounds.b + 8.0 * tau);
	std::vector<double> extras = train.times();
	extras.insert(extras.end(), other.times().begin(), other.times().end());
	auto xs = build_grid(extended, GridSpec{grid.step, false}, std::move(extras));
	std::vector<double> gb, ga, hb, ha;
	detail::causal_filtered(xs, train.times(), tau, gb, ga);
	detail::causal_filtered(xs, other.times(), tau, hb, ha);
	double total = 0.0;
	for (std::size_t i = 1; i < xs.size(); ++i) {
		double left = ga[i - 1] - ha[i - 1];
		double right = gb[i] - hb[i];
		total += (xs[i] - xs[i - 1]) * (left * left + right * right) * 0.5;
	}
	return total;
}

double victor_purpura(const SpikeTrain &train, const SpikeTrain &other, const VPParams &params)
{
	if (detail::same_times(train, other)) {
		return 0.0;
	}
	const auto &t1 = train.times();
	const auto &t2 = other.times();
	const std::size_t n1 = t1.size();
	const std::size_t n2 = t2.size();
	std::vector<double> prev(n2 + 1);
	std::vector<double> cur(n2 + 1);
	for (std::size_t j = 0; j <= n2; ++j) {
		prev[j] = static_cast<double>(j);
	}
	for (std::size_t i = 1; i <= n1; ++i) {
		cur[0] = static_cast<double>(i);
		for (std::size_t j = 1; j <= n2; ++j) {
			double shift = prev[j - 1] + params.q * std::abs(t1[i - 1] - t2[j - 1]);
			cur[j] = std::min({prev[j] + 1.0, cur[j - 1] + 1.0, shift});
		}
		std::swap(prev, cur);
	}
	return prev[n2];
}

double schreiber_distance(const SpikeTrain &train, const SpikeTrain &other, double sigma,
                          const Bounds &bounds, const GridSpec &grid)
{
	if (!(sigma > 0.0) || !std::isfinite(sigma)) {
		throw ParamError("sigma must be positive and finite");
	}
	if (detail::same_times(train, other)) {
		return 0.0;
	}
	auto xs = build_grid(bounds, GridSpec{grid.step, false});
	auto filter = [&](const std::vector<double> &spikes, std::vector<double> &f) {
		f.assign(xs.size(), 0.0);
		const double window = 8.0 * sigma;
		for (std::size_t i = 0; i < xs.size(); ++i) {
			auto lo = std::lower_bound(spikes.begin(), spikes.end(), xs[i] - window);
			auto hi = std::upper_bound(spikes.begin(), spikes.end(), xs[i] + window);
			double v = 0.0;
			for (auto it = lo; it != hi; ++it) {
				double u = (xs[i] - *it) / sigma;
				v += std::exp(-0.5 * u * u);
			}
			f[i] = v;
		}
	};
	std::vector<double> f, fbar;
	filter(train.times(), f);
	filter(other.times(), fbar);
	double dot = 0.0;
	double norm1 = 0.0;
	double norm2 = 0.0;
	for (std::size_t i = 0; i < xs.size(); ++i) {
		dot += f[i] * fbar[i];
		norm1 += f[i] * f[i];
		norm2 += fbar[i] * fbar[i];
	}
	if (norm1 <= 0.0 || norm2 <= 0.0) {
		throw DegenerateNorm("a filtered train is numerically zero on the grid");
	}
	double cosine = dot / std::sqrt(norm1 * norm2);
	return std::clamp(1.0 - cosine, 0.0, 1.0);
}

namespace {

// Spike train with auxiliary edge spikes at a and b, the Kreuz convention.
std::vector<double> with_edge_spikes(const std::vector<double> &times, const Bounds &bounds)
{
	std::vector<double> aug;
	aug.reserve(times.size() + 2);
	if (times.front() > bounds.a) {
		aug.push_back(bounds.a);
	}
	aug.insert(aug.end(), times.begin(), times.end());
	if (times.back() < bounds.b) {
		aug.push_back(bounds.b);
	}
	return aug;
}

// Index i with aug[i] <= t < aug[i+1]; the last interval for t at b.
std::size_t enclosing_interval(const std::vector<double> &aug, double t)
{
	auto it = std::upper_bound(aug.begin(), aug.end(), t);
	std::size_t i = static_cast<std::size_t>(it - aug.begin());
	if (i == 0) {
		return 0;
	}
	if (i >= aug.size()) {
		return aug.size() - 2;
	}
	return i - 1;
}

} // namespace

double kreuz_isi(const SpikeTrain &train, const SpikeTrain &other, const Bounds &bounds,
                 const GridSpec &grid)
{
	if (detail::same_times(train, other)) {
		return 0.0;
	}
	auto aug1 = with_edge_spikes(train.times(), bounds);
	auto aug2 = with_edge_spikes(other.times(), bounds);
	auto xs = build_grid(bounds, GridSpec{grid.step, false});
	std::vector<double> prof(xs.size(), 0.0);
	for (std::size_t i = 0; i < xs.size(); ++i) {
		std::size_t k1 = enclosing_interval(aug1, xs[i]);
		std::size_t k2 = enclosing_interval(aug2, xs[i]);
		double isi1 = aug1[k1 + 1] - aug1[k1];
		double isi2 = aug2[k2 + 1] - aug2[k2];
		double hi = std::max(isi1, isi2);
		prof[i] = hi > 0.0 ? std::abs(isi1 - isi2) / hi : 0.0;
	}
	return detail::trapezoid(xs, prof) / bounds.width();
}

double kreuz_spike(const SpikeTrain &train, const SpikeTrain &other, const Bounds &bounds,
                   const GridSpec &grid)
{
	if (detail::same_times(train, other)) {
		return 0.0;
	}
	auto aug1 = with_edge_spikes(train.times(), bounds);
	auto aug2 = with_edge_spikes(other.times(), bounds);
	auto xs = build_grid(bounds, GridSpec{grid.step, false});
	auto nearest = [](const std::vector<double> &aug, double t) {
		return point_distance(t, std::span<const double>(aug));
	};
	std::vector<double> prof(xs.size(), 0.0);
	for (std::size_t i = 0; i < xs.size(); ++i) {
		double t = xs[i];
		std::size_t k1 = enclosing_interval(aug1, t);
		std::size_t k2 = enclosing_interval(aug2, t);
		double tp1 = aug1[k1], tf1 = aug1[k1 + 1];
		double tp2 = aug2[k2], tf2 = aug2[k2 + 1];
		double isi1 = tf1 - tp1;
		double isi2 = tf2 - tp2;
		double s1 = isi1 > 0.0
		                ? (nearest(aug2, tp1) * (tf1 - t) + nearest(aug2, tf1) * (t - tp1)) /
		                      isi1
		                : 0.0;
		double s2 = isi2 > 0.0
		                ? (nearest(aug1, tp2) * (tf2 - t) + nearest(aug1, tf2) * (t - tp2)) /
		                      isi2
		                : 0.0;
		double mean_isi = 0.5 * (isi1 + isi2);
		prof[i] = mean_isi > 0.0
		              ? (s1 * isi2 + s2 * isi1) / (2.0 * mean_isi * mean_isi)
		              : 0.0;
	}
	return detail::trapezoid(xs, prof) / bounds.width();
}

} // namespace spikedist
