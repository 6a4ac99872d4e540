#include "spikedist/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

namespace spikedist {

const Series *ExperimentReport::find_series(const std::string &name) const
{
	for (const auto &s : series) {
		if (s.name == name) {
			return &s;
		}
	}
	return nullptr;
}

std::vector<NamedMetric> default_metrics(const Bounds &bounds, const MetricDefaults &defs)
{
	GridSpec grid{defs.step, true};
	KernelH h = KernelH::exponential(defs.tau_h);
	KernelK k = KernelK::exponential(defs.tau_k);
	KernelL l = KernelL::exponential(defs.tau_l);
	double tau_r = defs.tau_r;
	double sigma_s = defs.sigma_schreiber;
	VPParams vp(defs.q);
	VPParams vp_low(defs.q_low);
	std::vector<NamedMetric> out;
	out.push_back({"ph", [bounds](const SpikeTrain &a, const SpikeTrain &b) {
		               return hausdorff(a, b, bounds);
	               }});
	out.push_back({"max", [bounds, h, grid](const SpikeTrain &a, const SpikeTrain &b) {
		               return max_metric(a, b, bounds, h, grid);
	               }});
	out.push_back({"modulus", [bounds](const SpikeTrain &a, const SpikeTrain &b) {
		               return modulus_metric_alg2(a, b, bounds);
	               }});
	out.push_back({"convmax", [bounds, k, h, grid](const SpikeTrain &a, const SpikeTrain &b) {
		               return convolution_max_metric(a, b, bounds, k, h, grid);
	               }});
	out.push_back({"locmax", [bounds, l, grid](const SpikeTrain &a, const SpikeTrain &b) {
		               return localized_max_metric(a, b, bounds, l, grid);
	               }});
	out.push_back({"locmodulus", [bounds, l, grid](const SpikeTrain &a, const SpikeTrain &b) {
		               return localized_modulus_metric(a, b, bounds, l, grid);
	               }});
	out.push_back({"locvr", [bounds, l, grid, tau_r](const SpikeTrain &a, const SpikeTrain &b) {
		               return localized_van_rossum(a, b, bounds, tau_r, l, grid);
	               }});
	out.push_back({"count", [](const SpikeTrain &a, const SpikeTrain &b) {
		               return spike_count_distance(a, b);
	               }});
	out.push_back({"vr", [tau_r](const SpikeTrain &a, const SpikeTrain &b) {
		               return van_rossum_exact(a, b, tau_r);
	               }});
	out.push_back({"vr-discrete", [bounds, grid, tau_r](const SpikeTrain &a, const SpikeTrain &b) {
		               return van_rossum_discrete(a, b, tau_r, bounds, grid);
	               }});
	out.push_back({"vp", [vp](const SpikeTrain &a, const SpikeTrain &b) {
		               return victor_purpura(a, b, vp);
	               }});
	out.push_back({"vp-lowq", [vp_low](const SpikeTrain &a, const SpikeTrain &b) {
		               return victor_purpura(a, b, vp_low);
	               }});
	out.push_back({"schreiber", [bounds, grid, sigma_s](const SpikeTrain &a, const SpikeTrain &b) {
		               return schreiber_distance(a, b, sigma_s, bounds, grid);
	               }});
	out.push_back({"kreuz-isi", [bounds, grid](const SpikeTrain &a, const SpikeTrain &b) {
		               return kreuz_isi(a, b, bounds, grid);
	               }});
	out.push_back({"kreuz-spike", [bounds, grid](const SpikeTrain &a, const SpikeTrain &b) {
		               return kreuz_spike(a, b, bounds, grid);
	               }});
	return out;
}

NamedMetric metric_by_name(const std::string &name, const Bounds &bounds,
                           const MetricDefaults &defs)
{
	for (auto &m : default_metrics(bounds, defs)) {
		if (m.name == name) {
			return m;
		}
	}
	throw ParamError("unknown metric '" + name + "'");
}

std::vector<std::string> metric_names()
{
	return {"ph",      "max",         "modulus", "convmax", "locmax",
	        "locmodulus", "locvr",    "count",   "vr",      "vr-discrete",
	        "vp",      "vp-lowq",     "schreiber", "kreuz-isi", "kreuz-spike"};
}

std::vector<double> normalize_to_max(std::vector<double> values)
{
	double hi = 0.0;
	for (double v : values) {
		hi = std::max(hi, std::abs(v));
	}
	if (hi > 0.0) {
		for (double &v : values) {
			v /= hi;
		}
	}
	return values;
}

std::vector<double> normalize_to_mean(std::vector<double> values)
{
	if (values.empty()) {
		return values;
	}
	double mean = std::accumulate(values.begin(), values.end(), 0.0) /
	              static_cast<double>(values.size());
	if (mean != 0.0) {
		for (double &v : values) {
			v /= mean;
		}
	}
	return values;
}

double pearson(const std::vector<double> &x, const std::vector<double> &y)
{
	if (x.size() != y.size() || x.empty()) {
		throw ShapeError("pearson requires two equally sized nonempty arrays");
	}
	auto n = static_cast<double>(x.size());
	double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
	double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
	double sxy = 0.0;
	double sxx = 0.0;
	double syy = 0.0;
	for (std::size_t i = 0; i < x.size(); ++i) {
		sxy += (x[i] - mx) * (y[i] - my);
		sxx += (x[i] - mx) * (x[i] - mx);
		syy += (y[i] - my) * (y[i] - my);
	}
	if (sxx == 0.0 || syy == 0.0) {
		return 0.0;
	}
	return sxy / std::sqrt(sxx * syy);
}

namespace {

SpikeTrain with_inserted(const std::vector<double> &times, double x, const Bounds &bounds)
{
	std::vector<double> edited = times;
	edited.insert(std::upper_bound(edited.begin(), edited.end(), x), x);
	return SpikeTrain::validate(std::move(edited), bounds, DuplicatePolicy::Keep);
}

SpikeTrain with_removed(const std::vector<double> &times, double t, const Bounds &bounds)
{
	std::vector<double> edited;
	edited.reserve(times.size());
	bool removed = false;
	for (double v : times) {
		if (!removed && v == t) {
			removed = true;
			continue;
		}
		edited.push_back(v);
	}
	if (!removed) {
		throw ParamError("spike to remove is not in the template");
	}
	return SpikeTrain::validate(std::move(edited), bounds, DuplicatePolicy::Keep);
}

} // namespace

ExperimentReport run_insertion_sweep(const SpikeTrain &train, const Bounds &bounds,
                                     const std::vector<NamedMetric> &metrics, double step)
{
	auto xs = build_grid(bounds, GridSpec{step, false});
	ExperimentReport report;
	report.id = "insertion";
	report.axes.push_back({"x", xs});
	for (const auto &metric : metrics) {
		Series s{metric.name, {}};
		s.values.reserve(xs.size());
		for (double x : xs) {
			s.values.push_back(metric.fn(train, with_inserted(train.times(), x, bounds)));
		}
		report.series.push_back(std::move(s));
	}
	return report;
}

ExperimentReport run_shift_sweep(const SpikeTrain &train, std::size_t shift_index,
                                 const Bounds &bounds, const std::vector<NamedMetric> &metrics,
                                 double step)
{
	if (shift_index >= train.size()) {
		throw ParamError("shift index out of range");
	}
	auto xs = build_grid(bounds, GridSpec{step, false});
	ExperimentReport report;
	report.id = "shift";
	report.axes.push_back({"x", xs});
	std::vector<double> base = train.times();
	base.erase(base.begin() + static_cast<std::ptrdiff_t>(shift_index));
	for (const auto &metric : metrics) {
		Series s{metric.name, {}};
		s.values.reserve(xs.size());
		for (double x : xs) {
			s.values.push_back(metric.fn(train, with_inserted(base, x, bounds)));
		}
		report.series.push_back(std::move(s));
	}
	return report;
}

ExperimentReport run_burst_experiment(const BurstConfig &cfg,
                                      const std::vector<NamedMetric> &metrics)
{
	Bounds bounds(cfg.bounds_a, cfg.bounds_b);
	auto base = SpikeTrain::validate(cfg.template_times, bounds);
	const std::vector<std::pair<std::string, SpikeTrain>> setups = {
	    {"remove_burst_first", with_removed(base.times(), cfg.remove_burst_first, bounds)},
	    {"remove_burst_second", with_removed(base.times(), cfg.remove_burst_second, bounds)},
	    {"insert_burst_first", with_inserted(base.times(), cfg.insert_burst_first, bounds)},
	    {"insert_burst_second", with_inserted(base.times(), cfg.insert_burst_second, bounds)},
	    {"remove_isolated", with_removed(base.times(), cfg.remove_isolated, bounds)},
	    {"insert_isolated", with_inserted(base.times(), cfg.insert_isolated, bounds)},
	};
	ExperimentReport report;
	report.id = "burst";
	Axis axis{"setup", {}};
	for (std::size_t i = 0; i < setups.size(); ++i) {
		axis.values.push_back(static_cast<double>(i));
		report.metadata["setup" + std::to_string(i)] = setups[i].first;
	}
	report.axes.push_back(std::move(axis));
	for (const auto &metric : metrics) {
		std::vector<double> raw;
		raw.reserve(setups.size());
		for (const auto &[label, edited] : setups) {
			raw.push_back(metric.fn(base, edited));
		}
		report.series.push_back({"raw:" + metric.name, raw});
		report.series.push_back({metric.name, normalize_to_max(raw)});
	}
	return report;
}

ExperimentReport run_precision_reliability(const GenConfig &template_cfg, const Bounds &bounds,
                                           const SweepGrid &sweep,
                                           const std::vector<NamedMetric> &metrics)
{
	if (sweep.bins < 2 || sweep.trials < 1 || !(sweep.sigma_max > 0.0) ||
	    !(sweep.p_max > 0.0) || !(sweep.p_max < 1.0)) {
		throw ParamError("invalid sweep grid");
	}
	const int n = sweep.bins;
	auto template_train = gen_poisson(template_cfg);
	ExperimentReport report;
	report.id = "precision-reliability";
	Axis p_axis{"p", {}};
	Axis s_axis{"sigma", {}};
	for (int i = 0; i <= n; ++i) {
		p_axis.values.push_back(sweep.p_max * i / n);
		s_axis.values.push_back(sweep.sigma_max * i / n);
	}
	report.axes.push_back(p_axis);
	report.axes.push_back(s_axis);

	const auto cells = static_cast<std::size_t>((n + 1) * (n + 1));
	std::vector<std::vector<double>> rho(metrics.size(), std::vector<double>(cells, 0.0));
	for (int ip = 0; ip <= n; ++ip) {
		for (int is = 0; is <= n; ++is) {
			std::size_t cell = static_cast<std::size_t>(ip) * (n + 1) + is;
			std::vector<double> mean(metrics.size(), 0.0);
			for (int trial = 0; trial < sweep.trials; ++trial) {
				// Common random numbers across the sigma axis: the
				// stream depends on (p, trial) only, so every cell of
				// a p-row sees the same removals and the same unit
				// jitter draws, scaled by its own sigma.
				auto rng = make_stream(template_cfg.seed,
				                       static_cast<std::size_t>(ip) *
				                               static_cast<std::size_t>(sweep.trials) +
				                           static_cast<std::size_t>(trial) + 1);
				auto perturbed = perturb(template_train, bounds, s_axis.values[is],
				                         p_axis.values[ip], rng);
				for (std::size_t m = 0; m < metrics.size(); ++m) {
					mean[m] += metrics[m].fn(template_train, perturbed);
				}
			}
			for (std::size_t m = 0; m < metrics.size(); ++m) {
				rho[m][cell] = mean[m] / sweep.trials;
			}
		}
	}
	for (std::size_t m = 0; m < metrics.size(); ++m) {
		report.series.push_back({"rho:" + metrics[m].name, rho[m]});
		report.series.push_back({metrics[m].name, normalize_to_max(rho[m])});
		report.series.push_back({"deltarho:" + metrics[m].name, delta_rho(rho[m], sweep)});
	}
	// Caveat from the study design: the sign of delta-rho depends on the
	// chosen sigma_max/p_max ratio.
	report.metadata["deltarho_caveat"] =
	    "sign depends on the sigma_max/p_max commensuration ratio";
	return report;
}

std::vector<double> delta_rho(const std::vector<double> &rho, const SweepGrid &sweep)
{
	const int n = sweep.bins;
	const auto side = static_cast<std::size_t>(n + 1);
	if (rho.size() != side * side) {
		throw ShapeError("rho grid must have (N+1)^2 entries");
	}
	auto at = [&](int ip, int is) { return rho[static_cast<std::size_t>(ip) * side + is]; };
	std::vector<double> out(rho.size(), 0.0);
	for (int ip = 0; ip <= n; ++ip) {
		for (int is = 0; is <= n; ++is) {
			// Finite differences on the grid spacing delta_p = p_max/N;
			// multiplying back by delta_p leaves plain value differences.
			double dp;
			if (ip == 0) {
				dp = at(1, is) - at(0, is);
			} else if (ip == n) {
				dp = at(n, is) - at(n - 1, is);
			} else {
				dp = 0.5 * (at(ip + 1, is) - at(ip - 1, is));
			}
			double ds;
			if (is == 0) {
				ds = at(ip, 1) - at(ip, 0);
			} else if (is == n) {
				ds = at(ip, n) - at(ip, n - 1);
			} else {
				ds = 0.5 * (at(ip, is + 1) - at(ip, is - 1));
			}
			out[static_cast<std::size_t>(ip) * side + is] = dp - ds;
		}
	}
	return out;
}

ExperimentReport run_correlation_experiment(const GenConfig &cfg, const Bounds &bounds,
                                            int trials, const std::vector<NamedMetric> &metrics)
{
	if (trials < 2) {
		throw ParamError("correlation experiment needs at least 2 trials");
	}
	ExperimentReport report;
	report.id = "correlation";
	Axis axis{"trial", {}};
	std::vector<std::vector<double>> values(metrics.size());
	for (int trial = 0; trial < trials; ++trial) {
		axis.values.push_back(static_cast<double>(trial));
		auto gen_rng = make_stream(cfg.seed, 2 * static_cast<std::uint64_t>(trial));
		auto jit_rng = make_stream(cfg.seed, 2 * static_cast<std::uint64_t>(trial) + 1);
		auto train = gen_poisson(cfg, gen_rng);
		auto jittered = perturb(train, bounds, cfg.jitter_sigma, 0.0, jit_rng);
		for (std::size_t m = 0; m < metrics.size(); ++m) {
			values[m].push_back(metrics[m].fn(train, jittered));
		}
	}
	report.axes.push_back(std::move(axis));
	const std::vector<double> *vr = nullptr;
	const std::vector<double> *vp = nullptr;
	for (std::size_t m = 0; m < metrics.size(); ++m) {
		if (metrics[m].name == "vr") {
			vr = &values[m];
		}
		if (metrics[m].name == "vp") {
			vp = &values[m];
		}
	}
	for (std::size_t m = 0; m < metrics.size(); ++m) {
		if (vr) {
			report.scalars["corr:" + metrics[m].name + ":vr"] = pearson(values[m], *vr);
		}
		if (vp) {
			report.scalars["corr:" + metrics[m].name + ":vp"] = pearson(values[m], *vp);
		}
	}
	for (std::size_t m = 0; m < metrics.size(); ++m) {
		report.series.push_back({metrics[m].name, normalize_to_mean(std::move(values[m]))});
	}
	return report;
}

std::vector<SpeedMetric> default_speed_metrics(const MetricDefaults &defs)
{
	GridSpec grid{defs.step, true};
	KernelH h = KernelH::exponential(defs.tau_h);
	double tau_r = defs.tau_r;
	VPParams vp(defs.q);
	std::vector<SpeedMetric> out;
	out.push_back({"modulus-alg1",
	               [](const SpikeTrain &a, const SpikeTrain &b, const Bounds &bounds) {
		               return modulus_metric_alg1(a, b, bounds);
	               }});
	out.push_back({"modulus-alg2",
	               [](const SpikeTrain &a, const SpikeTrain &b, const Bounds &bounds) {
		               return modulus_metric_alg2(a, b, bounds);
	               }});
	out.push_back({"vr-exact",
	               [tau_r](const SpikeTrain &a, const SpikeTrain &b, const Bounds &) {
		               return van_rossum_exact(a, b, tau_r);
	               }});
	out.push_back({"vr-discrete",
	               [tau_r, grid](const SpikeTrain &a, const SpikeTrain &b, const Bounds &bounds) {
		               return van_rossum_discrete(a, b, tau_r, bounds, grid);
	               },
	               200});
	out.push_back({"vp",
	               [vp](const SpikeTrain &a, const SpikeTrain &b, const Bounds &) {
		               return victor_purpura(a, b, vp);
	               },
	               100});
	out.push_back({"kreuz-isi",
	               [grid](const SpikeTrain &a, const SpikeTrain &b, const Bounds &bounds) {
		               return kreuz_isi(a, b, bounds, grid);
	               },
	               200});
	out.push_back({"kreuz-spike",
	               [grid](const SpikeTrain &a, const SpikeTrain &b, const Bounds &bounds) {
		               return kreuz_spike(a, b, bounds, grid);
	               },
	               100});
	out.push_back({"max",
	               [h, grid](const SpikeTrain &a, const SpikeTrain &b, const Bounds &bounds) {
		               return max_metric(a, b, bounds, h, grid);
	               },
	               2});
	return out;
}

ExperimentReport run_speed_benchmark(const std::vector<int> &spike_counts, int repeats,
                                     const std::vector<SpeedMetric> &metrics,
                                     std::uint64_t seed)
{
	if (repeats < 1) {
		throw EmptyBenchmark("speed benchmark needs at least one repeat");
	}
	if (spike_counts.size() < 2) {
		throw ParamError("speed benchmark needs at least two spike counts");
	}
	constexpr double kMeanIsi = 35.0; // ms
	ExperimentReport report;
	report.id = "speed";
	Axis axis{"n", {}};
	for (int n : spike_counts) {
		axis.values.push_back(static_cast<double>(n));
	}
	report.axes.push_back(std::move(axis));

	std::vector<std::vector<double>> mean_ms(metrics.size(),
	                                         std::vector<double>(spike_counts.size(), 0.0));
	for (std::size_t ni = 0; ni < spike_counts.size(); ++ni) {
		int n = spike_counts[ni];
		Bounds bounds(0.0, n * kMeanIsi);
		std::vector<std::pair<SpikeTrain, SpikeTrain>> pairs;
		pairs.reserve(static_cast<std::size_t>(repeats));
		for (int r = 0; r < repeats; ++r) {
			auto rng = make_stream(seed, ni * static_cast<std::size_t>(repeats) + r);
			pairs.emplace_back(gen_uniform(n, kMeanIsi, rng), gen_uniform(n, kMeanIsi, rng));
		}
		for (std::size_t m = 0; m < metrics.size(); ++m) {
			int calls = std::min(repeats, metrics[m].max_repeats);
			volatile double sink = 0.0;
			auto start = std::chrono::steady_clock::now();
			for (int r = 0; r < calls; ++r) {
				const auto &[a, b] = pairs[static_cast<std::size_t>(r)];
				sink = sink + metrics[m].fn(a, b, bounds);
			}
			auto stop = std::chrono::steady_clock::now();
			(void)sink;
			double total_ms =
			    std::chrono::duration<double, std::milli>(stop - start).count();
			mean_ms[m][ni] = total_ms / calls;
		}
	}
	for (std::size_t m = 0; m < metrics.size(); ++m) {
		report.series.push_back({"time-ms:" + metrics[m].name, mean_ms[m]});
		// Least-squares line through (n, mean time).
		const auto &ys = mean_ms[m];
		double n = static_cast<double>(spike_counts.size());
		double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
		for (std::size_t i = 0; i < spike_counts.size(); ++i) {
			double x = static_cast<double>(spike_counts[i]);
			sx += x;
			sy += ys[i];
			sxx += x * x;
			sxy += x * ys[i];
			syy += ys[i] * ys[i];
		}
		double denom = n * sxx - sx * sx;
		double slope = (n * sxy - sx * sy) / denom;
		double intercept = (sy - slope * sx) / n;
		double ss_tot = syy - sy * sy / n;
		double ss_res = 0.0;
		for (std::size_t i = 0; i < spike_counts.size(); ++i) {
			double fit = intercept + slope * static_cast<double>(spike_counts[i]);
			ss_res += (ys[i] - fit) * (ys[i] - fit);
		}
		report.scalars["slope:" + metrics[m].name] = slope;
		report.scalars["intercept:" + metrics[m].name] = intercept;
		report.scalars["r2:" + metrics[m].name] = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
	}
	return report;
}

} // namespace spikedist
