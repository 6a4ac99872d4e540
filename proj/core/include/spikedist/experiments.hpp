#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "spikedist/baselines.hpp"
#include "spikedist/generate.hpp"
#include "spikedist/metrics.hpp"

namespace spikedist {

/// (p, sigma) sweep for the precision-vs-reliability study: bins+1 samples
/// per axis, `trials` perturbations per cell.
struct SweepGrid {
	double sigma_max = 20.0; // ms
	double p_max = 0.8;
	int bins = 20; // N; the grid has (N+1)^2 cells
	int trials = 100;
};

struct Axis {
	std::string name;
	std::vector<double> values;
};

struct Series {
	std::string name;
	std::vector<double> values;
};

/// Structured result of one experiment: named axes, named value arrays
/// (row-major over the axes), scalar summaries and free-form metadata.
struct ExperimentReport {
	std::string id;
	std::vector<Axis> axes;
	std::vector<Series> series;
	std::map<std::string, double> scalars;
	std::map<std::string, std::string> metadata;

	const Series *find_series(const std::string &name) const;
};

using MetricFn = std::function<double(const SpikeTrain &, const SpikeTrain &)>;

struct NamedMetric {
	std::string name;
	MetricFn fn;
};

/// Paper-default metric parameters: exponential H (tau 10 ms), exponential L
/// (tau 20 ms), exponential filter (tau 10 ms), 10 ms Schreiber width,
/// q = 0.2 /ms.
struct MetricDefaults {
	double tau_h = 10.0;
	double tau_l = 20.0;
	double tau_k = 10.0;
	double tau_r = 10.0;
	double sigma_schreiber = 10.0;
	double q = 0.2;
	double q_low = 0.001;
	double step = 1.0;
};

/// The full comparison set used by the reproduction experiments.
std::vector<NamedMetric> default_metrics(const Bounds &bounds, const MetricDefaults &defs = {});

/// One metric by CLI name ("modulus", "vr", ...), or throws ParamError.
NamedMetric metric_by_name(const std::string &name, const Bounds &bounds,
                           const MetricDefaults &defs = {});

std::vector<std::string> metric_names();

/// Scale so the maximum becomes 1; an all-zero input stays all-zero.
std::vector<double> normalize_to_max(std::vector<double> values);

/// Scale so the mean becomes 1; an all-zero input stays all-zero.
std::vector<double> normalize_to_mean(std::vector<double> values);

double pearson(const std::vector<double> &x, const std::vector<double> &y);

/// Distance curves for a spike inserted at each grid time; insertion keeps
/// coincident spikes, so profile metrics vanish at overlaps.
ExperimentReport run_insertion_sweep(const SpikeTrain &train, const Bounds &bounds,
                                     const std::vector<NamedMetric> &metrics,
                                     double step = 1.0);

/// Distance curves for one spike shifted to each grid time.
ExperimentReport run_shift_sweep(const SpikeTrain &train, std::size_t shift_index,
                                 const Bounds &bounds, const std::vector<NamedMetric> &metrics,
                                 double step = 1.0);

/// Burst template and the six single-edit setups. The default template is a
/// config choice, not a published one.
struct BurstConfig {
	std::vector<double> template_times = {50.0,  54.0,  58.0,  62.0,  150.0, 154.0,
	                                      158.0, 300.0, 304.0, 308.0, 312.0, 420.0};
	double bounds_a = 0.0;
	double bounds_b = 500.0;
	double remove_burst_first = 54.0;
	double remove_burst_second = 308.0;
	double insert_burst_first = 56.0;
	double insert_burst_second = 156.0;
	double remove_isolated = 420.0;
	double insert_isolated = 220.0;
};

/// Per-metric distance across the six setups, normalized to the per-metric
/// maximum.
ExperimentReport run_burst_experiment(const BurstConfig &cfg,
                                      const std::vector<NamedMetric> &metrics);

/// Trial-averaged distance grids over (p, sigma), normalized per metric to
/// the grid maximum, plus delta-rho sign grids.
ExperimentReport run_precision_reliability(const GenConfig &template_cfg, const Bounds &bounds,
                                           const SweepGrid &sweep,
                                           const std::vector<NamedMetric> &metrics);

/// delta_rho = drho/dp * (p_max/N) - drho/dsigma * (sigma_max/N), central
/// differences inside, one-sided at the edges. rho is row-major (p, sigma)
/// of shape (N+1)x(N+1).
std::vector<double> delta_rho(const std::vector<double> &rho, const SweepGrid &sweep);

/// Distances between jittered Poisson pairs over many trials, normalized to
/// the per-metric mean, with Pearson correlations against the van Rossum and
/// Victor & Purpura columns.
ExperimentReport run_correlation_experiment(const GenConfig &cfg, const Bounds &bounds,
                                            int trials,
                                            const std::vector<NamedMetric> &metrics);

/// A distance implementation entered in the speed benchmark; max_repeats
/// caps the measurement count for expensive metrics.
struct SpeedMetric {
	std::string name;
	std::function<double(const SpikeTrain &, const SpikeTrain &, const Bounds &)> fn;
	int max_repeats = 1 << 30;
};

/// Mean wall-clock per call vs spike count, with a least-squares linear fit
/// (slope = per-spike cost) and R^2 per metric. Trains are uniform with a
/// fixed 35 ms mean ISI, so bounds grow with n.
ExperimentReport run_speed_benchmark(const std::vector<int> &spike_counts, int repeats,
                                     const std::vector<SpeedMetric> &metrics,
                                     std::uint64_t seed);

/// The standard speed benchmark entrants (modulus alg1/alg2, van Rossum
/// exact/discrete, max-metric, Victor & Purpura, Kreuz pair).
std::vector<SpeedMetric> default_speed_metrics(const MetricDefaults &defs = {});

} // namespace spikedist
