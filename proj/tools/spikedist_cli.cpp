// spikedist: spike-train distances and reproduction experiments.
//
// All times are in milliseconds. Distances print with 12 significant
// digits on standard output; experiments write one CSV/JSON document per
// report into --out.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spikedist/experiments.hpp"
#include "spikedist/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::uint64_t env_default_seed()
{
	if (const char *s = std::getenv("SPIKEDIST_SEED")) {
		try {
			return std::stoull(s);
		} catch (const std::exception &) {
			// A malformed env var is ignored rather than fatal.
		}
	}
	return 0;
}

struct DistanceOpts {
	std::string metric;
	std::string input;
	std::vector<double> bounds;
	double tau = -1.0;
	double tau_h = -1.0;
	double tau_s = -1.0;
	double tau_rise = -1.0;
	double q = -1.0;
	double sigma = -1.0;
	double step = -1.0;
	std::string kernel_l = "exp";
	bool merge_duplicates = false;
	std::uint64_t seed = env_default_seed();
	std::string pairs = "first-two";
};

spikedist::KernelL make_kernel_l(const DistanceOpts &o, double tau_l)
{
	double tau_s = o.tau_s > 0.0 ? o.tau_s : tau_l / 4.0;
	double tau_rise = o.tau_rise > 0.0 ? o.tau_rise : tau_l / 20.0;
	if (o.kernel_l == "exp") {
		return spikedist::KernelL::exponential(tau_l);
	}
	if (o.kernel_l == "alpha") {
		return spikedist::KernelL::alpha(tau_l);
	}
	if (o.kernel_l == "dexp") {
		return spikedist::KernelL::double_exp(tau_l, tau_s);
	}
	if (o.kernel_l == "iaf") {
		return spikedist::KernelL::iaf(tau_l, tau_s, tau_rise);
	}
	return spikedist::KernelL::constant(1.0);
}

int run_distance(const DistanceOpts &o)
{
	auto raw = spikedist::parse_trains_file(o.input);
	if (raw.empty()) {
		throw spikedist::ParseError(0, "input file holds no spike trains");
	}

	spikedist::Bounds bounds(0.0, 1.0);
	if (o.bounds.size() == 2) {
		bounds = spikedist::Bounds(o.bounds[0], o.bounds[1]);
	} else {
		double lo = raw.front().empty() ? 0.0 : raw.front().front();
		double hi = lo;
		bool any = false;
		for (const auto &times : raw) {
			for (double t : times) {
				lo = any ? std::min(lo, t) : t;
				hi = any ? std::max(hi, t) : t;
				any = true;
			}
		}
		if (!any) {
			throw spikedist::ParseError(0, "cannot infer bounds from empty trains");
		}
		if (hi <= lo) {
			hi = lo + 1.0;
		}
		bounds = spikedist::Bounds(lo, hi);
	}

	auto policy = o.merge_duplicates ? spikedist::DuplicatePolicy::Merge
	                                 : spikedist::DuplicatePolicy::Reject;
	std::vector<spikedist::SpikeTrain> trains;
	trains.reserve(raw.size());
	for (auto &times : raw) {
		trains.push_back(spikedist::SpikeTrain::validate(std::move(times), bounds, policy));
	}

	spikedist::MetricDefaults defs;
	if (o.tau > 0.0) {
		defs.tau_k = o.tau;
		defs.tau_r = o.tau;
		defs.tau_l = o.tau;
	}
	if (o.tau_h > 0.0) {
		defs.tau_h = o.tau_h;
	}
	if (o.q > 0.0) {
		defs.q = o.q;
	}
	if (o.sigma > 0.0) {
		defs.sigma_schreiber = o.sigma;
	}
	if (o.step > 0.0) {
		defs.step = o.step;
	}

	spikedist::MetricFn fn;
	if ((o.metric == "locmax" || o.metric == "locmodulus" || o.metric == "locvr") &&
	    o.kernel_l != "exp") {
		auto kernel = make_kernel_l(o, defs.tau_l);
		spikedist::GridSpec grid{defs.step, true};
		double tau_r = defs.tau_r;
		if (o.metric == "locmax") {
			fn = [=](const spikedist::SpikeTrain &a, const spikedist::SpikeTrain &b) {
				return spikedist::localized_max_metric(a, b, bounds, kernel, grid);
			};
		} else if (o.metric == "locmodulus") {
			fn = [=](const spikedist::SpikeTrain &a, const spikedist::SpikeTrain &b) {
				return spikedist::localized_modulus_metric(a, b, bounds, kernel, grid);
			};
		} else {
			fn = [=](const spikedist::SpikeTrain &a, const spikedist::SpikeTrain &b) {
				return spikedist::localized_van_rossum(a, b, bounds, tau_r, kernel,
				                                       grid);
			};
		}
	} else {
		fn = spikedist::metric_by_name(o.metric, bounds, defs).fn;
	}

	if (o.pairs == "first-two") {
		if (trains.size() < 2) {
			throw spikedist::ParseError(0, "need at least two trains");
		}
		std::cout << spikedist::format_double(fn(trains[0], trains[1])) << '\n';
		return 0;
	}
	const std::size_t n = trains.size();
	std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t j = i + 1; j < n; ++j) {
			matrix[i][j] = matrix[j][i] = fn(trains[i], trains[j]);
		}
	}
	spikedist::validate_distance_matrix(matrix);
	spikedist::write_matrix_csv(std::cout, matrix);
	return 0;
}

struct ExperimentOpts {
	std::string config_path;
	std::string out_dir;
	std::string format = "csv";
	std::optional<std::uint64_t> seed;
};

json load_config(const std::string &path)
{
	if (path.empty()) {
		return json::object();
	}
	std::ifstream in(path);
	if (!in) {
		throw spikedist::ParseError(0, "cannot open config '" + path + "'");
	}
	try {
		return json::parse(in);
	} catch (const json::exception &e) {
		throw spikedist::ParseError(0, std::string("bad config: ") + e.what());
	}
}

template <typename T> T get_or(const json &cfg, const char *key, T fallback)
{
	if (cfg.contains(key)) {
		return cfg.at(key).get<T>();
	}
	return fallback;
}

std::vector<spikedist::NamedMetric> select_metrics(const json &cfg,
                                                   const spikedist::Bounds &bounds)
{
	auto all = spikedist::default_metrics(bounds);
	if (!cfg.contains("metrics")) {
		return all;
	}
	std::vector<spikedist::NamedMetric> picked;
	for (const auto &name : cfg.at("metrics")) {
		bool found = false;
		for (const auto &m : all) {
			if (m.name == name.get<std::string>()) {
				picked.push_back(m);
				found = true;
			}
		}
		if (!found) {
			throw spikedist::ParamError("unknown metric '" +
			                            name.get<std::string>() + "' in config");
		}
	}
	return picked;
}

// Writes each report into out_dir; removes everything written on failure so
// an aborted run leaves no partial documents behind.
int emit_reports(const ExperimentOpts &o, const std::vector<spikedist::ExperimentReport> &reports)
{
	fs::create_directories(o.out_dir);
	std::vector<fs::path> written;
	try {
		for (const auto &report : reports) {
			fs::path path = fs::path(o.out_dir) /
			                (report.id + (o.format == "json" ? ".json" : ".csv"));
			std::ofstream out(path);
			if (!out) {
				throw spikedist::ParseError(0, "cannot write '" + path.string() +
				                                   "'");
			}
			written.push_back(path);
			if (o.format == "json") {
				spikedist::write_report_json(out, report);
			} else {
				spikedist::write_report_csv(out, report);
			}
			if (!out) {
				throw spikedist::ParseError(0, "write failed for '" +
				                                   path.string() + "'");
			}
			std::cout << path.string() << '\n';
		}
	} catch (...) {
		for (const auto &path : written) {
			std::error_code ec;
			fs::remove(path, ec);
		}
		throw;
	}
	return 0;
}

std::uint64_t resolve_seed(const ExperimentOpts &o, const json &cfg)
{
	if (o.seed) {
		return *o.seed;
	}
	if (cfg.contains("seed")) {
		return cfg.at("seed").get<std::uint64_t>();
	}
	return env_default_seed();
}

spikedist::SpikeTrain config_template(const json &cfg, const std::vector<double> &fallback,
                                      const spikedist::Bounds &bounds)
{
	auto times = get_or<std::vector<double>>(cfg, "template", fallback);
	return spikedist::SpikeTrain::validate(std::move(times), bounds);
}

int run_experiment(const std::string &kind, const ExperimentOpts &o)
{
	json cfg = load_config(o.config_path);
	std::uint64_t seed = resolve_seed(o, cfg);
	std::vector<spikedist::ExperimentReport> reports;

	if (kind == "insert" || kind == "shift") {
		auto b = get_or<std::vector<double>>(cfg, "bounds", {0.0, 200.0});
		spikedist::Bounds bounds(b.at(0), b.at(1));
		double step = get_or(cfg, "step", 1.0);
		auto metrics = select_metrics(cfg, bounds);
		if (kind == "insert") {
			auto train = config_template(cfg, {20, 50, 75, 125, 180}, bounds);
			reports.push_back(
			    spikedist::run_insertion_sweep(train, bounds, metrics, step));
		} else {
			auto train = config_template(cfg, {10, 50, 75, 125, 150}, bounds);
			auto idx = get_or<std::size_t>(cfg, "shift_index", 3);
			reports.push_back(
			    spikedist::run_shift_sweep(train, idx, bounds, metrics, step));
		}
	} else if (kind == "burst") {
		spikedist::BurstConfig bc;
		bc.template_times = get_or(cfg, "template", bc.template_times);
		auto b = get_or<std::vector<double>>(cfg, "bounds", {bc.bounds_a, bc.bounds_b});
		bc.bounds_a = b.at(0);
		bc.bounds_b = b.at(1);
		auto metrics = select_metrics(cfg, spikedist::Bounds(bc.bounds_a, bc.bounds_b));
		reports.push_back(spikedist::run_burst_experiment(bc, metrics));
	} else if (kind == "precision-reliability") {
		spikedist::GenConfig gen;
		gen.rate_hz = get_or(cfg, "rate_hz", 100.0);
		gen.duration_ms = get_or(cfg, "duration_ms", 200.0);
		gen.seed = seed;
		spikedist::SweepGrid sweep;
		sweep.sigma_max = get_or(cfg, "sigma_max", sweep.sigma_max);
		sweep.p_max = get_or(cfg, "p_max", sweep.p_max);
		sweep.bins = get_or(cfg, "bins", sweep.bins);
		sweep.trials = get_or(cfg, "trials", sweep.trials);
		spikedist::Bounds bounds(0.0, gen.duration_ms);
		auto metrics = select_metrics(cfg, bounds);
		reports.push_back(
		    spikedist::run_precision_reliability(gen, bounds, sweep, metrics));
	} else if (kind == "correlation") {
		spikedist::GenConfig gen;
		gen.rate_hz = get_or(cfg, "rate_hz", 20.0);
		gen.duration_ms = get_or(cfg, "duration_ms", 500.0);
		gen.jitter_sigma = get_or(cfg, "jitter_sigma", 20.0);
		gen.required_count = get_or(cfg, "required_count", 10);
		gen.seed = seed;
		int trials = get_or(cfg, "trials", 1000);
		spikedist::Bounds bounds(0.0, gen.duration_ms);
		auto metrics = select_metrics(cfg, bounds);
		reports.push_back(
		    spikedist::run_correlation_experiment(gen, bounds, trials, metrics));
	} else { // speed
		auto counts =
		    get_or<std::vector<int>>(cfg, "spike_counts", {5, 10, 20, 50, 100, 200, 500});
		int repeats = get_or(cfg, "repeats", 10);
		reports.push_back(spikedist::run_speed_benchmark(
		    counts, repeats, spikedist::default_speed_metrics(), seed));
	}
	return emit_reports(o, reports);
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Spike-train distances (times in ms) and reproduction experiments"};
	app.require_subcommand(1);

	DistanceOpts d;
	auto *dist = app.add_subcommand("distance", "Distance between trains from a file");
	dist->add_option("--metric", d.metric, "Distance to compute")
	    ->required()
	    ->check(CLI::IsMember(spikedist::metric_names()));
	dist->add_option("--input", d.input, "Train file: one train per line, times in ms")
	    ->required();
	dist->add_option("--bounds", d.bounds, "Observation interval A B in ms")->expected(2);
	dist->add_option("--tau", d.tau, "Filter/localization time constant in ms");
	dist->add_option("--tau-h", d.tau_h, "Max-metric weighting time constant in ms");
	dist->add_option("--tau-s", d.tau_s, "Synaptic time constant for dexp/iaf kernels (ms)");
	dist->add_option("--tau-rise", d.tau_rise, "Rise time constant for the iaf kernel (ms)");
	dist->add_option("--q", d.q, "Victor-Purpura shift cost per ms");
	dist->add_option("--sigma", d.sigma, "Schreiber Gaussian width in ms");
	dist->add_option("--step", d.step, "Integration grid step in ms");
	dist->add_option("--kernel-l", d.kernel_l, "Localization kernel shape")
	    ->check(CLI::IsMember({"exp", "alpha", "dexp", "iaf", "const"}));
	dist->add_flag("--merge-duplicates", d.merge_duplicates,
	               "Collapse coincident spikes instead of rejecting them");
	dist->add_option("--seed", d.seed, "Random seed (default from SPIKEDIST_SEED)");
	dist->add_option("--pairs", d.pairs, "first-two: one value; matrix: full pairwise CSV")
	    ->check(CLI::IsMember({"first-two", "matrix"}));

	ExperimentOpts e;
	std::uint64_t seed_flag = 0;
	auto *exp = app.add_subcommand("experiment", "Run a reproduction experiment");
	exp->require_subcommand(1);
	std::vector<CLI::App *> kinds;
	for (const char *name : {"insert", "shift", "burst", "precision-reliability",
	                         "correlation", "speed"}) {
		auto *sub = exp->add_subcommand(name);
		sub->add_option("--config", e.config_path, "JSON experiment configuration");
		sub->add_option("--out", e.out_dir, "Output directory")->required();
		sub->add_option("--format", e.format, "Output format")
		    ->check(CLI::IsMember({"csv", "json"}));
		sub->add_option("--seed", seed_flag, "Random seed (overrides config and env)");
		kinds.push_back(sub);
	}

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &err) {
		if (err.get_exit_code() == 0) { // --help
			return app.exit(err);
		}
		app.exit(err);
		return 2;
	}

	try {
		if (dist->parsed()) {
			return run_distance(d);
		}
		for (auto *sub : kinds) {
			if (sub->parsed()) {
				if (sub->count("--seed")) {
					e.seed = seed_flag;
				}
				return run_experiment(sub->get_name(), e);
			}
		}
		return 2;
	} catch (const spikedist::Error &err) {
		std::cerr << "error: " << err.what() << '\n';
		return 3;
	} catch (const std::exception &err) {
		std::cerr << "error: " << err.what() << '\n';
		return 1;
	}
}
