// Acceptance suite: ten go/no-go checks, one PASS/FAIL line each.
//
// Tolerances are pinned here, next to the checks they gate. Exact
// algorithms are held to 1e-9 relative; grid-based metrics get a slack of
// twice the worst grid error observed during calibration at the default
// 1 ms step.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "spikedist/experiments.hpp"

using namespace spikedist;

namespace {

// --- pinned tolerances ------------------------------------------------
constexpr double kExactRel = 1e-9;
// Calibration at the 1 ms default grid never produced a positive triangle
// excess for d_m/d_c/d_l/d_n; the relative grid error of the integrals
// themselves stayed under 2e-3, so twice that is pinned as the allowance.
constexpr double kGridTriangleRel = 4e-3;
constexpr double kDenseOracleRel = 0.005;
constexpr double kHausdorffReductionRel = 1e-6;
constexpr double kLocalizedReductionRel = 0.005;
// The appendix bounds are exact mathematically; 1% absorbs the grid error
// in the numerically evaluated sides.
constexpr double kBoundSlackRel = 0.01;
constexpr double kVanRossumAnalyticRel = 1e-9;
constexpr double kVanRossumDiscreteRel = 0.02;
constexpr double kInsertionVanRossumRel = 0.01;
constexpr double kBurstInBurstMax = 0.1;
constexpr double kCorrelationTol = 0.10;
constexpr double kVpFlatnessRel = 0.03;
constexpr double kSpeedMinR2 = 0.98;
constexpr double kSpeedMinRatio = 20.0;

int g_failures = 0;

void report(const std::string &name, bool pass, const std::string &detail)
{
	std::printf("%s  %-28s %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
	if (!pass) {
		++g_failures;
	}
}

SpikeTrain random_train(std::mt19937_64 &rng, const Bounds &b, int max_spikes = 20)
{
	std::uniform_int_distribution<int> count(1, max_spikes);
	std::uniform_real_distribution<double> at(b.a, b.b);
	int n = count(rng);
	std::vector<double> times;
	while (static_cast<int>(times.size()) < n) {
		times.push_back(at(rng));
		std::sort(times.begin(), times.end());
		for (std::size_t i = 1; i < times.size(); ++i) {
			if (times[i] - times[i - 1] < 1e-9) {
				times.erase(times.begin() + static_cast<std::ptrdiff_t>(i));
				break;
			}
		}
	}
	return SpikeTrain::validate(std::move(times), b);
}

struct AxiomMetric {
	std::string name;
	MetricFn fn;
	bool exact;
};

// 1. Metric axioms on random triples.
void check_axioms()
{
	Bounds b(0, 500);
	auto h = KernelH::exponential(10.0);
	auto k = KernelK::exponential(10.0);
	auto l = KernelL::exponential(20.0);
	std::vector<AxiomMetric> metrics = {
	    {"h", [b](const SpikeTrain &x, const SpikeTrain &y) { return hausdorff(x, y, b); },
	     true},
	    {"d_o",
	     [b](const SpikeTrain &x, const SpikeTrain &y) {
		     return modulus_metric_alg2(x, y, b);
	     },
	     true},
	    {"d_m",
	     [b, h](const SpikeTrain &x, const SpikeTrain &y) {
		     return max_metric(x, y, b, h);
	     },
	     false},
	    {"d_c",
	     [b, k, h](const SpikeTrain &x, const SpikeTrain &y) {
		     return convolution_max_metric(x, y, b, k, h);
	     },
	     false},
	    {"d_l",
	     [b, l](const SpikeTrain &x, const SpikeTrain &y) {
		     return localized_max_metric(x, y, b, l);
	     },
	     false},
	    {"d_n",
	     [b, l](const SpikeTrain &x, const SpikeTrain &y) {
		     return localized_modulus_metric(x, y, b, l);
	     },
	     false},
	};
	std::mt19937_64 rng(1001);
	double worst_grid_slack = 0.0;
	bool ok = true;
	std::string why;
	for (int trial = 0; trial < 200 && ok; ++trial) {
		auto t1 = random_train(rng, b);
		auto t2 = random_train(rng, b);
		auto t3 = random_train(rng, b);
		for (const auto &m : metrics) {
			double d12 = m.fn(t1, t2);
			double d21 = m.fn(t2, t1);
			double d13 = m.fn(t1, t3);
			double d23 = m.fn(t2, t3);
			double self = m.fn(t1, t1);
			if (d12 < 0.0 || d12 != d21 || self != 0.0 ||
			    (!(t1 == t2) && !(d12 > 0.0))) {
				ok = false;
				why = m.name + ": axiom violated";
				break;
			}
			double rhs = d12 + d23;
			double slack = (m.exact ? kExactRel : kGridTriangleRel) * rhs;
			if (d13 > rhs + slack) {
				ok = false;
				why = m.name + ": triangle violated by " +
				      std::to_string(d13 - rhs);
				break;
			}
			if (!m.exact && rhs > 0.0) {
				worst_grid_slack = std::max(worst_grid_slack,
				                            (d13 - rhs) / rhs);
			}
		}
	}
	char detail[128];
	std::snprintf(detail, sizeof(detail),
	              "200 triples, worst grid triangle excess %.2e (allowed %.0e)%s%s",
	              worst_grid_slack, kGridTriangleRel, why.empty() ? "" : "; ",
	              why.c_str());
	report("metric-axioms", ok, detail);
}

// 2. The two modulus-metric algorithms agree and match a dense grid.
void check_algorithm_equivalence()
{
	Bounds b(0, 500);
	std::mt19937_64 rng(1002);
	double worst_pair = 0.0;
	double worst_dense = 0.0;
	for (int trial = 0; trial < 1000; ++trial) {
		auto t1 = random_train(rng, b);
		auto t2 = random_train(rng, b);
		double v1 = modulus_metric_alg1(t1, t2, b);
		double v2 = modulus_metric_alg2(t1, t2, b);
		worst_pair = std::max(worst_pair, std::abs(v1 - v2));

		double total = 0.0;
		double prev = std::abs(point_distance(b.a, t1) - point_distance(b.a, t2));
		const double step = 0.01;
		for (double s = b.a + step; s <= b.b + step / 2; s += step) {
			double x = std::min(s, b.b);
			double cur = std::abs(point_distance(x, t1) - point_distance(x, t2));
			total += (x - (s - step)) * 0.5 * (prev + cur);
			prev = cur;
		}
		if (total > 0.0) {
			worst_dense = std::max(worst_dense,
			                       std::abs(v2 - total) / total);
		}
	}
	bool ok = worst_pair <= 1e-9 && worst_dense <= kDenseOracleRel;
	char detail[128];
	std::snprintf(detail, sizeof(detail),
	              "1000 pairs, alg1-alg2 max gap %.2e ms^2, dense-grid rel %.2e",
	              worst_pair, worst_dense);
	report("algorithm-equivalence", ok, detail);
}

// 3. Reductions to the exact metrics under constant kernels.
void check_reductions()
{
	Bounds b(0, 500);
	std::mt19937_64 rng(1003);
	auto const_h = KernelH::constant(1.0 / b.width());
	auto const_l = KernelL::constant(1.0);
	double worst_h = 0.0;
	double worst_n = 0.0;
	for (int trial = 0; trial < 100; ++trial) {
		auto t1 = random_train(rng, b);
		auto t2 = random_train(rng, b);
		double ph = hausdorff(t1, t2, b);
		double dm = max_metric(t1, t2, b, const_h);
		worst_h = std::max(worst_h, std::abs(dm - ph) / ph);
		double d_o = modulus_metric_alg2(t1, t2, b);
		double dn = localized_modulus_metric(t1, t2, b, const_l);
		worst_n = std::max(worst_n, std::abs(dn - d_o) / d_o);
	}
	bool ok = worst_h <= kHausdorffReductionRel && worst_n <= kLocalizedReductionRel;
	char detail[128];
	std::snprintf(detail, sizeof(detail),
	              "100 pairs, d_m(const H) vs h rel %.2e, d_n(const L) vs d_o rel %.2e",
	              worst_h, worst_n);
	report("constant-kernel-reductions", ok, detail);
}

// 4. Boundedness and the sandwich against the Pompeiu-Hausdorff distance.
void check_bounds()
{
	Bounds b(0, 500);
	std::mt19937_64 rng(1004);
	auto h = KernelH::exponential(10.0);
	auto k = KernelK::exponential(10.0);
	auto l = KernelL::exponential(20.0);
	double m = h.bound();
	// A = smallest total weight any single spike can collect; B = the
	// weight ceiling over the interval.
	auto kernel_mass = [&](double t) {
		const double step = 0.05;
		double total = 0.0;
		double prev = h(std::abs(b.a - t));
		for (double s = b.a + step; s <= b.b + step / 2; s += step) {
			double x = std::min(s, b.b);
			double cur = h(std::abs(x - t));
			total += (x - (s - step)) * 0.5 * (prev + cur);
			prev = cur;
		}
		return total;
	};
	double cap_b = b.width() * m;
	bool ok = true;
	std::string why;
	for (int trial = 0; trial < 500 && ok; ++trial) {
		auto t1 = random_train(rng, b);
		auto t2 = random_train(rng, b);
		double ph = hausdorff(t1, t2, b);
		double dm = max_metric(t1, t2, b, h);
		double a_min = kernel_mass(t1[0]);
		for (double t : t1.times()) {
			a_min = std::min(a_min, kernel_mass(t));
		}
		for (double t : t2.times()) {
			a_min = std::min(a_min, kernel_mass(t));
		}
		if (dm > b.width() * b.width() * m * (1 + kBoundSlackRel)) {
			ok = false;
			why = "d_m exceeded its area bound";
		} else if (dm < ph * a_min * (1 - kBoundSlackRel) ||
		           dm > ph * cap_b * (1 + kBoundSlackRel)) {
			ok = false;
			why = "d_m left the h-sandwich";
		}
		double dc = convolution_max_metric(t1, t2, b, k, h);
		double n_total = static_cast<double>(t1.size() + t2.size());
		if (dc > k.peak() * n_total * b.width() * m * (1 + kBoundSlackRel)) {
			ok = false;
			why = "d_c exceeded its bound";
		}
		double cap_l = l.bound() * b.width() * b.width();
		if (localized_max_metric(t1, t2, b, l) > cap_l * (1 + kBoundSlackRel) ||
		    localized_modulus_metric(t1, t2, b, l) > cap_l * (1 + kBoundSlackRel)) {
			ok = false;
			why = "localized metric exceeded its bound";
		}
	}
	report("appendix-bounds", ok,
	       ok ? "500 pairs within all four bound families" : why);
}

// 5. Van Rossum exact against the closed form and the discrete integral.
void check_van_rossum()
{
	Bounds b(0, 500);
	auto t1 = SpikeTrain::validate({50}, Bounds(0, 200));
	auto t2 = SpikeTrain::validate({60}, Bounds(0, 200));
	double analytic = 10.0 * (1.0 - std::exp(-1.0));
	double exact = van_rossum_exact(t1, t2, 10.0);
	bool ok = std::abs(exact - analytic) <= kVanRossumAnalyticRel * analytic;

	std::mt19937_64 rng(1005);
	double worst = 0.0;
	for (int trial = 0; trial < 1000; ++trial) {
		auto a = random_train(rng, b);
		auto c = random_train(rng, b);
		double e = van_rossum_exact(a, c, 10.0);
		double d = van_rossum_discrete(a, c, 10.0, b);
		if (e > 0.0) {
			worst = std::max(worst, std::abs(d - e) / e);
		}
	}
	ok = ok && worst <= kVanRossumDiscreteRel;
	char detail[128];
	std::snprintf(detail, sizeof(detail),
	              "analytic gap %.2e, worst exact-vs-discrete rel %.2e (1000 pairs)",
	              std::abs(exact - analytic) / analytic, worst);
	report("van-rossum", ok, detail);
}

// 6. Insertion sweep: edit metrics flat, modulus pinned to zero at overlaps.
void check_insertion()
{
	Bounds b(0, 200);
	auto train = SpikeTrain::validate({20, 50, 75, 125, 180}, b);
	std::vector<NamedMetric> metrics = {metric_by_name("vp", b), metric_by_name("count", b),
	                                    metric_by_name("vr", b),
	                                    metric_by_name("modulus", b)};
	auto rep = run_insertion_sweep(train, b, metrics);
	const auto &xs = rep.axes[0].values;
	auto flat = [](const std::vector<double> &v) {
		return *std::max_element(v.begin(), v.end()) ==
		       *std::min_element(v.begin(), v.end());
	};
	const auto &vr = rep.find_series("vr")->values;
	double vr_hi = *std::max_element(vr.begin(), vr.end());
	double vr_lo = *std::min_element(vr.begin(), vr.end());
	bool vr_ok = (vr_hi - vr_lo) <= kInsertionVanRossumRel * vr_hi;

	const auto &mod = rep.find_series("modulus")->values;
	int zeros = 0;
	bool mod_ok = true;
	for (std::size_t i = 0; i < xs.size(); ++i) {
		bool overlap = std::find(train.times().begin(), train.times().end(), xs[i]) !=
		               train.times().end();
		if (overlap) {
			zeros += mod[i] == 0.0;
			mod_ok = mod_ok && mod[i] == 0.0;
		} else {
			mod_ok = mod_ok && mod[i] > 0.0;
		}
	}
	bool ok = flat(rep.find_series("vp")->values) && flat(rep.find_series("count")->values) &&
	          vr_ok && mod_ok && zeros == 5;
	char detail[128];
	std::snprintf(detail, sizeof(detail),
	              "vp/count flat, vr spread %.2e, modulus zero at %d/5 overlaps",
	              (vr_hi - vr_lo) / vr_hi, zeros);
	report("insertion-sweep", ok, detail);
}

// 7. Burst setups: edit distance blind to burst context, profile metrics not.
void check_bursts()
{
	BurstConfig cfg;
	Bounds b(cfg.bounds_a, cfg.bounds_b);
	std::vector<NamedMetric> metrics = {metric_by_name("vp", b),
	                                    metric_by_name("modulus", b),
	                                    metric_by_name("max", b)};
	auto rep = run_burst_experiment(cfg, metrics);
	const auto &vp = rep.find_series("vp")->values;
	const auto &mod = rep.find_series("modulus")->values;
	const auto &mx = rep.find_series("max")->values;
	bool ok = true;
	for (double v : vp) {
		ok = ok && std::abs(v - 1.0) <= 1e-9;
	}
	for (int i = 0; i < 4; ++i) { // the four in-burst edits
		ok = ok && mod[static_cast<std::size_t>(i)] <= kBurstInBurstMax &&
		     mx[static_cast<std::size_t>(i)] <= kBurstInBurstMax;
	}
	// Setup 4 removes the isolated spike; both profile metrics peak there.
	ok = ok && mod[4] == 1.0 && mx[4] == 1.0;
	char detail[128];
	std::snprintf(detail, sizeof(detail),
	              "vp all 1.0, in-burst max(modulus)=%.3f max(max)=%.3f, isolated=1.0",
	              *std::max_element(mod.begin(), mod.begin() + 4),
	              *std::max_element(mx.begin(), mx.begin() + 4));
	report("burst-setups", ok, detail);
}

// 8. Correlation table on 1000 jittered Poisson trials.
void check_correlations()
{
	GenConfig cfg;
	cfg.rate_hz = 20.0;
	cfg.duration_ms = 500.0;
	cfg.jitter_sigma = 20.0;
	cfg.required_count = 10;
	cfg.seed = 7;
	Bounds b(0, 500);
	std::vector<NamedMetric> metrics = {metric_by_name("max", b),
	                                    metric_by_name("modulus", b),
	                                    metric_by_name("convmax", b),
	                                    metric_by_name("vr", b), metric_by_name("vp", b)};
	auto rep = run_correlation_experiment(cfg, b, 1000, metrics);
	struct Target {
		const char *key;
		double value;
	};
	const Target targets[] = {{"corr:max:vr", 0.54},
	                          {"corr:modulus:vr", 0.54},
	                          {"corr:convmax:vr", 0.84},
	                          {"corr:vr:vp", 0.78}};
	bool ok = true;
	std::string detail;
	for (const auto &t : targets) {
		double got = rep.scalars.at(t.key);
		ok = ok && std::abs(got - t.value) <= kCorrelationTol;
		char buf[48];
		std::snprintf(buf, sizeof(buf), "%s=%.3f ", t.key + 5, got);
		detail += buf;
	}
	report("correlation-table", ok, detail + "(each within +-0.10)");
}

// 9. Precision/reliability invariants on the scaled grid.
void check_precision_reliability()
{
	GenConfig cfg;
	cfg.seed = 3;
	Bounds b(0, cfg.duration_ms);
	SweepGrid sweep;
	sweep.bins = 5;
	sweep.trials = 20;
	auto metrics = default_metrics(b);
	auto rep = run_precision_reliability(cfg, b, sweep, metrics);
	bool ok = true;
	std::string why;
	for (const auto &m : metrics) {
		if (rep.find_series("rho:" + m.name)->values[0] != 0.0) {
			ok = false;
			why = "rho(0,0) != 0 for " + m.name;
		}
	}
	const auto &vp = rep.find_series("rho:vp-lowq")->values;
	double grid_max = *std::max_element(vp.begin(), vp.end());
	double worst_row = 0.0;
	const auto side = static_cast<std::size_t>(sweep.bins + 1);
	for (std::size_t ip = 0; ip < side; ++ip) {
		auto row_begin = vp.begin() + static_cast<std::ptrdiff_t>(ip * side);
		auto row_end = row_begin + static_cast<std::ptrdiff_t>(side);
		double spread = *std::max_element(row_begin, row_end) -
		                *std::min_element(row_begin, row_end);
		worst_row = std::max(worst_row, spread / grid_max);
	}
	if (worst_row > kVpFlatnessRel) {
		ok = false;
		why = "low-q VP not flat in sigma";
	}

	// The three analytic finite-difference cases, checked exactly.
	SweepGrid tiny;
	tiny.bins = 2;
	tiny.p_max = 0.8;
	tiny.sigma_max = 20.0;
	std::vector<double> rho_p = {0, 0, 0, 0.4, 0.4, 0.4, 0.8, 0.8, 0.8};
	std::vector<double> rho_s = {0, 10, 20, 0, 10, 20, 0, 10, 20};
	std::vector<double> rho_ps(9);
	for (int ip = 0; ip <= 2; ++ip) {
		for (int is = 0; is <= 2; ++is) {
			rho_ps[static_cast<std::size_t>(ip) * 3 + is] =
			    (ip / 2.0) * (is / 2.0);
		}
	}
	auto dp = delta_rho(rho_p, tiny);
	auto ds = delta_rho(rho_s, tiny);
	auto dps = delta_rho(rho_ps, tiny);
	for (int i = 0; i < 9; ++i) {
		int ip = i / 3;
		int is = i % 3;
		if (dp[static_cast<std::size_t>(i)] != 0.4 ||
		    ds[static_cast<std::size_t>(i)] != -10.0 ||
		    dps[static_cast<std::size_t>(i)] != (is - ip) / 4.0) {
			ok = false;
			why = "delta-rho analytic case mismatch";
		}
	}
	char detail[160];
	std::snprintf(detail, sizeof(detail),
	              "rho(0,0)=0 for %zu metrics, low-q VP sigma spread %.3f (<= %.2f), "
	              "delta-rho exact%s%s",
	              metrics.size(), worst_row, kVpFlatnessRel, why.empty() ? "" : "; ",
	              why.c_str());
	report("precision-reliability", ok, detail);
}

// 10. The merge-pass modulus metric is linear in n and beats the grid
// max-metric by a wide margin at n = 500.
void check_speed()
{
	std::vector<SpeedMetric> metrics = {
	    {"modulus-alg2",
	     [](const SpikeTrain &a, const SpikeTrain &b, const Bounds &bounds) {
		     return modulus_metric_alg2(a, b, bounds);
	     },
	     50},
	    {"max",
	     [](const SpikeTrain &a, const SpikeTrain &b, const Bounds &bounds) {
		     return max_metric(a, b, bounds, KernelH::exponential(10.0));
	     },
	     2},
	};
	auto rep = run_speed_benchmark({5, 10, 20, 50, 100, 200, 500}, 10, metrics, 2024);
	double r2 = rep.scalars.at("r2:modulus-alg2");
	const auto &alg2 = rep.find_series("time-ms:modulus-alg2")->values;
	const auto &grid = rep.find_series("time-ms:max")->values;
	double ratio = grid.back() / alg2.back();
	bool ok = r2 >= kSpeedMinR2 && ratio >= kSpeedMinRatio;
	char detail[128];
	std::snprintf(detail, sizeof(detail),
	              "linear fit R^2 %.4f (>= %.2f), grid/merge ratio at n=500: %.0fx "
	              "(>= %.0fx)",
	              r2, kSpeedMinR2, ratio, kSpeedMinRatio);
	report("speed-scaling", ok, detail);
}

template <typename F> void timed(F &&f)
{
	auto start = std::chrono::steady_clock::now();
	f();
	auto ms = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
	std::printf("      (%.1f s)\n", ms.count());
}

} // namespace

int main()
{
	timed(check_axioms);
	timed(check_algorithm_equivalence);
	timed(check_reductions);
	timed(check_bounds);
	timed(check_van_rossum);
	timed(check_insertion);
	timed(check_bursts);
	timed(check_correlations);
	timed(check_precision_reliability);
	timed(check_speed);
	std::printf("%d of 10 criteria failed\n", g_failures);
	return g_failures == 0 ? 0 : 1;
}
