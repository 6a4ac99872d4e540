#pragma once

#include <vector>

#include "spikedist/kernels.hpp"
#include "spikedist/profile.hpp"
#include "spikedist/train.hpp"

namespace spikedist {

/// Uniform integration grid; when refine_with_breakpoints is set the grid is
/// augmented with the exact profile breakpoints where those exist.
struct GridSpec {
	double step = 1.0; // ms
	bool refine_with_breakpoints = true;
};

/// Sorted grid over [bounds.a, bounds.b] at the given step, optionally merged
/// with extra points (which must already lie in the interval).
std::vector<double> build_grid(const Bounds &bounds, const GridSpec &grid,
                               std::vector<double> extras = {});

/// Pompeiu-Hausdorff distance h: the exact maximum of phi over [a, b], in ms.
double hausdorff(const SpikeTrain &train, const SpikeTrain &other, const Bounds &bounds);

/// Modulus-metric d_o (ms^2), exact, via the breakpoint-superset point set
/// (spikes, same-train midpoints, merged-set midpoints, bounds).
double modulus_metric_alg1(const SpikeTrain &train, const SpikeTrain &other,
                           const Bounds &bounds);

/// Modulus-metric d_o (ms^2), exact, via a single merge pass that emits the
/// breakpoints together with their phi values.
double modulus_metric_alg2(const SpikeTrain &train, const SpikeTrain &other,
                           const Bounds &bounds);

/// Max-metric d_m (ms): integral over s of sup_x phi(x) H(|s-x|). The
/// supremum is searched over the union of the grid and the breakpoint set;
/// this is a numerical approximation, no exact algorithm is claimed.
double max_metric(const SpikeTrain &train, const SpikeTrain &other, const Bounds &bounds,
                  const KernelH &kernel, const GridSpec &grid = {});

/// Convolution max-metric d_c: like d_m but on the kernel-filtered trains
/// |f - fbar|; evaluated on the uniform grid.
double convolution_max_metric(const SpikeTrain &train, const SpikeTrain &other,
                              const Bounds &bounds, const KernelK &filter,
                              const KernelH &kernel, const GridSpec &grid = {});

/// Localized max-metric d_l: integral of L(b-s) times the suffix supremum of
/// phi; the suffix max is computed exactly from the profile.
double localized_max_metric(const SpikeTrain &train, const SpikeTrain &other,
                            const Bounds &bounds, const KernelL &kernel,
                            const GridSpec &grid = {});

/// Localized modulus-metric d_n: integral of phi(s) L(b-s).
double localized_modulus_metric(const SpikeTrain &train, const SpikeTrain &other,
                                const Bounds &bounds, const KernelL &kernel,
                                const GridSpec &grid = {});

/// Localized van Rossum distance d_Rl: integral of (g - gbar)^2 L(b-s) over
/// [a, b] with causal exponential filtering of time constant tau.
double localized_van_rossum(const SpikeTrain &train, const SpikeTrain &other,
                            const Bounds &bounds, double tau, const KernelL &kernel,
                            const GridSpec &grid = {});

} // namespace spikedist
