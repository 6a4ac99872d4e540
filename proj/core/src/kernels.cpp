#include "spikedist/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace spikedist {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
// Below this separation a DoubleExp/IAF kernel degenerates numerically.
constexpr double kTauSeparation = 1e-9;

void require_positive_tau(double tau, const char *name)
{
	if (!(tau > 0.0) || !std::isfinite(tau)) {
		throw ParamError(std::string(name) + " must be positive and finite");
	}
}

void require_domain(double x)
{
	if (!(x >= 0.0)) {
		throw DomainError("kernel argument must be nonnegative");
	}
}

} // namespace

KernelH KernelH::exponential(double tau)
{
	require_positive_tau(tau, "tau");
	return KernelH(Kind::Exponential, tau, 0.0);
}

KernelH KernelH::gaussian(double tau)
{
	require_positive_tau(tau, "tau");
	return KernelH(Kind::Gaussian, tau, 0.0);
}

KernelH KernelH::constant(double value)
{
	if (!(value > 0.0) || !std::isfinite(value)) {
		throw ParamError("constant kernel value must be positive and finite");
	}
	return KernelH(Kind::Constant, 1.0, value);
}

double KernelH::operator()(double x) const
{
	require_domain(x);
	switch (kind_) {
	case Kind::Exponential:
		return std::exp(-x / tau_) / tau_;
	case Kind::Gaussian:
		return std::exp(-x * x / (2.0 * tau_ * tau_)) / (tau_ * std::sqrt(kTwoPi));
	case Kind::Constant:
		return value_;
	}
	return 0.0;
}

double KernelH::bound() const
{
	switch (kind_) {
	case Kind::Exponential:
		return 1.0 / tau_;
	case Kind::Gaussian:
		return 1.0 / (tau_ * std::sqrt(kTwoPi));
	case Kind::Constant:
		return value_;
	}
	return 0.0;
}

KernelK KernelK::exponential(double tau)
{
	require_positive_tau(tau, "tau");
	return KernelK(tau);
}

double KernelK::operator()(double x) const
{
	return std::exp(-std::abs(x) / tau_);
}

KernelL KernelL::exponential(double tau)
{
	require_positive_tau(tau, "tau");
	return KernelL(Kind::Exponential, tau, 0.0, 0.0, 0.0);
}

KernelL KernelL::alpha(double tau)
{
	require_positive_tau(tau, "tau");
	return KernelL(Kind::Alpha, tau, 0.0, 0.0, 0.0);
}

KernelL KernelL::double_exp(double tau, double tau_s)
{
	require_positive_tau(tau, "tau");
	require_positive_tau(tau_s, "tau_s");
	if (std::abs(tau - tau_s) < kTauSeparation) {
		throw ParamError("DoubleExp kernel requires tau != tau_s");
	}
	return KernelL(Kind::DoubleExp, tau, tau_s, 0.0, 0.0);
}

KernelL KernelL::iaf(double tau, double tau_s, double tau_r)
{
	require_positive_tau(tau, "tau");
	require_positive_tau(tau_s, "tau_s");
	require_positive_tau(tau_r, "tau_r");
	if (std::abs(tau - tau_s) < kTauSeparation || std::abs(tau - tau_r) < kTauSeparation ||
	    std::abs(tau_s - tau_r) < kTauSeparation) {
		throw ParamError("IAF kernel requires pairwise distinct tau, tau_s, tau_r");
	}
	return KernelL(Kind::Iaf, tau, tau_s, tau_r, 0.0);
}

KernelL KernelL::constant(double value)
{
	if (!(value > 0.0) || !std::isfinite(value)) {
		throw ParamError("constant kernel value must be positive and finite");
	}
	return KernelL(Kind::Constant, 1.0, 0.0, 0.0, value);
}

double KernelL::operator()(double x) const
{
	require_domain(x);
	switch (kind_) {
	case Kind::Exponential:
		return std::exp(-x / tau_) / tau_;
	case Kind::Alpha:
		return x / (tau_ * tau_) * std::exp(-x / tau_);
	case Kind::DoubleExp:
		return tau_ / (tau_ - tau_s_) * (std::exp(-x / tau_) - std::exp(-x / tau_s_));
	case Kind::Iaf: {
		double e = std::exp(-x / tau_);
		double es = std::exp(-x / tau_s_);
		double er = std::exp(-x / tau_r_);
		return tau_ / (tau_s_ - tau_r_) *
		       (tau_s_ / (tau_ - tau_s_) * (e - es) - tau_r_ / (tau_ - tau_r_) * (e - er));
	}
	case Kind::Constant:
		return value_;
	}
	return 0.0;
}

double KernelL::bound() const
{
	switch (kind_) {
	case Kind::Exponential:
		return 1.0 / tau_;
	case Kind::Alpha:
		// Stationary point of x e^{-x/tau} at x = tau.
		return std::exp(-1.0) / tau_;
	case Kind::DoubleExp: {
		double xs = tau_ * tau_s_ * std::log(tau_ / tau_s_) / (tau_ - tau_s_);
		return (*this)(xs);
	}
	case Kind::Iaf: {
		// Unimodal PSP shape: bracket the peak by golden-section search.
		double lo = 0.0;
		double hi = 50.0 * std::max({tau_, tau_s_, tau_r_});
		const double gr = 0.61803398874989484820;
		double x1 = hi - gr * (hi - lo);
		double x2 = lo + gr * (hi - lo);
		double f1 = (*this)(x1);
		double f2 = (*this)(x2);
		for (int it = 0; it < 200; ++it) {
			if (f1 < f2) {
				lo = x1;
				x1 = x2;
				f1 = f2;
				x2 = lo + gr * (hi - lo);
				f2 = (*this)(x2);
			} else {
				hi = x2;
				x2 = x1;
				f2 = f1;
				x1 = hi - gr * (hi - lo);
				f1 = (*this)(x1);
			}
		}
		return std::max(f1, f2) * (1.0 + 1e-9);
	}
	case Kind::Constant:
		return value_;
	}
	return 0.0;
}

} // namespace spikedist
