#pragma once

#include <string>

#include "spikedist/errors.hpp"

namespace spikedist {

/// Weighting kernel for the max-metric family. Must be continuous, positive
/// and have H(0) > 0, so the alpha shape is not admissible here.
class KernelH {
public:
	enum class Kind { Exponential, Gaussian, Constant };

	static KernelH exponential(double tau);
	static KernelH gaussian(double tau);
	static KernelH constant(double value);

	/// H(x) for x >= 0.
	double operator()(double x) const;

	/// A finite m with sup H <= m (attained at 0 for the monotone kinds).
	double bound() const;

	Kind kind() const { return kind_; }
	double tau() const { return tau_; }
	bool strictly_positive() const { return true; }

private:
	KernelH(Kind kind, double tau, double value) : kind_(kind), tau_(tau), value_(value) {}
	Kind kind_;
	double tau_;
	double value_;
};

/// Convolution filter for the convolution max-metric: exponential with
/// K(0) = 1, symmetric in x.
class KernelK {
public:
	static KernelK exponential(double tau);

	double operator()(double x) const;
	double peak() const { return 1.0; } // p = K(0)
	double tau() const { return tau_; }

private:
	explicit KernelK(double tau) : tau_(tau) {}
	double tau_;
};

/// Localization kernel, modeling postsynaptic potential shapes. Alpha and
/// IAF vanish at 0 but stay strictly positive on (0, b-a], which is all the
/// localized metrics need.
class KernelL {
public:
	enum class Kind { Exponential, Alpha, DoubleExp, Iaf, Constant };

	static KernelL exponential(double tau);
	static KernelL alpha(double tau);
	static KernelL double_exp(double tau, double tau_s);
	static KernelL iaf(double tau, double tau_s, double tau_r);
	static KernelL constant(double value);

	/// L(x) for x >= 0.
	double operator()(double x) const;

	/// A finite m with sup L <= m.
	double bound() const;

	Kind kind() const { return kind_; }
	double tau() const { return tau_; }

private:
	KernelL(Kind kind, double tau, double tau_s, double tau_r, double value)
	    : kind_(kind), tau_(tau), tau_s_(tau_s), tau_r_(tau_r), value_(value)
	{
	}
	Kind kind_;
	double tau_;
	double tau_s_;
	double tau_r_;
	double value_;
};

} // namespace spikedist
