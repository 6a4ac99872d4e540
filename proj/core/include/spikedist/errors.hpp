#pragma once

#include <stdexcept>
#include <string>

namespace spikedist {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
	explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Spike train validation failure.
class ValidationError : public Error {
public:
	enum class Kind { Empty, NotSorted, Duplicate, OutOfBounds, NonFinite };

	ValidationError(Kind kind, const std::string &msg) : Error(msg), kind_(kind) {}

	Kind kind() const { return kind_; }

private:
	Kind kind_;
};

/// Invalid kernel or distance parameter (e.g. tau <= 0).
class ParamError : public Error {
	using Error::Error;
};

/// Kernel evaluated outside its domain.
class DomainError : public Error {
	using Error::Error;
};

/// Invalid integration grid specification.
class GridError : public Error {
	using Error::Error;
};

/// Array shape mismatch in grid post-processing.
class ShapeError : public Error {
	using Error::Error;
};

/// A filtered train is numerically zero everywhere, so the correlation
/// distance is undefined.
class DegenerateNorm : public Error {
	using Error::Error;
};

/// Rejection sampling gave up.
class RejectionExhausted : public Error {
	using Error::Error;
};

/// Benchmark invoked with no repetitions.
class EmptyBenchmark : public Error {
	using Error::Error;
};

/// Text input could not be parsed; carries the 1-based line number.
class ParseError : public Error {
public:
	ParseError(int line, const std::string &msg)
	    : Error("line " + std::to_string(line) + ": " + msg), line_(line)
	{
	}

	int line() const { return line_; }

private:
	int line_;
};

} // namespace spikedist
