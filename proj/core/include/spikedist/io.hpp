#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spikedist/experiments.hpp"
#include "spikedist/train.hpp"

namespace spikedist {

// Train files hold one train per line: spike times in ms separated by
// whitespace.  '#' starts a comment; blank lines are skipped.
std::vector<std::vector<double>> parse_trains(std::istream &in);
std::vector<std::vector<double>> parse_trains_file(const std::string &path);

// Parses and validates in one pass; validation failures are reported as
// ParseError carrying the 1-based line number.
std::vector<SpikeTrain> parse_spike_trains(std::istream &in, const Bounds &bounds,
                                           DuplicatePolicy policy = DuplicatePolicy::Reject);

// All numeric output is printed with 12 significant digits.
std::string format_double(double v);

void write_matrix_csv(std::ostream &out, const std::vector<std::vector<double>> &matrix);

// A symmetric matrix with zero diagonal; throws ShapeError otherwise.
void validate_distance_matrix(const std::vector<std::vector<double>> &matrix);

void write_report_csv(std::ostream &out, const ExperimentReport &report);
void write_report_json(std::ostream &out, const ExperimentReport &report);

} // namespace spikedist
