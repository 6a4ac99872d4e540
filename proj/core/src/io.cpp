#include "spikedist/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "spikedist/errors.hpp"

namespace spikedist {

namespace {

struct NumberedTrain {
	int line;
	std::vector<double> times;
};

std::vector<NumberedTrain> parse_numbered(std::istream &in)
{
	std::vector<NumberedTrain> trains;
	std::string line;
	int lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		auto hash = line.find('#');
		if (hash != std::string::npos) {
			line.erase(hash);
		}
		std::istringstream ss(line);
		std::vector<double> times;
		std::string tok;
		while (ss >> tok) {
			try {
				std::size_t used = 0;
				double v = std::stod(tok, &used);
				if (used != tok.size()) {
					throw std::invalid_argument(tok);
				}
				times.push_back(v);
			} catch (const std::exception &) {
				throw ParseError(lineno, "not a number: '" + tok + "'");
			}
		}
		if (!times.empty()) {
			trains.push_back({lineno, std::move(times)});
		}
	}
	return trains;
}

} // namespace

std::vector<std::vector<double>> parse_trains(std::istream &in)
{
	std::vector<std::vector<double>> trains;
	for (auto &t : parse_numbered(in)) {
		trains.push_back(std::move(t.times));
	}
	return trains;
}

std::vector<SpikeTrain> parse_spike_trains(std::istream &in, const Bounds &bounds,
                                           DuplicatePolicy policy)
{
	std::vector<SpikeTrain> trains;
	for (auto &t : parse_numbered(in)) {
		try {
			trains.push_back(SpikeTrain::validate(std::move(t.times), bounds, policy));
		} catch (const ValidationError &e) {
			throw ParseError(t.line, e.what());
		}
	}
	return trains;
}

std::vector<std::vector<double>> parse_trains_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in) {
		throw ParseError(0, "cannot open '" + path + "'");
	}
	return parse_trains(in);
}

std::string format_double(double v)
{
	char buf[40];
	std::snprintf(buf, sizeof(buf), "%.12g", v);
	return buf;
}

void validate_distance_matrix(const std::vector<std::vector<double>> &matrix)
{
	const std::size_t n = matrix.size();
	for (std::size_t i = 0; i < n; ++i) {
		if (matrix[i].size() != n) {
			throw ShapeError("distance matrix is not square");
		}
		if (matrix[i][i] != 0.0) {
			throw ShapeError("distance matrix has a nonzero diagonal entry");
		}
		for (std::size_t j = 0; j < i; ++j) {
			if (matrix[i][j] != matrix[j][i]) {
				throw ShapeError("distance matrix is not symmetric");
			}
		}
	}
}

void write_matrix_csv(std::ostream &out, const std::vector<std::vector<double>> &matrix)
{
	for (const auto &row : matrix) {
		for (std::size_t j = 0; j < row.size(); ++j) {
			if (j) {
				out << ',';
			}
			out << format_double(row[j]);
		}
		out << '\n';
	}
}

void write_report_csv(std::ostream &out, const ExperimentReport &report)
{
	// Header: axis names then series names; scalars and metadata go into
	// leading comment lines so a single CSV stays self-contained.
	for (const auto &[key, value] : report.metadata) {
		out << "# " << key << " = " << value << '\n';
	}
	for (const auto &[key, value] : report.scalars) {
		out << "# " << key << " = " << format_double(value) << '\n';
	}
	std::size_t rows = 0;
	for (const auto &axis : report.axes) {
		rows = std::max(rows, axis.values.size());
	}
	for (const auto &s : report.series) {
		rows = std::max(rows, s.values.size());
	}
	bool first = true;
	for (const auto &axis : report.axes) {
		out << (first ? "" : ",") << axis.name;
		first = false;
	}
	for (const auto &s : report.series) {
		out << (first ? "" : ",") << s.name;
		first = false;
	}
	out << '\n';
	for (std::size_t r = 0; r < rows; ++r) {
		first = true;
		for (const auto &axis : report.axes) {
			out << (first ? "" : ",");
			first = false;
			if (r < axis.values.size()) {
				out << format_double(axis.values[r]);
			}
		}
		for (const auto &s : report.series) {
			out << (first ? "" : ",");
			first = false;
			if (r < s.values.size()) {
				out << format_double(s.values[r]);
			}
		}
		out << '\n';
	}
}

void write_report_json(std::ostream &out, const ExperimentReport &report)
{
	nlohmann::json j;
	j["id"] = report.id;
	j["axes"] = nlohmann::json::object();
	for (const auto &axis : report.axes) {
		j["axes"][axis.name] = axis.values;
	}
	j["series"] = nlohmann::json::object();
	for (const auto &s : report.series) {
		j["series"][s.name] = s.values;
	}
	j["scalars"] = report.scalars;
	j["metadata"] = report.metadata;
	out << j.dump(2) << '\n';
}

} // namespace spikedist
