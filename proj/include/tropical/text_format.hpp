#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "tropical/metric_graph.hpp"

namespace tropical {

// Line-oriented graph format:
//   vertex <name>
//   edge <name> <u> <v> <num>/<den>
// Blank lines and '#' comments are ignored. Throws ParseError with the
// offending line and column.
MetricGraph parse_graph(std::istream& in, const std::string& source = "<graph>");
MetricGraph parse_graph_file(const std::filesystem::path& path);

// Divisor format, one chip declaration per line:
//   chip <coeff> at <vertex>
//   chip <coeff> on <edge> <num>/<den>
// Repeated points accumulate. ';' separates declarations on one line.
MetricDivisor parse_divisor(std::istream& in, const MetricGraph& graph, const std::string& source = "<divisor>");
MetricDivisor parse_divisor_file(const std::filesystem::path& path, const MetricGraph& graph);
MetricDivisor parse_divisor_text(const std::string& text, const MetricGraph& graph);

std::string format_graph(const MetricGraph& graph);
std::string format_divisor(const MetricGraph& graph, const MetricDivisor& d);

} // namespace tropical
