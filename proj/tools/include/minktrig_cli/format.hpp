#pragma once

#include <minktrig/vec2.hpp>

#include <string>
#include <vector>

namespace minktrig::cli {

/// printf "%.10g"; negative zero prints as 0.
std::string fmt(double v);

/// v rounded to 10 significant digits, for JSON output.
double round10(double v);

/// Comma separated fields, each number through fmt.
std::string csv_row(const std::vector<double>& values);

/// "x1,x2[,y1,y2...]" -> numbers. Throws ConfigError.
std::vector<double> parse_numbers(const std::string& text);

/// Exactly two numbers "x,y". Throws ConfigError.
Vec2 parse_vec(const std::string& text);

}  // namespace minktrig::cli
