#include <minktrig/errors.hpp>
#include <minktrig_cli/format.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace minktrig::cli {

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

double round10(double v) {
    if (!std::isfinite(v)) return v;
    const double r = std::stod(fmt(v));
    return r == 0.0 ? 0.0 : r;
}

std::string csv_row(const std::vector<double>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) line += ',';
        line += fmt(values[i]);
    }
    return line;
}

std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size() || !std::isfinite(v)) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ConfigError("not a number: '" + item + "'");
        }
    }
    if (out.empty()) {
        throw ConfigError("expected a comma separated list of numbers");
    }
    return out;
}

Vec2 parse_vec(const std::string& text) {
    const auto v = parse_numbers(text);
    if (v.size() != 2) {
        throw ConfigError("expected two numbers x,y but got '" + text + "'");
    }
    return {v[0], v[1]};
}

}  // namespace minktrig::cli
