#include <minktrig/report.hpp>

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <string>

namespace minktrig {

namespace {

// 10 significant digits, no negative zero
double round10(double v) {
    if (!std::isfinite(v)) return v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    const double r = std::stod(buf);
    return r == 0.0 ? 0.0 : r;
}

nlohmann::ordered_json to_value(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["pass"] = r.pass;
    j["max_residual"] = round10(r.max_residual);
    j["witness"] = {{round10(r.witness_x.x), round10(r.witness_x.y)}, {round10(r.witness_y.x), round10(r.witness_y.y)}};
    return j;
}

}  // namespace

std::string to_json(const VerifyReport& report) { return to_value(report).dump(); }

std::string to_json(const std::vector<VerifyReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_value(r));
    return arr.dump(2);
}

}  // namespace minktrig
