#include <minktrig/errors.hpp>
#include <minktrig/spec_io.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace minktrig {

namespace {

double parse_exponent(const std::string& text, const std::string& arg) {
    try {
        std::size_t used = 0;
        const double p = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return p;
    } catch (const std::exception&) {
        throw ConfigError("bad exponent in norm shorthand: " + arg);
    }
}

}  // namespace

NormSpec parse_norm_spec_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("norm spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ConfigError("norm spec needs a string field \"kind\"");
    }
    const std::string kind = j["kind"].get<std::string>();
    const auto exponent = [&]() {
        if (!j.contains("p") || !j["p"].is_number()) {
            throw ConfigError("norm spec of kind " + kind + " needs a numeric field \"p\"");
        }
        return j["p"].get<double>();
    };
    NormSpec spec;
    if (kind == "euclidean") {
        spec = NormSpec::euclidean();
    } else if (kind == "lp") {
        spec = NormSpec::lp(exponent());
    } else if (kind == "mixed_lp_lq") {
        spec = NormSpec::mixed(exponent());
    } else if (kind == "support_table") {
        if (!j.contains("samples") || !j["samples"].is_array()) {
            throw ConfigError("support_table needs an array field \"samples\"");
        }
        std::vector<SupportSample> samples;
        for (const auto& row : j["samples"]) {
            if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number()) {
                throw ConfigError("support_table samples must be [theta, h] pairs");
            }
            samples.push_back({row[0].get<double>(), row[1].get<double>()});
        }
        spec = NormSpec::support_table(std::move(samples));
    } else {
        throw ConfigError("unknown norm kind: " + kind);
    }
    spec.validate();
    return spec;
}

std::string norm_spec_to_json(const NormSpec& spec) {
    nlohmann::json j;
    j["kind"] = to_string(spec.kind);
    if (spec.kind == NormKind::Lp || spec.kind == NormKind::MixedLpLq) {
        j["p"] = spec.p;
    }
    if (spec.kind == NormKind::TabulatedSupport) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& s : spec.samples) rows.push_back({s.theta, s.h});
        j["samples"] = rows;
    }
    return j.dump();
}

NormSpec load_norm_spec(const std::string& arg) {
    const std::string prefix = "builtin:";
    if (arg.rfind(prefix, 0) == 0) {
        const std::string rest = arg.substr(prefix.size());
        NormSpec spec;
        if (rest == "euclidean") {
            spec = NormSpec::euclidean();
        } else if (rest.rfind("lp:", 0) == 0) {
            spec = NormSpec::lp(parse_exponent(rest.substr(3), arg));
        } else if (rest.rfind("mixed:", 0) == 0) {
            spec = NormSpec::mixed(parse_exponent(rest.substr(6), arg));
        } else {
            throw ConfigError("unknown builtin norm: " + arg);
        }
        spec.validate();
        return spec;
    }
    std::ifstream in(arg);
    if (!in) {
        throw ConfigError("cannot read norm spec file: " + arg);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_norm_spec_json(buf.str());
}

}  // namespace minktrig
