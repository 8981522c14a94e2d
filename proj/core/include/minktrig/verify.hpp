#pragma once
/**
 * @file verify.hpp
 * @brief Property suites over a context, one VerifyReport per check.
 *
 * Checks that depend on the Radon property branch on the context flag: in a
 * Radon context the identity must hold; otherwise the check passes when a
 * violation witness is found, since the identity characterizes Radon planes.
 */

#include <minktrig/norm_core.hpp>
#include <minktrig/report.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace minktrig {

enum class Suite { All, Core, Trig, Distortion, Calculus, Radon };

/// "all", "core", "trig", "distortion", "calculus", "radon". Throws ConfigError.
Suite parse_suite(const std::string& name);

struct VerifyOptions {
    /// Random pairs per cheap check; expensive checks use a fraction of it.
    std::size_t samples{1000};
    std::uint64_t seed{1};
};

std::vector<VerifyReport> run_suite(const PlaneContext& ctx, Suite suite, const VerifyOptions& options = {});

bool all_pass(const std::vector<VerifyReport>& reports);

}  // namespace minktrig
