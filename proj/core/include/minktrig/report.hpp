#pragma once

#include <minktrig/vec2.hpp>

#include <string>
#include <vector>

namespace minktrig {

/// Outcome of one property check. The witness is the input pair that produced
/// max_residual (or the counterexample, for existence checks).
struct VerifyReport {
    std::string check;
    bool pass{false};
    double max_residual{0.0};
    Vec2 witness_x;
    Vec2 witness_y;
    /// Free-form detail, not part of the JSON wire format.
    std::string note;
};

/// {"check": ..., "pass": ..., "max_residual": ..., "witness": [[x1,x2],[y1,y2]]}
std::string to_json(const VerifyReport& report);
std::string to_json(const std::vector<VerifyReport>& reports);

}  // namespace minktrig
