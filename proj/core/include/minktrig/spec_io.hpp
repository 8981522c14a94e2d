#pragma once
/**
 * @file spec_io.hpp
 * @brief NormSpec <-> JSON and the builtin shorthands.
 *
 * JSON form: {"kind": "euclidean"|"lp"|"mixed_lp_lq"|"support_table",
 *             "p": number, "samples": [[theta, h], ...]}
 * Shorthands: builtin:euclidean, builtin:lp:P, builtin:mixed:P.
 */

#include <minktrig/norm_spec.hpp>

#include <string>

namespace minktrig {

/// Throws ConfigError on malformed JSON, unknown kinds or missing fields.
NormSpec parse_norm_spec_json(const std::string& text);

std::string norm_spec_to_json(const NormSpec& spec);

/// "builtin:..." shorthand or a path to a JSON file. Throws ConfigError.
NormSpec load_norm_spec(const std::string& arg);

}  // namespace minktrig
