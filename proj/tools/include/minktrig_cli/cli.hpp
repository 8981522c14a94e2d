#pragma once
/**
 * @file cli.hpp
 * @brief Entry point of the minktrig command line, callable in-process.
 *
 * Exit codes: 0 success, 1 a verification check failed, 2 configuration or
 * usage error, 3 domain or numerical error, 4 I/O error.
 */

#include <iosfwd>

namespace minktrig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitIo = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace minktrig::cli
