#pragma once

#include <minktrig/errors.hpp>

#include <string>

namespace minktrig::cli {

/// Unwritable output path (exit code 4).
class IoError : public Error {
public:
    using Error::Error;
};

/// Writes content to path, replacing it. Throws IoError.
void write_file(const std::string& path, const std::string& content);

/// path with its extension replaced by ext (ext includes the dot).
std::string replace_extension(const std::string& path, const std::string& ext);

}  // namespace minktrig::cli
