#pragma once

#include <string>

namespace affect {

std::string read_text_file(const std::string& path);

// Writes to <path>.tmp in the same directory, then renames. No partial
// files are left behind on failure.
void atomic_write_file(const std::string& path, const std::string& content);

bool file_exists(const std::string& path);

// snprintf-based float formatting (std::format is not available on gcc 11)
std::string format_double(double v, int precision);

}  // namespace affect
