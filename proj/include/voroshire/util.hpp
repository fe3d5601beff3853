#pragma once

#include <filesystem>
#include <string>

namespace voroshire {

/// Bit-exact double <-> string round trip via C hexadecimal float literals.
std::string double_to_hex(double x);
double hex_to_double(const std::string& s);  // throws on malformed input

/// Fixed-notation formatting with a stable number of significant digits.
std::string format_double(double x, int significant = 17);

/// Write-then-rename so readers never observe a half-written file.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace voroshire
