#include "voroshire/util.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace voroshire {

std::string double_to_hex(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%a", x);
  return buf;
}

double hex_to_double(const std::string& s) {
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw std::invalid_argument("hex_to_double: malformed float literal '" + s + "'");
  return v;
}

std::string format_double(double x, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant, x);
  return buf;
}

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("atomic_write_file: cannot open " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("atomic_write_file: short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace voroshire
