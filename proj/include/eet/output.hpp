#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace eet::io {

/// Shortest round-trip decimal representation, locale-independent
/// ('.' separator, "inf"/"-inf"/"nan" spellings).
std::string format_double(double value);

/// Minimal CSV assembly with deterministic byte output.
class CsvBuilder {
 public:
  void header(const std::vector<std::string>& names);
  void begin_row();
  void add(double value);
  void add(const std::string& value);
  void add(int value);
  void end_row();
  const std::string& str() const { return buffer_; }

 private:
  std::string buffer_;
  bool row_open_ = false;
  bool first_field_ = true;
};

/// Writes content to a temporary sibling file and renames it into place, so
/// failed commands never leave partial outputs.
void atomic_write(const std::filesystem::path& path,
                  const std::string& content);

std::string read_file(const std::filesystem::path& path);

}  // namespace eet::io
