#include "eet/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "eet/errors.hpp"

namespace eet::io {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

void CsvBuilder::header(const std::vector<std::string>& names) {
  for (size_t i = 0; i < names.size(); ++i) {
    if (i > 0) buffer_ += ',';
    buffer_ += names[i];
  }
  buffer_ += '\n';
}

void CsvBuilder::begin_row() {
  row_open_ = true;
  first_field_ = true;
}

void CsvBuilder::add(double value) { add(format_double(value)); }

void CsvBuilder::add(int value) { add(std::to_string(value)); }

void CsvBuilder::add(const std::string& value) {
  if (!first_field_) buffer_ += ',';
  buffer_ += value;
  first_field_ = false;
}

void CsvBuilder::end_row() {
  buffer_ += '\n';
  row_open_ = false;
}

void atomic_write(const std::filesystem::path& path,
                  const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorKind::IoError, "cannot open " + tmp.string() +
                                          " for writing");
    }
    out << content;
    if (!out.good()) {
      throw Error(ErrorKind::IoError, "short write to " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error(ErrorKind::IoError,
                "cannot move " + tmp.string() + " to " + path.string() +
                    ": " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace eet::io
