#pragma once

#include <filesystem>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lrdipole::cli {

class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// 17 significant digits, '.' decimal separator regardless of locale.
std::string format_double(double value);

/// Accumulates CSV text in memory; every row ends with '\n'.
class CsvBuilder
{
public:
  explicit CsvBuilder(std::initializer_list<std::string_view> header);

  void add_row(std::span<const double> values);
  void add_row(std::initializer_list<double> values);

  const std::string& str() const { return text_; }

private:
  std::size_t columns_;
  std::string text_;
};

/// Writes to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents);

} // namespace lrdipole::cli
