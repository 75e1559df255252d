#include "lrdipole/cli/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace lrdipole::cli {

std::string format_double(double value)
{
  if (value == 0.0)
    value = 0.0; // drop the sign of -0
  std::array<char, 64> buffer{};
  const auto result =
    std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                  std::chars_format::general, 17);
  if (result.ec != std::errc())
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buffer.data(), result.ptr);
}

CsvBuilder::CsvBuilder(std::initializer_list<std::string_view> header)
  : columns_(header.size())
{
  bool first = true;
  for (std::string_view name : header) {
    if (!first)
      text_ += ',';
    text_ += name;
    first = false;
  }
  text_ += '\n';
}

void CsvBuilder::add_row(std::span<const double> values)
{
  if (values.size() != columns_)
    throw std::invalid_argument("CsvBuilder: row width does not match header");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0)
      text_ += ',';
    text_ += format_double(values[i]);
  }
  text_ += '\n';
}

void CsvBuilder::add_row(std::initializer_list<double> values)
{
  add_row(std::span<const double>(values.begin(), values.size()));
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents)
{
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw IoError("cannot open " + temp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out)
      throw IoError("failed writing " + temp.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp);
    throw IoError("cannot rename " + temp.string() + " to " +
                             path.string() + ": " + ec.message());
  }
}

} // namespace lrdipole::cli
