// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace lfab::cli
{

/// Header plus string cells. Numbers are formatted by format_number before insertion.
struct CsvTable
{
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a header column; throws ParseError when absent.
  std::size_t column(const std::string &name) const;
};

/// 17 significant digits, "." decimal separator, "inf"/"nan" for non-finite values.
std::string format_number(double value);

/// LF line endings. Cells are written verbatim (no quoting is ever needed by our schemas).
void write_csv(std::ostream &out, const CsvTable &table);
void write_csv(const std::filesystem::path &path, const CsvTable &table);

/// Throws ParseError on ragged rows or an empty header.
CsvTable read_csv(std::istream &in);
CsvTable read_csv(const std::filesystem::path &path);

double parse_number(const std::string &cell, std::size_t line);

}  // namespace lfab::cli
