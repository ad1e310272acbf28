// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/cli/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lfab/error.hpp"

namespace lfab::cli
{

namespace
{

std::vector<std::string> split(const std::string &line)
{
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ','))
  {
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',')
  {
    cells.emplace_back();
  }
  return cells;
}

}  // namespace

std::size_t CsvTable::column(const std::string &name) const
{
  for (std::size_t c = 0; c < header.size(); ++c)
  {
    if (header[c] == name)
    {
      return c;
    }
  }
  throw ParseError("missing column '" + name + "'", 1);
}

std::string format_number(double value)
{
  if (std::isnan(value))
  {
    return "nan";
  }
  if (std::isinf(value))
  {
    return value > 0 ? "inf" : "-inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(std::ostream &out, const CsvTable &table)
{
  auto line = [&out](const std::vector<std::string> &cells) {
    for (std::size_t c = 0; c < cells.size(); ++c)
    {
      out << (c ? "," : "") << cells[c];
    }
    out << '\n';
  };
  line(table.header);
  for (const auto &row : table.rows)
  {
    line(row);
  }
}

void write_csv(const std::filesystem::path &path, const CsvTable &table)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw Error("cannot open '" + path.string() + "' for writing");
  }
  write_csv(out, table);
  if (!out)
  {
    throw Error("write to '" + path.string() + "' failed");
  }
}

CsvTable read_csv(std::istream &in)
{
  CsvTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line))
  {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
    {
      line.pop_back();
    }
    if (line.empty())
    {
      continue;
    }
    auto cells = split(line);
    if (table.header.empty())
    {
      table.header = std::move(cells);
      continue;
    }
    if (cells.size() != table.header.size())
    {
      throw ParseError("expected " + std::to_string(table.header.size()) + " fields, found " +
                         std::to_string(cells.size()),
                       lineno);
    }
    table.rows.push_back(std::move(cells));
  }
  if (table.header.empty())
  {
    throw ParseError("empty CSV input", 0);
  }
  return table;
}

CsvTable read_csv(const std::filesystem::path &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw Error("cannot open '" + path.string() + "'");
  }
  return read_csv(in);
}

double parse_number(const std::string &cell, std::size_t line)
{
  if (cell == "inf")
  {
    return INFINITY;
  }
  if (cell == "-inf")
  {
    return -INFINITY;
  }
  if (cell == "nan")
  {
    return NAN;
  }
  std::size_t used = 0;
  double v = 0.0;
  try
  {
    v = std::stod(cell, &used);
  }
  catch (const std::exception &)
  {
    used = 0;
  }
  if (used == 0 || used != cell.size())
  {
    throw ParseError("not a number: '" + cell + "'", line);
  }
  return v;
}

}  // namespace lfab::cli
