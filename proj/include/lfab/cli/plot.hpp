// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lfab/cli/csv.hpp"

namespace lfab::cli
{

struct Series
{
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

/// Recognizes the three CSV schemas written by the commands:
///   method,k,rel_error    one series per method
///   k,estimate,update_norm  the update norm
///   iter,sigma,f_value    the objective
/// Points with non-positive or non-finite y are dropped (log axis).
std::vector<Series> series_from_csv(const CsvTable &table);

/// SVG 1.1 document with a log-scale y axis, one polyline per series and a legend.
std::string render_svg(const std::vector<Series> &series, const std::string &x_label,
                       const std::string &y_label);

/// Reads the CSV and writes the SVG. Throws ParseError (nothing written) when the data are
/// malformed or contain no plottable rows.
void emit_plot(const std::filesystem::path &csv_path, const std::filesystem::path &svg_path);

}  // namespace lfab::cli
