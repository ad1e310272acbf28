// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/cli/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "lfab/error.hpp"

namespace lfab::cli
{

namespace
{

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 80, kRight = 170, kTop = 30, kBottom = 60;

const char *const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string &s)
{
  std::string out;
  for (char c : s)
  {
    switch (c)
    {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void add_point(Series &s, double x, double y)
{
  if (std::isfinite(x) && std::isfinite(y) && y > 0.0)
  {
    s.x.push_back(x);
    s.y.push_back(y);
  }
}

std::pair<std::string, std::string> axis_labels(const CsvTable &table)
{
  if (table.header == std::vector<std::string>{"method", "k", "rel_error"})
  {
    return {"k", "relative error"};
  }
  if (table.header == std::vector<std::string>{"k", "estimate", "update_norm"})
  {
    return {"k", "update norm"};
  }
  return {"iteration", "f"};
}

}  // namespace

std::vector<Series> series_from_csv(const CsvTable &table)
{
  if (table.rows.empty())
  {
    throw ParseError("CSV has no data rows", 0);
  }
  std::vector<Series> out;
  if (table.header == std::vector<std::string>{"method", "k", "rel_error"})
  {
    std::map<std::string, std::size_t> index;
    for (std::size_t r = 0; r < table.rows.size(); ++r)
    {
      const auto &row = table.rows[r];
      auto [it, fresh] = index.try_emplace(row[0], out.size());
      if (fresh)
      {
        out.push_back({row[0], {}, {}});
      }
      add_point(out[it->second], parse_number(row[1], r + 2), parse_number(row[2], r + 2));
    }
  }
  else if (table.header == std::vector<std::string>{"k", "estimate", "update_norm"} ||
           table.header == std::vector<std::string>{"iter", "sigma", "f_value"})
  {
    Series s{table.header[2], {}, {}};
    for (std::size_t r = 0; r < table.rows.size(); ++r)
    {
      add_point(s, parse_number(table.rows[r][0], r + 2), parse_number(table.rows[r][2], r + 2));
    }
    out.push_back(std::move(s));
  }
  else
  {
    throw ParseError("unrecognized CSV header", 1);
  }
  const bool any = std::any_of(out.begin(), out.end(), [](const Series &s) { return !s.x.empty(); });
  if (!any)
  {
    throw ParseError("CSV has no plottable rows (all values non-positive or non-finite)", 0);
  }
  return out;
}

std::string render_svg(const std::vector<Series> &series, const std::string &x_label,
                       const std::string &y_label)
{
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto &s : series)
  {
    for (std::size_t p = 0; p < s.x.size(); ++p)
    {
      xmin = std::min(xmin, s.x[p]);
      xmax = std::max(xmax, s.x[p]);
      ymin = std::min(ymin, s.y[p]);
      ymax = std::max(ymax, s.y[p]);
    }
  }
  if (!(xmin <= xmax))
  {
    throw ParseError("nothing to plot", 0);
  }
  if (xmax == xmin)
  {
    xmin -= 1.0;
    xmax += 1.0;
  }
  double lo = std::floor(std::log10(ymin)), hi = std::ceil(std::log10(ymax));
  if (hi <= lo)
  {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return kTop + (hi - std::log10(y)) / (hi - lo) * ph; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  const int decades = static_cast<int>(hi - lo);
  const int stride = std::max(1, decades / 10);
  for (int d = 0; d <= decades; d += stride)
  {
    const double e = lo + d;
    const double y = py(std::pow(10.0, e));
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << num(y) << "\" x2=\"" << kLeft + pw
        << "\" y2=\"" << num(y) << "\" stroke=\"#dddddd\"/>\n"
        << "<text x=\"" << kLeft - 6 << "\" y=\"" << num(y + 4)
        << "\" text-anchor=\"end\">1e" << static_cast<int>(e) << "</text>\n";
  }
  for (int t = 0; t <= 5; ++t)
  {
    const double xv = xmin + (xmax - xmin) * t / 5.0;
    char label[32];
    std::snprintf(label, sizeof label, "%g", xv);
    svg << "<text x=\"" << num(px(xv)) << "\" y=\"" << kTop + ph + 18
        << "\" text-anchor=\"middle\">" << label << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n"
      << "<text transform=\"translate(18," << kTop + ph / 2
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape(y_label) << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i)
  {
    const auto &s = series[i];
    const char *color = kPalette[i % std::size(kPalette)];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t p = 0; p < s.x.size(); ++p)
    {
      svg << (p ? " " : "") << num(px(s.x[p])) << ',' << num(py(s.y[p]));
    }
    svg << "\"/>\n";
    const double ly = kTop + 15 + 20.0 * static_cast<double>(i);
    const double lx = kLeft + pw + 15;
    svg << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\"" << lx + 25 << "\" y2=\""
        << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << lx + 32 << "\" y=\"" << ly << "\">" << escape(s.name) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_plot(const std::filesystem::path &csv_path, const std::filesystem::path &svg_path)
{
  const CsvTable table = read_csv(csv_path);
  const auto series = series_from_csv(table);
  const auto [xl, yl] = axis_labels(table);
  const std::string doc = render_svg(series, xl, yl);
  std::ofstream out(svg_path, std::ios::binary);
  if (!out)
  {
    throw Error("cannot open '" + svg_path.string() + "' for writing");
  }
  out << doc;
}

}  // namespace lfab::cli
