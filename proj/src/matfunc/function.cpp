// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/matfunc/function.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace lfab
{

namespace
{

double parse_double(std::string_view s, std::string_view context)
{
  const std::string copy(s);
  char *end = nullptr;
  const double v = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size() || !std::isfinite(v))
  {
    throw ArgumentError("invalid number '" + copy + "' in function spec '" +
                        std::string(context) + "'");
  }
  return v;
}

}  // namespace

FunctionSpec FunctionSpec::exp(double time_scale)
{
  if (!std::isfinite(time_scale))
  {
    throw ArgumentError("FunctionSpec::exp: time scale must be finite");
  }
  return FunctionSpec(Kind::Exp, time_scale, {});
}

FunctionSpec FunctionSpec::sqrt()
{
  return FunctionSpec(Kind::Sqrt, 1.0, {});
}

FunctionSpec FunctionSpec::polynomial(std::vector<double> coefficients)
{
  if (coefficients.empty())
  {
    throw ArgumentError("FunctionSpec::polynomial: coefficient list is empty");
  }
  return FunctionSpec(Kind::Polynomial, 1.0, std::move(coefficients));
}

FunctionSpec FunctionSpec::parse(std::string_view text)
{
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view arg =
    colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  if (name == "sqrt" && arg.empty())
  {
    return sqrt();
  }
  if (name == "exp")
  {
    return exp(arg.empty() ? 1.0 : parse_double(arg, text));
  }
  if (name == "poly" && !arg.empty())
  {
    std::vector<double> c;
    std::size_t start = 0;
    while (start <= arg.size())
    {
      const auto comma = arg.find(',', start);
      const auto piece = arg.substr(start, comma == std::string_view::npos ? arg.npos
                                                                            : comma - start);
      c.push_back(parse_double(piece, text));
      if (comma == std::string_view::npos)
      {
        break;
      }
      start = comma + 1;
    }
    return polynomial(std::move(c));
  }
  throw ArgumentError("unknown function spec '" + std::string(text) +
                      "' (expected exp, exp:<t>, sqrt or poly:<c0>,<c1>,...)");
}

int FunctionSpec::degree() const
{
  if (kind_ != Kind::Polynomial)
  {
    return -1;
  }
  int d = static_cast<int>(coefficients_.size()) - 1;
  while (d > 0 && coefficients_[d] == 0.0)
  {
    --d;
  }
  return d;
}

std::string FunctionSpec::describe() const
{
  switch (kind_)
  {
    case Kind::Exp:
    {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "exp:%.17g", time_scale_);
      return buf;
    }
    case Kind::Sqrt:
      return "sqrt";
    case Kind::Polynomial:
    {
      std::string s = "poly:";
      for (std::size_t j = 0; j < coefficients_.size(); ++j)
      {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", coefficients_[j]);
        s += (j ? "," : "") + std::string(buf);
      }
      return s;
    }
  }
  return {};
}

}  // namespace lfab
