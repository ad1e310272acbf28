// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lfab/error.hpp"
#include "lfab/linalg/types.hpp"

namespace lfab
{

/// The scalar function f applied to matrices: exp(t z), the principal sqrt(z), or a polynomial
/// with real coefficients in ascending order. All three have real Taylor coefficients, so
/// f(conj z) = conj f(z).
class FunctionSpec
{
public:
  enum class Kind
  {
    Exp,
    Sqrt,
    Polynomial
  };

  static FunctionSpec exp(double time_scale = 1.0);
  static FunctionSpec sqrt();
  static FunctionSpec polynomial(std::vector<double> coefficients);

  /// Parses "exp", "exp:<t>", "sqrt" or "poly:<c0>,<c1>,...".
  static FunctionSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  double time_scale() const noexcept { return time_scale_; }
  const std::vector<double> &coefficients() const noexcept { return coefficients_; }
  /// Degree ignoring trailing zero coefficients (0 for constants).
  int degree() const;
  std::string describe() const;

  template <typename S>
  S value(S z) const;

  template <typename S>
  S derivative(S z) const;

private:
  FunctionSpec(Kind kind, double t, std::vector<double> c)
    : kind_(kind), time_scale_(t), coefficients_(std::move(c))
  {
  }

  Kind kind_;
  double time_scale_;
  std::vector<double> coefficients_;
};

/// Real interval [lo, hi] containing the spectrum (numerical range) of a Hermitian matrix.
struct SpectralInterval
{
  double lo;
  double hi;

  SpectralInterval(double lo_, double hi_) : lo(lo_), hi(hi_)
  {
    if (!(lo <= hi))
    {
      throw ArgumentError("SpectralInterval: lo must not exceed hi");
    }
  }
};

template <typename S>
S FunctionSpec::value(S z) const
{
  switch (kind_)
  {
    case Kind::Exp:
    {
      using std::exp;
      return exp(S(time_scale_) * z);
    }
    case Kind::Sqrt:
    {
      using std::sqrt;
      return sqrt(z);
    }
    case Kind::Polynomial:
    {
      S acc(0);
      for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
      {
        acc = acc * z + S(*it);
      }
      return acc;
    }
  }
  return S(0);
}

template <typename S>
S FunctionSpec::derivative(S z) const
{
  switch (kind_)
  {
    case Kind::Exp:
    {
      using std::exp;
      return S(time_scale_) * exp(S(time_scale_) * z);
    }
    case Kind::Sqrt:
    {
      using std::sqrt;
      return S(0.5) / sqrt(z);
    }
    case Kind::Polynomial:
    {
      S acc(0);
      for (std::size_t j = coefficients_.size(); j-- > 1;)
      {
        acc = acc * z + S(static_cast<double>(j) * coefficients_[j]);
      }
      return acc;
    }
  }
  return S(0);
}

}  // namespace lfab
