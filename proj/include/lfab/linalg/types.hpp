// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

#include <Eigen/Core>

namespace lfab
{

using Index = Eigen::Index;
using Real = double;
using Complex = std::complex<double>;

template <typename S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// Column-major, like every other dense block in the library.
template <typename S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <typename S>
struct is_complex : std::false_type
{
};

template <typename T>
struct is_complex<std::complex<T>> : std::true_type
{
};

template <typename S>
inline constexpr bool is_complex_v = is_complex<S>::value;

/// Scalar type able to hold the result of mixing S and T (real x complex -> complex).
template <typename S, typename T>
using promote_t = std::conditional_t<is_complex_v<S> || is_complex_v<T>, Complex, Real>;

/// Bilinear (unconjugated) forms keep a computation holomorphic in its complex inputs, which
/// the complex-step method relies on. Hermitian is the usual choice.
enum class InnerProduct
{
  Hermitian,
  Bilinear
};

namespace linalg
{

/// Largest absolute entry of a dense matrix; zero for empty input.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived> &m)
{
  return m.size() == 0 ? 0.0 : static_cast<double>(m.cwiseAbs().maxCoeff());
}

/// True iff every entry is finite.
template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived> &m)
{
  for (Index j = 0; j < m.cols(); ++j)
  {
    for (Index i = 0; i < m.rows(); ++i)
    {
      const auto v = m(i, j);
      if constexpr (is_complex_v<std::decay_t<decltype(v)>>)
      {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        {
          return false;
        }
      }
      else
      {
        if (!std::isfinite(v))
        {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace linalg

}  // namespace lfab
