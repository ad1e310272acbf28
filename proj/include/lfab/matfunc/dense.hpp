// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "lfab/matfunc/function.hpp"

namespace lfab::matfunc
{

/// exp(H) by scaling and squaring with the degree-13 Pade approximant; H is scaled by 2^-s
/// so that ||H||_1 / 2^s <= 5.37.
template <typename S>
DenseMatrix<S> expm(const DenseMatrix<S> &H);

/// Principal square root by the determinant-scaled Denman-Beavers iteration (at most 50
/// steps). Throws ConvergenceError when the iteration fails or the residual
/// ||X^2 - H||_F exceeds 1e-10 ||H||_F.
template <typename S>
DenseMatrix<S> sqrtm(const DenseMatrix<S> &H);

/// Horner evaluation of sum_j c_j H^j.
template <typename S>
DenseMatrix<S> polym(const DenseMatrix<S> &H, const std::vector<double> &coefficients);

/// Dispatches on f: expm(t H), sqrtm(H) or polym(H, c).
template <typename S>
DenseMatrix<S> matfun(const DenseMatrix<S> &H, const FunctionSpec &f);

/// (f(x) - f(y)) / (x - y), switching to f'((x + y) / 2) when
/// |x - y| <= 1e-7 max(|x|, |y|, 1). Symmetric in (x, y).
template <typename S>
S divided_difference(const FunctionSpec &f, S x, S y);

struct ChebyshevErrorEstimate
{
  double error;            // sup over the grid of |g - p_d|
  double lebesgue_factor;  // 1 + Lebesgue constant bound: error <= factor * best error
};

/// Uniform error of the degree-`degree` Chebyshev interpolant of g on the interval, sampled
/// on a 1000-point grid. An upper proxy for the best uniform approximation error.
ChebyshevErrorEstimate chebyshev_uniform_error(const std::function<double(double)> &g,
                                               const SpectralInterval &interval, int degree);

}  // namespace lfab::matfunc
