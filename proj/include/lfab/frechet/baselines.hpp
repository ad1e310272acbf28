// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "lfab/frechet/problem.hpp"
#include "lfab/krylov/arnoldi.hpp"

namespace lfab::frechet
{

/// Default finite-difference step: 1e-5 ||A||_F / ||E||_F clamped to [1e-10, 1e-2].
template <typename S>
double default_fd_eps(const FrechetProblem<S> &problem);

inline constexpr double kDefaultCsEps = 1.0e-20;

/// (fab(A + eps E) - fab(A)) / eps with k Arnoldi steps each; A + eps E is applied lazily.
template <typename S>
Vector<S> fd_arnoldi(const FrechetProblem<S> &problem, double eps, Index k,
                     double breakdown_tol = kDefaultBreakdownTol);

/// Im(fab(A + i eps E)) / eps. Arnoldi runs in complex arithmetic with the bilinear form, so
/// every step is holomorphic in eps. Real data only: throws ArgumentError for S = Complex.
template <typename S>
Vector<S> cs_arnoldi(const FrechetProblem<S> &problem, double eps, Index k,
                     double breakdown_tol = kDefaultBreakdownTol);

/// Approximations for k = 1..k_max from a single pair of Arnoldi runs. Entries past a lucky
/// breakdown repeat the exact value.
template <typename S>
std::vector<Vector<S>> fd_arnoldi_sweep(const FrechetProblem<S> &problem, double eps,
                                        Index k_max,
                                        double breakdown_tol = kDefaultBreakdownTol);

template <typename S>
std::vector<Vector<S>> cs_arnoldi_sweep(const FrechetProblem<S> &problem, double eps,
                                        Index k_max,
                                        double breakdown_tol = kDefaultBreakdownTol);

/// fab approximations of f(A) b for k = 1..k_max.
template <typename S>
std::vector<Vector<S>> fab_sweep(const LinearOperator<S> &A, const Vector<S> &b,
                                 const FunctionSpec &f, Index k_max,
                                 krylov::ArnoldiOptions options = {});

}  // namespace lfab::frechet
