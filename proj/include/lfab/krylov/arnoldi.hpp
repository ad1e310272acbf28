// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "lfab/linalg/operator.hpp"
#include "lfab/linalg/orthog.hpp"
#include "lfab/matfunc/function.hpp"

namespace lfab::krylov
{

struct HistoryEntry
{
  Index k;
  double update_norm;  // relative change since the previous check; +inf at the first check
};

struct ArnoldiOptions
{
  double breakdown_tol = kDefaultBreakdownTol;
  InnerProduct inner = InnerProduct::Hermitian;
};

/// A Q_k = Q_{k+1} H with orthonormal Q. After a lucky breakdown at step j, Q has j columns
/// and H is the square j x j compression (A Q = Q H exactly).
template <typename S>
struct ArnoldiDecomposition
{
  DenseMatrix<S> Q;
  DenseMatrix<S> H;
  S beta0;  // ||b|| (the bilinear "norm" sqrt(b^T b) for InnerProduct::Bilinear)
  bool breakdown = false;
};

/// Incremental Arnoldi with classical Gram-Schmidt and one reorthogonalization pass.
template <typename S>
class ArnoldiProcess
{
public:
  ArnoldiProcess(LinearOperator<S> A, const Vector<S> &b, Index max_steps,
                 ArnoldiOptions options = {});

  /// Performs one step; returns false once broken down or at max_steps.
  bool step();

  Index steps() const noexcept { return steps_; }
  /// Number of basis vectors (columns of Q).
  Index dimension() const noexcept { return dim_; }
  bool breakdown() const noexcept { return breakdown_; }
  S beta0() const noexcept { return beta0_; }

  auto Q() const { return Q_.leftCols(dim_); }
  /// Leading dim x steps block of the Hessenberg matrix.
  auto H() const { return H_.topLeftCorner(std::min(dim_, steps_ + 1), steps_); }

  /// Q_j f(H_j) beta0 e_1 using the first j basis vectors; needs j <= steps() (or
  /// j <= dimension() after breakdown).
  Vector<S> approximate(const FunctionSpec &f, Index j) const;

  ArnoldiDecomposition<S> decomposition() const;

private:
  LinearOperator<S> A_;
  ArnoldiOptions options_;
  Index max_steps_;
  DenseMatrix<S> Q_;
  DenseMatrix<S> H_;
  S beta0_;
  Index steps_ = 0;
  Index dim_ = 1;
  bool breakdown_ = false;
};

/// k-step Arnoldi decomposition of K_k(A, b). Throws ArgumentError for b = 0.
template <typename S>
ArnoldiDecomposition<S> arnoldi(const LinearOperator<S> &A, const Vector<S> &b, Index k,
                                ArnoldiOptions options = {});

template <typename S>
struct FabOptions
{
  Index check_every = 5;
  double stop_tol = 0.0;  // 0 runs all k steps
  double breakdown_tol = kDefaultBreakdownTol;
  InnerProduct inner = InnerProduct::Hermitian;
  /// Called with (k, approximation) after every step when set.
  std::function<void(Index, const Vector<S> &)> observer;
};

template <typename S>
struct FabResult
{
  Vector<S> approx;
  std::vector<HistoryEntry> history;
  Index iterations = 0;
  bool breakdown = false;
};

/// f(A) b ~ Q_k f(Q_k^* A Q_k) Q_k^* b.
template <typename S>
FabResult<S> arnoldi_fAb(const LinearOperator<S> &A, const Vector<S> &b, const FunctionSpec &f,
                         Index k, const FabOptions<S> &options = {});

/// ||new - old|| / ||new||, with 0/0 = 0.
template <typename S>
double relative_update(const Vector<S> &current, const Vector<S> &previous)
{
  const double num = (current - previous).norm();
  const double den = current.norm();
  if (den == 0.0)
  {
    return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return num / den;
}

}  // namespace lfab::krylov
