// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "lfab/krylov/arnoldi.hpp"
#include "lfab/krylov/structured.hpp"

namespace lfab::krylov
{

template <typename S>
struct FrechetOptions
{
  Index check_every = 5;
  /// Stop once ||v1_k - v1_prev|| / ||v1_k|| <= stop_tol (v2 is used while v1 = 0).
  /// 0 runs the full budget.
  double stop_tol = 0.0;
  double breakdown_tol = kDefaultBreakdownTol;
  bool mutate_r_update = false;  // forwarded to SeparateOrthOptions
  /// HermitianSpectral is valid only for Hermitian A (modified_arnoldi only).
  CompressedEvaluation evaluation = CompressedEvaluation::Dense;
  /// Called with (k, v1, v2) after every iteration when set; forces a check each iteration.
  std::function<void(Index, const Vector<S> &, const Vector<S> &)> observer;
  /// Extra stopping rule evaluated after each recorded iterate.
  std::function<bool(Index, const Vector<S> &, const Vector<S> &)> stop_when;
};

template <typename S>
struct FrechetResult
{
  Vector<S> v1;  // ~ L_f(A, E) b
  Vector<S> v2;  // ~ f(A) b
  std::vector<HistoryEntry> history;
  Index iterations = 0;
  bool breakdown = false;
  Index top_dimension = 0;
  Index bottom_dimension = 0;
};

/// Arnoldi on [[A, E], [0, A]] (applied matrix-free) with start [0; b]; v1 and v2 are the top
/// and bottom halves of the approximation to f(calA) [0; b].
template <typename S>
FrechetResult<S> block_embedding_arnoldi(const LinearOperator<S> &A, const LinearOperator<S> &E,
                                         const Vector<S> &b, const FunctionSpec &f, Index k,
                                         const FrechetOptions<S> &options = {});

/// Builds an orthonormal basis of K_k(calA, [0; b]) with k vectors, orthonormalizes its top and
/// bottom halves separately (dropping dependent directions), and projects onto diag(U, V).
template <typename S>
FrechetResult<S> modified_arnoldi_basic(const LinearOperator<S> &A, const LinearOperator<S> &E,
                                        const Vector<S> &b, const FunctionSpec &f, Index k,
                                        double breakdown_tol = kDefaultBreakdownTol);

/// Block-diagonal projection driven by SeparateOrthonormalization. After k iterations the
/// bottom basis spans K_{k+1}(A, b).
template <typename S>
FrechetResult<S> modified_arnoldi(const LinearOperator<S> &A, const LinearOperator<S> &E,
                                  const Vector<S> &b, const FunctionSpec &f, Index k,
                                  const FrechetOptions<S> &options = {});

/// Shared bookkeeping for the iterative Frechet solvers: decides when to evaluate, records the
/// history and applies the stopping rule.
template <typename S>
class ConvergenceMonitor
{
public:
  ConvergenceMonitor(const FrechetOptions<S> &options, FrechetResult<S> &result)
    : options_(options), result_(result)
  {
  }

  bool due(Index k, bool final) const
  {
    return final || options_.observer ||
           (options_.check_every > 0 && k % options_.check_every == 0);
  }

  /// Stores the iterate; returns true when the stopping rule fires.
  bool record(Index k, Vector<S> v1, Vector<S> v2)
  {
    double update = std::numeric_limits<double>::infinity();
    if (result_.v1.size() != 0)
    {
      update = v1.norm() > 0.0 ? relative_update<S>(v1, result_.v1)
                               : relative_update<S>(v2, result_.v2);
    }
    result_.history.push_back({k, update});
    if (options_.observer)
    {
      options_.observer(k, v1, v2);
    }
    const bool requested = options_.stop_when && options_.stop_when(k, v1, v2);
    result_.v1 = std::move(v1);
    result_.v2 = std::move(v2);
    return requested || (options_.stop_tol > 0.0 && update <= options_.stop_tol);
  }

private:
  const FrechetOptions<S> &options_;
  FrechetResult<S> &result_;
};

}  // namespace lfab::krylov
