// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "lfab/linalg/sparse.hpp"

namespace lfab::apps
{

enum class Measure
{
  TotalCommunicability,  // 1^T exp(A) 1
  SubgraphCentrality,    // e_l^T exp(A) e_l
  EstradaIndex           // trace(exp(A))
};

Measure parse_measure(const std::string &text);
std::string to_string(Measure measure);

/// Sensitivity of a measure to the entry A_ij, i.e. the measure applied to L_exp(A, e_i e_j^T).
struct SensitivityQuery
{
  Measure measure = Measure::TotalCommunicability;
  Index i = 0;
  Index j = 0;
  Index ell = 0;  // node for SubgraphCentrality
  /// Replace e_i e_j^T by full_rank_direction(A) and evaluate 1^T L_exp(A, E) 1.
  bool full_rank_direction = false;

  void validate(Index n) const;
};

struct SensitivityStep
{
  Index k;
  double estimate;
  double update_norm;  // |s_k - s_prev| / |s_k|; +inf at the first step (reporting only)
};

struct SensitivityResult
{
  double estimate = 0.0;
  std::vector<SensitivityStep> steps;
  Index iterations = 0;
  bool converged = false;  // vector update reached stop_tol, or the space ran out
};

/// Evaluates the query with modified Arnoldi, one estimate per iteration. Rank-one queries use
/// the transposed reductions
///   TN: e_i^T L_exp(A^T, 1 1^T) e_j,  SC: e_i^T L_exp(A^T, e_l e_l^T) e_j,
///   EI: e_i^T L_exp(A^T, I) e_j,
/// with the directions applied lazily. stop_tol = 0 runs all k iterations.
SensitivityResult sensitivity_entry(const SparseMatrix<Real> &A, const SensitivityQuery &query,
                                    Index k, double stop_tol = 0.0);

/// E with E_ij = 1 exactly where A_ij != 0.
SparseMatrix<Real> full_rank_direction(const SparseMatrix<Real> &A);

/// 1^T L_exp(A, full_rank_direction(A)) 1 by modified Arnoldi with b = 1.
SensitivityResult sensitivity_full_rank(const SparseMatrix<Real> &A, Index k,
                                        double stop_tol = 0.0);

/// The unreduced definition evaluated with the dense block-embedding oracle (small n only).
double sensitivity_dense_reference(const SparseMatrix<Real> &A, const SensitivityQuery &query);

}  // namespace lfab::apps
