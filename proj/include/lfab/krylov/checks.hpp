// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "lfab/krylov/modified.hpp"
#include "lfab/linalg/sparse.hpp"

namespace lfab::krylov
{

/// Relative error of modified_arnoldi(..., polynomial p, k).v1 against the monomial-sum
/// oracle for L_p(A, E) b. Zero when both vanish.
template <typename S>
double exactness_check(const LinearOperator<S> &A, const LinearOperator<S> &E,
                       const Vector<S> &b, const std::vector<double> &coefficients, Index k);

enum class BoundMethod
{
  Separate,  // modified_arnoldi with k iterations
  Basic      // modified_arnoldi_basic with k basis vectors
};

struct ConvergenceBound
{
  double lhs;              // ||L_f(A, E) b - v1||_2
  double rhs;              // 2 ||b|| ||E||_F  times the Chebyshev error of f' of degree k - 2
  double lebesgue_factor;  // slack of the Chebyshev proxy against the true infimum
  double lambda_min;
  double lambda_max;
};

/// Error bound check for Hermitian A (numerical range [lambda_min, lambda_max], constant 1).
/// Throws ArgumentError for k < 2 or non-Hermitian A.
template <typename S>
ConvergenceBound verify_convergence_bound(const SparseMatrix<S> &A, const SparseMatrix<S> &E,
                                          const Vector<S> &b, const FunctionSpec &f, Index k,
                                          BoundMethod method = BoundMethod::Separate);

}  // namespace lfab::krylov
