// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "lfab/frechet/problem.hpp"
#include "lfab/linalg/operator.hpp"

namespace lfab::frechet
{

/// Largest n accepted by the dense 2n x 2n embedding oracle.
inline constexpr Index kDenseOracleMaxN = 2000;

/// Eigenvector condition number above which the Daleckii-Krein result is flagged.
inline constexpr double kEigenvectorCondWarn = 1.0e8;

enum class OracleMethod
{
  DenseEmbedding,
  DaleckiiKrein
};

std::string to_string(OracleMethod method);

template <typename S>
struct OracleResult
{
  Vector<S> Lb;   // L_f(A, E) b
  Vector<S> fAb;  // f(A) b
  OracleMethod method;
  double eigenvector_cond = 1.0;  // Daleckii-Krein only
  bool ill_conditioned = false;   // eigenvector_cond > kEigenvectorCondWarn
};

/// f([[A, E], [0, A]]) formed densely; Lb from the top-right block. Throws SizeGuardError for
/// n > kDenseOracleMaxN.
template <typename S>
OracleResult<S> oracle_dense_embedding(const FrechetProblem<S> &problem);

/// Dense L_f(A, E): the top-right block of f([[A, E], [0, A]]).
template <typename S>
DenseMatrix<S> frechet_dense(const DenseMatrix<S> &A, const DenseMatrix<S> &E,
                             const FunctionSpec &f);

/// X (D o (X^-1 E X)) X^-1 b with A = X diag(lambda) X^-1 and D the divided-difference table.
/// Diagonal A skips the eigensolver and Hermitian A uses the self-adjoint one.
template <typename S>
OracleResult<S> oracle_daleckii_krein(const DenseMatrix<S> &A, const DenseMatrix<S> &E,
                                      const Vector<S> &b, const FunctionSpec &f);

/// Same, for a diagonal A given by its diagonal; costs O(n^2) scalar work and no eigensolve.
template <typename S>
OracleResult<S> oracle_daleckii_krein_diagonal(const Vector<S> &lambda, const DenseMatrix<S> &E,
                                               const Vector<S> &b, const FunctionSpec &f);

/// L_p(A, E) b = sum_j c_j sum_{l < j} A^l E A^(j-1-l) b using only matrix-vector products.
template <typename S>
Vector<S> oracle_monomial_sum(const LinearOperator<S> &A, const LinearOperator<S> &E,
                              const Vector<S> &b, const std::vector<double> &coefficients);

}  // namespace lfab::frechet
