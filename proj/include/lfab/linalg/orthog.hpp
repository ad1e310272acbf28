// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "lfab/linalg/types.hpp"

namespace lfab
{

/// Relative residual below which a new direction counts as linearly dependent.
inline constexpr double kDefaultBreakdownTol = 1.0e-12;

template <typename S>
struct GramSchmidtResult
{
  Vector<S> coeffs;        // Q^* w, summed over both passes
  double residual_norm;    // ||w - Q coeffs||_2
  S scale;                 // normalizing factor: residual_norm, or the bilinear "norm"
  Vector<S> q;             // unit new direction; zero on breakdown
  bool breakdown;
};

namespace linalg
{

/// One classical Gram-Schmidt step of w against the orthonormal columns of Q, with an
/// optional second pass. Breakdown (residual_norm <= breakdown_tol * ||w||) is reported in
/// the result rather than thrown.
template <typename S>
GramSchmidtResult<S> gram_schmidt_step(const Eigen::Ref<const DenseMatrix<S>> &Q,
                                       const Vector<S> &w, bool reorth = true,
                                       double breakdown_tol = kDefaultBreakdownTol,
                                       InnerProduct ip = InnerProduct::Hermitian);

/// Orthonormal basis of span(columns of M) by sequential Gram-Schmidt, dropping columns whose
/// residual falls below tol times their own norm.
template <typename S>
DenseMatrix<S> orth(const DenseMatrix<S> &M, double tol = kDefaultBreakdownTol);

/// Largest principal angle (in radians) between the column spans of two orthonormal bases of
/// equal dimension, computed from the sines to stay accurate for tiny angles.
template <typename S>
double max_principal_angle(const DenseMatrix<S> &Q1, const DenseMatrix<S> &Q2);

/// max |Q^* Q - I|.
template <typename S>
double orthonormality_error(const Eigen::Ref<const DenseMatrix<S>> &Q);

}  // namespace linalg

}  // namespace lfab
