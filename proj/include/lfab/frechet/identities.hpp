// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "lfab/matfunc/function.hpp"

namespace lfab::frechet
{

/// Largest n accepted by the identity checks (each evaluates two dense 2n x 2n functions).
inline constexpr Index kIdentityMaxN = 500;

/// |c^* L_f(A, E) b - <L_f(A^*, c b^*), E>| / (||c|| ||L_f(A, E) b||), with
/// <X, Y> = trace(X^* Y). Returns 0 when both sides vanish.
template <typename S>
double adjoint_identity_residual(const DenseMatrix<S> &A, const DenseMatrix<S> &E,
                                 const Vector<S> &b, const Vector<S> &c, const FunctionSpec &f);

/// The same residual with L_f(A, c b^*) in place of L_f(A^*, c b^*). Diagnostic only: the two
/// forms agree for Hermitian A and generally differ otherwise.
template <typename S>
double adjoint_identity_residual_unstarred(const DenseMatrix<S> &A, const DenseMatrix<S> &E,
                                           const Vector<S> &b, const Vector<S> &c,
                                           const FunctionSpec &f);

/// (c^* L_f(A, x y^*) b, conj(x^* L_f(A^*, c b^*) y)), both from the dense embedding.
template <typename S>
std::pair<S, S> rank_one_reduction(const DenseMatrix<S> &A, const Vector<S> &x,
                                   const Vector<S> &y, const Vector<S> &b, const Vector<S> &c,
                                   const FunctionSpec &f);

}  // namespace lfab::frechet
