// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "lfab/linalg/random.hpp"
#include "lfab/linalg/sparse.hpp"

namespace lfab::test
{

template <typename Derived1, typename Derived2>
double rel_err(const Eigen::MatrixBase<Derived1> &x, const Eigen::MatrixBase<Derived2> &ref)
{
  const double scale = ref.norm();
  const double err = (x - ref).norm();
  return scale > 0.0 ? err / scale : err;
}

/// Sparse n x n matrix with about 20% nonzeros, scaled to norm O(1).
template <typename S>
SparseMatrix<S> small_random(Index n, Rng &rng, double density = 0.2)
{
  return linalg::random_sparse<S>(n, n, density, rng, 1.0 / std::sqrt(density * double(n)));
}

inline SparseMatrix<Real> diag_range(Index n, double start = 1.0)
{
  return SparseMatrix<Real>::diagonal(Vector<Real>::LinSpaced(n, start, start + double(n - 1)));
}

}  // namespace lfab::test
