// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "lfab/linalg/sparse.hpp"
#include "lfab/matfunc/function.hpp"

namespace lfab::frechet
{

/// L_f(A, E) b for square A, E of equal size.
template <typename S>
struct FrechetProblem
{
  SparseMatrix<S> A;
  SparseMatrix<S> E;
  Vector<S> b;
  FunctionSpec f;

  /// Throws DimensionError or ArgumentError when the data are inconsistent.
  void validate() const
  {
    if (!A.is_square() || A.rows() != E.rows() || A.cols() != E.cols())
    {
      throw DimensionError("FrechetProblem: A and E must be square of equal size");
    }
    if (b.size() != A.rows())
    {
      throw DimensionError("FrechetProblem: b has " + std::to_string(b.size()) +
                           " entries, expected " + std::to_string(A.rows()));
    }
    if (!linalg::all_finite(b))
    {
      throw ArgumentError("FrechetProblem: b has non-finite entries");
    }
  }

  Index size() const noexcept { return A.rows(); }
};

}  // namespace lfab::frechet
