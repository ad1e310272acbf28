// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>

#include "lfab/linalg/sparse.hpp"

namespace lfab
{

/// Matrix-free square or rectangular operator x -> y. Copies share the captured state.
///
/// Sparse matrices convert implicitly; the operator keeps its own copy of the matrix, so
/// temporaries are safe to pass.
template <typename S>
class LinearOperator
{
public:
  using Apply = std::function<void(const Vector<S> &x, Vector<S> &y)>;

  LinearOperator(Index rows, Index cols, Apply apply)
    : rows_(rows), cols_(cols), apply_(std::move(apply))
  {
  }

  template <typename T>
    requires(std::is_same_v<T, S> || (!is_complex_v<T> && is_complex_v<S>))
  LinearOperator(const SparseMatrix<T> &A)  // NOLINT(google-explicit-constructor)
    : rows_(A.rows()), cols_(A.cols())
  {
    auto held = std::make_shared<const SparseMatrix<T>>(A);
    apply_ = [held](const Vector<S> &x, Vector<S> &y) { spmv_into<T, S>(*held, x, y); };
  }

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }

  void apply(const Vector<S> &x, Vector<S> &y) const
  {
    if (x.size() != cols_)
    {
      throw DimensionError("LinearOperator: input has " + std::to_string(x.size()) +
                           " entries, expected " + std::to_string(cols_));
    }
    y.resize(rows_);
    apply_(x, y);
  }

  Vector<S> operator*(const Vector<S> &x) const
  {
    Vector<S> y(rows_);
    apply(x, y);
    return y;
  }

  /// Dense representation, column by column. Intended for small operators in tests and oracles.
  DenseMatrix<S> to_dense() const
  {
    DenseMatrix<S> m(rows_, cols_);
    Vector<S> e = Vector<S>::Zero(cols_), y(rows_);
    for (Index j = 0; j < cols_; ++j)
    {
      e[j] = S(1);
      apply(e, y);
      m.col(j) = y;
      e[j] = S(0);
    }
    return m;
  }

private:
  Index rows_;
  Index cols_;
  Apply apply_;
};

namespace linalg
{

template <typename S>
LinearOperator<S> identity_operator(Index n)
{
  return LinearOperator<S>(n, n, [](const Vector<S> &x, Vector<S> &y) { y = x; });
}

/// x -> A x + alpha B x, never forming the sum.
template <typename S>
LinearOperator<S> lazy_sum(LinearOperator<S> A, LinearOperator<S> B, S alpha)
{
  if (A.rows() != B.rows() || A.cols() != B.cols())
  {
    throw DimensionError("lazy_sum: operand shapes differ");
  }
  const Index m = A.rows();
  return LinearOperator<S>(m, A.cols(),
                           [A = std::move(A), B = std::move(B), alpha](const Vector<S> &x,
                                                                        Vector<S> &y) {
                             Vector<S> t(A.rows());
                             A.apply(x, y);
                             B.apply(x, t);
                             y += alpha * t;
                           });
}

/// x -> u (v^* x); the rank-one matrix u v^* is never materialized.
template <typename S>
LinearOperator<S> rank_one_operator(Vector<S> u, Vector<S> v)
{
  const Index m = u.size(), n = v.size();
  return LinearOperator<S>(m, n, [u = std::move(u), v = std::move(v)](const Vector<S> &x,
                                                                     Vector<S> &y) {
    y = u * v.dot(x);
  });
}

/// The 2n x 2n embedding [[A, E], [0, A]] acting on stacked vectors [x; y].
template <typename S>
LinearOperator<S> block_embedding_operator(LinearOperator<S> A, LinearOperator<S> E)
{
  if (!(A.rows() == A.cols() && E.rows() == A.rows() && E.cols() == A.cols()))
  {
    throw DimensionError("block_embedding_operator: A and E must be square of equal size");
  }
  const Index n = A.rows();
  return LinearOperator<S>(2 * n, 2 * n,
                           [A = std::move(A), E = std::move(E), n](const Vector<S> &x,
                                                                    Vector<S> &y) {
                             Vector<S> top(n), bottom(n), ex(n);
                             A.apply(x.head(n), top);
                             E.apply(x.tail(n), ex);
                             A.apply(x.tail(n), bottom);
                             y.head(n) = top + ex;
                             y.tail(n) = bottom;
                           });
}

}  // namespace linalg

}  // namespace lfab
