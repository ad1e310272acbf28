// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "lfab/error.hpp"
#include "lfab/linalg/types.hpp"

namespace lfab
{

template <typename S>
struct Triplet
{
  Index row;
  Index col;
  S value;
};

/// How repeated (row, col) entries are merged when a matrix is built from triplets.
enum class DuplicatePolicy
{
  Sum,      // Matrix Market convention
  ClampOne  // unweighted graphs: any number of repeats yields 1
};

/// Compressed sparse row matrix. Immutable once built; use SparseBuilder or the factories.
///
/// Invariants (checked on construction): row_ptr is nondecreasing with row_ptr[0] = 0 and
/// row_ptr[rows] = nnz, and the column indices of every row are strictly increasing and
/// smaller than cols.
template <typename S>
class SparseMatrix
{
public:
  using Scalar = S;

  SparseMatrix() : row_ptr_(1, 0) {}
  SparseMatrix(Index rows, Index cols, std::vector<Index> row_ptr, std::vector<Index> col_idx,
               std::vector<S> values);

  static SparseMatrix zero(Index rows, Index cols);
  static SparseMatrix identity(Index n);
  static SparseMatrix diagonal(const Vector<S> &d);
  static SparseMatrix from_dense(const DenseMatrix<S> &m);
  static SparseMatrix from_triplets(Index rows, Index cols, std::vector<Triplet<S>> entries,
                                    DuplicatePolicy policy = DuplicatePolicy::Sum);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  Index nnz() const noexcept { return static_cast<Index>(values_.size()); }
  bool is_square() const noexcept { return rows_ == cols_; }

  std::span<const Index> row_ptr() const noexcept { return row_ptr_; }
  std::span<const Index> col_idx() const noexcept { return col_idx_; }
  std::span<const S> values() const noexcept { return values_; }

  /// Entry lookup by binary search within the row; zero when not stored.
  S coeff(Index i, Index j) const;

  DenseMatrix<S> to_dense() const;
  SparseMatrix transpose() const;
  /// Conjugate transpose (equals transpose() for real scalars).
  SparseMatrix adjoint() const;
  SparseMatrix scaled(S alpha) const;
  SparseMatrix<Complex> to_complex() const;
  double frobenius_norm() const;
  /// Bitwise equality with the adjoint.
  bool is_hermitian() const;
  bool is_diagonal() const;

private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Index> row_ptr_;
  std::vector<Index> col_idx_;
  std::vector<S> values_;
};

/// Accumulates entries, then produces an immutable SparseMatrix.
template <typename S>
class SparseBuilder
{
public:
  SparseBuilder(Index rows, Index cols) : rows_(rows), cols_(cols) {}

  void add(Index i, Index j, S value);
  void reserve(std::size_t n) { entries_.reserve(n); }
  std::size_t size() const noexcept { return entries_.size(); }

  SparseMatrix<S> build(DuplicatePolicy policy = DuplicatePolicy::Sum) &&;

private:
  Index rows_;
  Index cols_;
  std::vector<Triplet<S>> entries_;
};

/// y = A x. Real matrices act on complex vectors without promoting the matrix.
template <typename S, typename T>
void spmv_into(const SparseMatrix<S> &A, const Eigen::Ref<const Vector<T>> &x,
               Eigen::Ref<Vector<T>> y)
{
  static_assert(!is_complex_v<S> || is_complex_v<T>,
                "complex matrices require complex vectors");
  if (A.cols() != x.size() || A.rows() != y.size())
  {
    throw DimensionError("spmv: matrix is " + std::to_string(A.rows()) + "x" +
                         std::to_string(A.cols()) + ", vector has " +
                         std::to_string(x.size()) + " entries");
  }
  const auto rp = A.row_ptr();
  const auto ci = A.col_idx();
  const auto va = A.values();
  for (Index i = 0; i < A.rows(); ++i)
  {
    T acc(0);
    for (Index p = rp[i]; p < rp[i + 1]; ++p)
    {
      acc += va[p] * x[ci[p]];
    }
    y[i] = acc;
  }
}

template <typename S, typename T>
Vector<T> spmv(const SparseMatrix<S> &A, const Vector<T> &x)
{
  Vector<T> y(A.rows());
  spmv_into<S, T>(A, x, y);
  return y;
}

extern template class SparseMatrix<Real>;
extern template class SparseMatrix<Complex>;
extern template class SparseBuilder<Real>;
extern template class SparseBuilder<Complex>;

}  // namespace lfab
