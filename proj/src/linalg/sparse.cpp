// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/linalg/sparse.hpp"

#include <algorithm>
#include <cmath>

namespace lfab
{


template <typename S>
SparseMatrix<S>::SparseMatrix(Index rows, Index cols, std::vector<Index> row_ptr,
                              std::vector<Index> col_idx, std::vector<S> values)
  : rows_(rows), cols_(cols), row_ptr_(std::move(row_ptr)), col_idx_(std::move(col_idx)),
    values_(std::move(values))
{
  if (rows_ < 0 || cols_ < 0)
  {
    throw ArgumentError("SparseMatrix: negative dimension");
  }
  if (static_cast<Index>(row_ptr_.size()) != rows_ + 1 || row_ptr_.front() != 0)
  {
    throw ArgumentError("SparseMatrix: row_ptr must have rows+1 entries starting at 0");
  }
  if (col_idx_.size() != values_.size() ||
      row_ptr_.back() != static_cast<Index>(values_.size()))
  {
    throw ArgumentError("SparseMatrix: row_ptr[rows] must equal nnz");
  }
  for (Index i = 0; i < rows_; ++i)
  {
    if (row_ptr_[i + 1] < row_ptr_[i])
    {
      throw ArgumentError("SparseMatrix: row_ptr must be nondecreasing");
    }
    for (Index p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
    {
      if (col_idx_[p] < 0 || col_idx_[p] >= cols_)
      {
        throw ArgumentError("SparseMatrix: column index out of range in row " +
                            std::to_string(i));
      }
      if (p > row_ptr_[i] && col_idx_[p] <= col_idx_[p - 1])
      {
        throw ArgumentError("SparseMatrix: column indices must be strictly increasing in row " +
                            std::to_string(i));
      }
    }
  }
}

template <typename S>
SparseMatrix<S> SparseMatrix<S>::zero(Index rows, Index cols)
{
  return SparseMatrix(rows, cols, std::vector<Index>(rows + 1, 0), {}, {});
}

template <typename S>
SparseMatrix<S> SparseMatrix<S>::identity(Index n)
{
  return diagonal(Vector<S>::Ones(n));
}

template <typename S>
SparseMatrix<S> SparseMatrix<S>::diagonal(const Vector<S> &d)
{
  const Index n = d.size();
  std::vector<Index> rp(n + 1), ci(n);
  std::vector<S> va(n);
  for (Index i = 0; i < n; ++i)
  {
    rp[i + 1] = i + 1;
    ci[i] = i;
    va[i] = d[i];
  }
  return SparseMatrix(n, n, std::move(rp), std::move(ci), std::move(va));
}

template <typename S>
SparseMatrix<S> SparseMatrix<S>::from_dense(const DenseMatrix<S> &m)
{
  SparseBuilder<S> builder(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
  {
    for (Index j = 0; j < m.cols(); ++j)
    {
      if (m(i, j) != S(0))
      {
        builder.add(i, j, m(i, j));
      }
    }
  }
  return std::move(builder).build();
}

template <typename S>
SparseMatrix<S> SparseMatrix<S>::from_triplets(Index rows, Index cols,
                                               std::vector<Triplet<S>> entries,
                                               DuplicatePolicy policy)
{
  for (const auto &t : entries)
  {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
    {
      throw ArgumentError("SparseMatrix: triplet (" + std::to_string(t.row) + ", " +
                          std::to_string(t.col) + ") outside " + std::to_string(rows) + "x" +
                          std::to_string(cols));
    }
  }
  std::stable_sort(entries.begin(), entries.end(), [](const auto &a, const auto &b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  std::vector<Index> rp(rows + 1, 0), ci;
  std::vector<S> va;
  ci.reserve(entries.size());
  va.reserve(entries.size());
  for (std::size_t p = 0; p < entries.size();)
  {
    const auto &first = entries[p];
    S value = first.value;
    std::size_t q = p + 1;
    for (; q < entries.size() && entries[q].row == first.row && entries[q].col == first.col; ++q)
    {
      value += entries[q].value;
    }
    if (policy == DuplicatePolicy::ClampOne)
    {
      value = S(1);
    }
    ci.push_back(first.col);
    va.push_back(value);
    ++rp[first.row + 1];
    p = q;
  }
  for (Index i = 0; i < rows; ++i)
  {
    rp[i + 1] += rp[i];
  }
  return SparseMatrix(rows, cols, std::move(rp), std::move(ci), std::move(va));
}

template <typename S>
S SparseMatrix<S>::coeff(Index i, Index j) const
{
  const auto first = col_idx_.begin() + row_ptr_[i];
  const auto last = col_idx_.begin() + row_ptr_[i + 1];
  const auto it = std::lower_bound(first, last, j);
  if (it != last && *it == j)
  {
    return values_[static_cast<std::size_t>(it - col_idx_.begin())];
  }
  return S(0);
}

template <typename S>
DenseMatrix<S> SparseMatrix<S>::to_dense() const
{
  DenseMatrix<S> m = DenseMatrix<S>::Zero(rows_, cols_);
  for (Index i = 0; i < rows_; ++i)
  {
    for (Index p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
    {
      m(i, col_idx_[p]) = values_[p];
    }
  }
  return m;
}

template <typename S>
SparseMatrix<S> SparseMatrix<S>::transpose() const
{
  std::vector<Index> rp(cols_ + 1, 0), ci(values_.size());
  std::vector<S> va(values_.size());
  for (Index c : col_idx_)
  {
    ++rp[c + 1];
  }
  for (Index j = 0; j < cols_; ++j)
  {
    rp[j + 1] += rp[j];
  }
  std::vector<Index> next(rp.begin(), rp.end() - 1);
  // Rows are visited in order, so each output row receives increasing column indices.
  for (Index i = 0; i < rows_; ++i)
  {
    for (Index p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
    {
      const Index dst = next[col_idx_[p]]++;
      ci[dst] = i;
      va[dst] = values_[p];
    }
  }
  return SparseMatrix(cols_, rows_, std::move(rp), std::move(ci), std::move(va));
}

template <typename S>
SparseMatrix<S> SparseMatrix<S>::adjoint() const
{
  SparseMatrix t = transpose();
  if constexpr (is_complex_v<S>)
  {
    for (auto &v : t.values_)
    {
      v = std::conj(v);
    }
  }
  return t;
}

template <typename S>
SparseMatrix<S> SparseMatrix<S>::scaled(S alpha) const
{
  SparseMatrix out = *this;
  for (auto &v : out.values_)
  {
    v *= alpha;
  }
  return out;
}

template <typename S>
SparseMatrix<Complex> SparseMatrix<S>::to_complex() const
{
  std::vector<Complex> va(values_.begin(), values_.end());
  return SparseMatrix<Complex>(rows_, cols_, row_ptr_, col_idx_, std::move(va));
}

template <typename S>
double SparseMatrix<S>::frobenius_norm() const
{
  double s = 0.0;
  for (const auto &v : values_)
  {
    s += std::norm(v);
  }
  return std::sqrt(s);
}

template <typename S>
bool SparseMatrix<S>::is_hermitian() const
{
  if (!is_square())
  {
    return false;
  }
  const SparseMatrix h = adjoint();
  return h.row_ptr_ == row_ptr_ && h.col_idx_ == col_idx_ && h.values_ == values_;
}

template <typename S>
bool SparseMatrix<S>::is_diagonal() const
{
  for (Index i = 0; i < rows_; ++i)
  {
    for (Index p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
    {
      if (col_idx_[p] != i && values_[p] != S(0))
      {
        return false;
      }
    }
  }
  return is_square();
}

template <typename S>
void SparseBuilder<S>::add(Index i, Index j, S value)
{
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
  {
    throw ArgumentError("SparseBuilder: entry (" + std::to_string(i) + ", " +
                        std::to_string(j) + ") outside " + std::to_string(rows_) + "x" +
                        std::to_string(cols_));
  }
  entries_.push_back({i, j, value});
}

template <typename S>
SparseMatrix<S> SparseBuilder<S>::build(DuplicatePolicy policy) &&
{
  return SparseMatrix<S>::from_triplets(rows_, cols_, std::move(entries_), policy);
}

template class SparseMatrix<Real>;
template class SparseMatrix<Complex>;
template class SparseBuilder<Real>;
template class SparseBuilder<Complex>;

}  // namespace lfab
