// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/krylov/modified.hpp"

namespace lfab::krylov
{

namespace
{

void require_budget(Index k, const char *who)
{
  if (k < 1)
  {
    throw ArgumentError(std::string(who) + ": k must be at least 1");
  }
}

template <typename S>
Vector<S> stacked_start(const LinearOperator<S> &A, const Vector<S> &b)
{
  if (b.size() != A.rows())
  {
    throw DimensionError("b has " + std::to_string(b.size()) + " entries, expected " +
                         std::to_string(A.rows()));
  }
  Vector<S> z = Vector<S>::Zero(2 * b.size());
  z.tail(b.size()) = b;
  return z;
}

}  // namespace

template <typename S>
FrechetResult<S> block_embedding_arnoldi(const LinearOperator<S> &A, const LinearOperator<S> &E,
                                         const Vector<S> &b, const FunctionSpec &f, Index k,
                                         const FrechetOptions<S> &options)
{
  require_budget(k, "block_embedding_arnoldi");
  const Index n = A.rows();
  ArnoldiProcess<S> process(linalg::block_embedding_operator(A, E), stacked_start(A, b), k,
                            {options.breakdown_tol, InnerProduct::Hermitian});
  FrechetResult<S> result;
  ConvergenceMonitor<S> monitor(options, result);
  for (Index j = 1; j <= k; ++j)
  {
    process.step();
    const bool final = j == k || process.breakdown();
    if (!monitor.due(j, final))
    {
      continue;
    }
    const Vector<S> z = process.approximate(f, process.breakdown() ? process.dimension() : j);
    result.iterations = j;
    if (monitor.record(j, z.head(n), z.tail(n)) || process.breakdown())
    {
      break;
    }
  }
  result.breakdown = process.breakdown();
  result.top_dimension = result.bottom_dimension = process.dimension();
  return result;
}

template <typename S>
FrechetResult<S> modified_arnoldi_basic(const LinearOperator<S> &A, const LinearOperator<S> &E,
                                        const Vector<S> &b, const FunctionSpec &f, Index k,
                                        double breakdown_tol)
{
  require_budget(k, "modified_arnoldi_basic");
  const Index n = A.rows();
  ArnoldiProcess<S> process(linalg::block_embedding_operator(A, E), stacked_start(A, b), k - 1,
                            {breakdown_tol, InnerProduct::Hermitian});
  while (process.step())
  {
  }
  const DenseMatrix<S> Q = process.Q();
  // The first top column is structurally zero; orth drops it.
  const DenseMatrix<S> U = linalg::orth<S>(Q.topRows(n), breakdown_tol);
  const DenseMatrix<S> V = linalg::orth<S>(Q.bottomRows(n), breakdown_tol);
  auto [v1, v2] = project_and_evaluate<S>(A, E, b, f, U, V);

  FrechetResult<S> result;
  result.v1 = std::move(v1);
  result.v2 = std::move(v2);
  result.iterations = process.dimension();
  result.breakdown = process.breakdown();
  result.top_dimension = U.cols();
  result.bottom_dimension = V.cols();
  result.history.push_back({process.dimension(), std::numeric_limits<double>::infinity()});
  return result;
}

template <typename S>
FrechetResult<S> modified_arnoldi(const LinearOperator<S> &A, const LinearOperator<S> &E,
                                  const Vector<S> &b, const FunctionSpec &f, Index k,
                                  const FrechetOptions<S> &options)
{
  require_budget(k, "modified_arnoldi");
  SeparateOrthonormalization<S> process(A, E, b, k,
                                        {options.breakdown_tol, options.mutate_r_update});
  FrechetResult<S> result;
  ConvergenceMonitor<S> monitor(options, result);
  for (Index i = 1; i <= k; ++i)
  {
    const bool grew = process.step();
    if (!grew && result.v1.size() != 0)
    {
      // Nothing changed since the last evaluation.
      break;
    }
    if (!monitor.due(i, i == k || !grew))
    {
      continue;
    }
    auto [v1, v2] = process.approximate(f, options.evaluation);
    result.iterations = process.iterations();
    if (monitor.record(i, std::move(v1), std::move(v2)) || !grew)
    {
      break;
    }
  }
  // A last evaluation if the spaces stopped growing between two checks.
  if (process.iterations() != result.iterations || result.v1.size() == 0)
  {
    auto [v1, v2] = process.approximate(f, options.evaluation);
    result.iterations = process.iterations();
    monitor.record(process.iterations(), std::move(v1), std::move(v2));
  }
  result.breakdown = process.bottom_breakdown() || process.top_deflated();
  result.top_dimension = process.top_dimension();
  result.bottom_dimension = process.bottom_dimension();
  return result;
}

#define LFAB_INSTANTIATE(S)                                                                    \
  template FrechetResult<S> block_embedding_arnoldi<S>(                                        \
    const LinearOperator<S> &, const LinearOperator<S> &, const Vector<S> &, const FunctionSpec &, \
    Index, const FrechetOptions<S> &);                                                          \
  template FrechetResult<S> modified_arnoldi_basic<S>(const LinearOperator<S> &,               \
                                                      const LinearOperator<S> &,               \
                                                      const Vector<S> &, const FunctionSpec &, \
                                                      Index, double);                          \
  template FrechetResult<S> modified_arnoldi<S>(const LinearOperator<S> &,                     \
                                                const LinearOperator<S> &, const Vector<S> &,  \
                                                const FunctionSpec &, Index,                   \
                                                const FrechetOptions<S> &);

LFAB_INSTANTIATE(Real)
LFAB_INSTANTIATE(Complex)

#undef LFAB_INSTANTIATE

}  // namespace lfab::krylov
