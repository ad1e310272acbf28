// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/krylov/arnoldi.hpp"

#include <cmath>

#include "lfab/matfunc/dense.hpp"

namespace lfab::krylov
{

namespace
{

template <typename S>
void require_start_vector(const Vector<S> &b, Index n, const char *who)
{
  if (b.size() != n)
  {
    throw DimensionError(std::string(who) + ": start vector has " + std::to_string(b.size()) +
                         " entries, operator is " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (!linalg::all_finite(b))
  {
    throw ArgumentError(std::string(who) + ": start vector has non-finite entries");
  }
  if (b.norm() == 0.0)
  {
    throw ArgumentError(std::string(who) + ": start vector is zero");
  }
}

}  // namespace

template <typename S>
ArnoldiProcess<S>::ArnoldiProcess(LinearOperator<S> A, const Vector<S> &b, Index max_steps,
                                  ArnoldiOptions options)
  : A_(std::move(A)), options_(options), max_steps_(max_steps)
{
  if (A_.rows() != A_.cols())
  {
    throw DimensionError("arnoldi: operator must be square");
  }
  require_start_vector(b, A_.rows(), "arnoldi");
  if (max_steps < 0)
  {
    throw ArgumentError("arnoldi: negative step count");
  }
  const Index n = A_.rows();
  Q_.setZero(n, max_steps + 1);
  H_.setZero(max_steps + 1, std::max<Index>(max_steps, 1));
  if (options_.inner == InnerProduct::Hermitian)
  {
    beta0_ = S(b.norm());
  }
  else
  {
    using std::sqrt;
    beta0_ = sqrt(b.array().square().sum());
  }
  Q_.col(0) = b / beta0_;
}

template <typename S>
bool ArnoldiProcess<S>::step()
{
  if (breakdown_ || steps_ >= max_steps_)
  {
    return false;
  }
  const Index j = steps_;
  Vector<S> w(A_.rows());
  A_.apply(Q_.col(j), w);
  auto gs = linalg::gram_schmidt_step<S>(Q_.leftCols(dim_), w, true, options_.breakdown_tol,
                                         options_.inner);
  H_.col(j).head(dim_) = gs.coeffs;
  ++steps_;
  if (gs.breakdown)
  {
    breakdown_ = true;
    return true;
  }
  H_(dim_, j) = gs.scale;
  Q_.col(dim_) = gs.q;
  ++dim_;
  return true;
}

template <typename S>
Vector<S> ArnoldiProcess<S>::approximate(const FunctionSpec &f, Index j) const
{
  const Index usable = breakdown_ ? dim_ : steps_;
  if (j < 1 || j > usable)
  {
    throw ArgumentError("arnoldi: approximation dimension " + std::to_string(j) +
                        " not available (have " + std::to_string(usable) + ")");
  }
  const DenseMatrix<S> F = matfunc::matfun<S>(H_.topLeftCorner(j, j), f);
  return Q_.leftCols(j) * (F.col(0) * beta0_);
}

template <typename S>
ArnoldiDecomposition<S> ArnoldiProcess<S>::decomposition() const
{
  ArnoldiDecomposition<S> d;
  d.Q = Q_.leftCols(dim_);
  d.H = H_.topLeftCorner(dim_, steps_);
  d.beta0 = beta0_;
  d.breakdown = breakdown_;
  return d;
}

template <typename S>
ArnoldiDecomposition<S> arnoldi(const LinearOperator<S> &A, const Vector<S> &b, Index k,
                                ArnoldiOptions options)
{
  ArnoldiProcess<S> process(A, b, k, options);
  while (process.step())
  {
  }
  return process.decomposition();
}

template <typename S>
FabResult<S> arnoldi_fAb(const LinearOperator<S> &A, const Vector<S> &b, const FunctionSpec &f,
                         Index k, const FabOptions<S> &options)
{
  if (k < 1)
  {
    throw ArgumentError("arnoldi_fAb: k must be at least 1");
  }
  ArnoldiProcess<S> process(A, b, k, {options.breakdown_tol, options.inner});
  FabResult<S> result;
  Vector<S> previous;
  for (Index j = 1; j <= k; ++j)
  {
    process.step();
    const bool last = j == k || process.breakdown();
    if (!(options.observer || last || (options.check_every > 0 && j % options.check_every == 0)))
    {
      continue;
    }
    const Index dim = process.breakdown() ? process.dimension() : j;
    Vector<S> approx = process.approximate(f, dim);
    const double update = previous.size() == 0 ? std::numeric_limits<double>::infinity()
                                               : relative_update<S>(approx, previous);
    result.history.push_back({j, update});
    if (options.observer)
    {
      options.observer(j, approx);
    }
    previous = std::move(approx);
    result.iterations = j;
    if (process.breakdown())
    {
      result.breakdown = true;
      break;
    }
    if (options.stop_tol > 0.0 && update <= options.stop_tol)
    {
      break;
    }
  }
  result.approx = std::move(previous);
  return result;
}

template class ArnoldiProcess<Real>;
template class ArnoldiProcess<Complex>;
template ArnoldiDecomposition<Real> arnoldi<Real>(const LinearOperator<Real> &,
                                                  const Vector<Real> &, Index, ArnoldiOptions);
template ArnoldiDecomposition<Complex> arnoldi<Complex>(const LinearOperator<Complex> &,
                                                        const Vector<Complex> &, Index,
                                                        ArnoldiOptions);
template FabResult<Real> arnoldi_fAb<Real>(const LinearOperator<Real> &, const Vector<Real> &,
                                           const FunctionSpec &, Index,
                                           const FabOptions<Real> &);
template FabResult<Complex> arnoldi_fAb<Complex>(const LinearOperator<Complex> &,
                                                 const Vector<Complex> &, const FunctionSpec &,
                                                 Index, const FabOptions<Complex> &);

}  // namespace lfab::krylov
