// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/krylov/checks.hpp"

#include <Eigen/Eigenvalues>

#include "lfab/frechet/oracles.hpp"
#include "lfab/matfunc/dense.hpp"

namespace lfab::krylov
{

template <typename S>
double exactness_check(const LinearOperator<S> &A, const LinearOperator<S> &E,
                       const Vector<S> &b, const std::vector<double> &coefficients, Index k)
{
  const auto result =
    modified_arnoldi<S>(A, E, b, FunctionSpec::polynomial(coefficients), k, {});
  const Vector<S> exact = frechet::oracle_monomial_sum<S>(A, E, b, coefficients);
  const double err = (result.v1 - exact).norm();
  const double scale = exact.norm();
  if (scale == 0.0)
  {
    return err == 0.0 ? 0.0 : err / std::max(b.norm(), 1e-300);
  }
  return err / scale;
}

template <typename S>
ConvergenceBound verify_convergence_bound(const SparseMatrix<S> &A, const SparseMatrix<S> &E,
                                          const Vector<S> &b, const FunctionSpec &f, Index k,
                                          BoundMethod method)
{
  if (k < 2)
  {
    throw ArgumentError("verify_convergence_bound: k must be at least 2");
  }
  if (!A.is_hermitian())
  {
    throw ArgumentError("verify_convergence_bound: A must be Hermitian");
  }
  const DenseMatrix<S> Ad = A.to_dense();
  const DenseMatrix<S> Ed = E.to_dense();
  const auto oracle = frechet::oracle_daleckii_krein<S>(Ad, Ed, b, f);

  Vector<double> lambda;
  if (A.is_diagonal())
  {
    lambda = Ad.diagonal().real();
  }
  else
  {
    Eigen::SelfAdjointEigenSolver<DenseMatrix<S>> eig(Ad, Eigen::EigenvaluesOnly);
    lambda = eig.eigenvalues();
  }

  const FrechetResult<S> approx = method == BoundMethod::Separate
                                    ? modified_arnoldi<S>(A, E, b, f, k, {})
                                    : modified_arnoldi_basic<S>(A, E, b, f, k);

  ConvergenceBound out;
  out.lambda_min = lambda.minCoeff();
  out.lambda_max = lambda.maxCoeff();
  out.lhs = (oracle.Lb - approx.v1).norm();
  const auto cheb = matfunc::chebyshev_uniform_error(
    [&f](double x) { return f.derivative<double>(x); },
    SpectralInterval(out.lambda_min, out.lambda_max), static_cast<int>(k - 2));
  out.rhs = 2.0 * b.norm() * E.frobenius_norm() * cheb.error;
  out.lebesgue_factor = cheb.lebesgue_factor;
  return out;
}

#define LFAB_INSTANTIATE(S)                                                                    \
  template double exactness_check<S>(const LinearOperator<S> &, const LinearOperator<S> &,     \
                                     const Vector<S> &, const std::vector<double> &, Index);   \
  template ConvergenceBound verify_convergence_bound<S>(                                        \
    const SparseMatrix<S> &, const SparseMatrix<S> &, const Vector<S> &, const FunctionSpec &, \
    Index, BoundMethod);

LFAB_INSTANTIATE(Real)
LFAB_INSTANTIATE(Complex)

#undef LFAB_INSTANTIATE

}  // namespace lfab::krylov
