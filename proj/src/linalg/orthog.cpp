// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/linalg/orthog.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace lfab::linalg
{

template <typename S>
GramSchmidtResult<S> gram_schmidt_step(const Eigen::Ref<const DenseMatrix<S>> &Q,
                                       const Vector<S> &w, bool reorth, double breakdown_tol,
                                       InnerProduct ip)
{
  GramSchmidtResult<S> out;
  out.coeffs = Vector<S>::Zero(Q.cols());
  Vector<S> r = w;
  const double w_norm = w.norm();

  const int passes = reorth ? 2 : 1;
  for (int pass = 0; pass < passes && Q.cols() > 0; ++pass)
  {
    Vector<S> c = ip == InnerProduct::Hermitian ? Vector<S>(Q.adjoint() * r)
                                                : Vector<S>(Q.transpose() * r);
    r.noalias() -= Q * c;
    out.coeffs += c;
  }

  out.residual_norm = r.norm();
  out.breakdown = !(out.residual_norm > breakdown_tol * w_norm) || w_norm == 0.0;
  if (ip == InnerProduct::Hermitian)
  {
    out.scale = S(out.residual_norm);
  }
  else
  {
    using std::sqrt;
    out.scale = sqrt(r.array().square().sum());
  }
  if (out.breakdown)
  {
    out.q = Vector<S>::Zero(w.size());
  }
  else
  {
    out.q = r / out.scale;
  }
  return out;
}

template <typename S>
DenseMatrix<S> orth(const DenseMatrix<S> &M, double tol)
{
  DenseMatrix<S> Q(M.rows(), std::min(M.rows(), M.cols()));
  Index kept = 0;
  for (Index j = 0; j < M.cols() && kept < Q.cols(); ++j)
  {
    auto gs = gram_schmidt_step<S>(Q.leftCols(kept), M.col(j), true, tol);
    if (!gs.breakdown)
    {
      Q.col(kept++) = gs.q;
    }
  }
  return Q.leftCols(kept);
}

template <typename S>
double max_principal_angle(const DenseMatrix<S> &Q1, const DenseMatrix<S> &Q2)
{
  if (Q1.rows() != Q2.rows() || Q1.cols() != Q2.cols())
  {
    return M_PI / 2;
  }
  if (Q2.cols() == 0)
  {
    return 0.0;
  }
  // sin of the largest angle = ||(I - Q1 Q1^*) Q2||_2.
  const DenseMatrix<S> residual = Q2 - Q1 * (Q1.adjoint() * Q2);
  Eigen::JacobiSVD<DenseMatrix<S>> svd(residual);
  const double s = std::min(1.0, static_cast<double>(svd.singularValues()(0)));
  return std::asin(s);
}

template <typename S>
double orthonormality_error(const Eigen::Ref<const DenseMatrix<S>> &Q)
{
  const DenseMatrix<S> G = Q.adjoint() * Q - DenseMatrix<S>::Identity(Q.cols(), Q.cols());
  return max_abs(G);
}

#define LFAB_INSTANTIATE(S)                                                                     \
  template GramSchmidtResult<S> gram_schmidt_step<S>(const Eigen::Ref<const DenseMatrix<S>> &, \
                                                     const Vector<S> &, bool, double,          \
                                                     InnerProduct);                            \
  template DenseMatrix<S> orth<S>(const DenseMatrix<S> &, double);                             \
  template double max_principal_angle<S>(const DenseMatrix<S> &, const DenseMatrix<S> &);      \
  template double orthonormality_error<S>(const Eigen::Ref<const DenseMatrix<S>> &);

LFAB_INSTANTIATE(Real)
LFAB_INSTANTIATE(Complex)

#undef LFAB_INSTANTIATE

}  // namespace lfab::linalg
