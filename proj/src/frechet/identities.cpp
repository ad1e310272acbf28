// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/frechet/identities.hpp"

#include "lfab/frechet/oracles.hpp"

namespace lfab::frechet
{

namespace
{

template <typename S>
void require_identity_inputs(const DenseMatrix<S> &A, const Vector<S> &b, const Vector<S> &c,
                             const char *who)
{
  if (A.rows() != A.cols() || b.size() != A.rows() || c.size() != A.rows())
  {
    throw DimensionError(std::string(who) + ": inconsistent sizes");
  }
  if (A.rows() > kIdentityMaxN)
  {
    throw SizeGuardError(std::string(who) + ": n = " + std::to_string(A.rows()) +
                         " exceeds the limit " + std::to_string(kIdentityMaxN));
  }
}

template <typename S>
double adjoint_residual(const DenseMatrix<S> &A, const DenseMatrix<S> &A_dir,
                        const DenseMatrix<S> &E, const Vector<S> &b, const Vector<S> &c,
                        const FunctionSpec &f)
{
  const Vector<S> Lb = frechet_dense<S>(A, E, f) * b;
  const S lhs = c.dot(Lb);
  const DenseMatrix<S> cb = c * b.adjoint();
  const DenseMatrix<S> G = frechet_dense<S>(A_dir, cb, f);
  // trace(G^* E) = sum_ij conj(G_ij) E_ij
  const S rhs = (G.conjugate().cwiseProduct(E)).sum();
  const double scale = c.norm() * Lb.norm();
  const double diff = std::abs(lhs - rhs);
  if (scale == 0.0)
  {
    return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return diff / scale;
}

}  // namespace

template <typename S>
double adjoint_identity_residual(const DenseMatrix<S> &A, const DenseMatrix<S> &E,
                                 const Vector<S> &b, const Vector<S> &c, const FunctionSpec &f)
{
  require_identity_inputs(A, b, c, "adjoint_identity_residual");
  return adjoint_residual<S>(A, A.adjoint(), E, b, c, f);
}

template <typename S>
double adjoint_identity_residual_unstarred(const DenseMatrix<S> &A, const DenseMatrix<S> &E,
                                           const Vector<S> &b, const Vector<S> &c,
                                           const FunctionSpec &f)
{
  require_identity_inputs(A, b, c, "adjoint_identity_residual_unstarred");
  return adjoint_residual<S>(A, A, E, b, c, f);
}

template <typename S>
std::pair<S, S> rank_one_reduction(const DenseMatrix<S> &A, const Vector<S> &x,
                                   const Vector<S> &y, const Vector<S> &b, const Vector<S> &c,
                                   const FunctionSpec &f)
{
  require_identity_inputs(A, b, c, "rank_one_reduction");
  if (x.size() != A.rows() || y.size() != A.rows())
  {
    throw DimensionError("rank_one_reduction: x and y must have length n");
  }
  const DenseMatrix<S> xy = x * y.adjoint();
  const S lhs = c.dot(frechet_dense<S>(A, xy, f) * b);
  const DenseMatrix<S> cb = c * b.adjoint();
  const DenseMatrix<S> As = A.adjoint();
  const S inner = x.dot(frechet_dense<S>(As, cb, f) * y);
  return {lhs, Eigen::numext::conj(inner)};
}

#define LFAB_INSTANTIATE(S)                                                                     \
  template double adjoint_identity_residual<S>(const DenseMatrix<S> &, const DenseMatrix<S> &, \
                                               const Vector<S> &, const Vector<S> &,            \
                                               const FunctionSpec &);                           \
  template double adjoint_identity_residual_unstarred<S>(                                       \
    const DenseMatrix<S> &, const DenseMatrix<S> &, const Vector<S> &, const Vector<S> &,       \
    const FunctionSpec &);                                                                      \
  template std::pair<S, S> rank_one_reduction<S>(const DenseMatrix<S> &, const Vector<S> &,    \
                                                 const Vector<S> &, const Vector<S> &,          \
                                                 const Vector<S> &, const FunctionSpec &);

LFAB_INSTANTIATE(Real)
LFAB_INSTANTIATE(Complex)

#undef LFAB_INSTANTIATE

}  // namespace lfab::frechet
