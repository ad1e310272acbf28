// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/krylov/structured.hpp"

#include <Eigen/Eigenvalues>

#include "lfab/matfunc/dense.hpp"

namespace lfab::krylov
{

namespace
{

template <typename S>
void require_pair(const LinearOperator<S> &A, const LinearOperator<S> &E, const Vector<S> &b,
                  const char *who)
{
  if (A.rows() != A.cols() || E.rows() != A.rows() || E.cols() != A.cols())
  {
    throw DimensionError(std::string(who) + ": A and E must be square of equal size");
  }
  if (b.size() != A.rows())
  {
    throw DimensionError(std::string(who) + ": b has " + std::to_string(b.size()) +
                         " entries, expected " + std::to_string(A.rows()));
  }
  if (!linalg::all_finite(b))
  {
    throw ArgumentError(std::string(who) + ": b has non-finite entries");
  }
  if (b.norm() == 0.0)
  {
    throw ArgumentError(std::string(who) + ": b is zero");
  }
}

template <typename S>
DenseMatrix<S> apply_columns(const LinearOperator<S> &A, const DenseMatrix<S> &X)
{
  DenseMatrix<S> Y(A.rows(), X.cols());
  Vector<S> x, y;
  for (Index j = 0; j < X.cols(); ++j)
  {
    x = X.col(j);
    A.apply(x, y);
    Y.col(j) = y;
  }
  return Y;
}

template <typename S>
std::pair<Vector<S>, Vector<S>> evaluate_spectral(const CompressedBlockMatrix<S> &H,
                                                  const Eigen::Ref<const DenseMatrix<S>> &U,
                                                  const Eigen::Ref<const DenseMatrix<S>> &V,
                                                  const Vector<S> &vb, const FunctionSpec &f)
{
  using Solver = Eigen::SelfAdjointEigenSolver<DenseMatrix<S>>;
  const Index nu = H.Huu.rows(), nv = H.Hvv.rows();
  const Solver ev(DenseMatrix<S>(S(0.5) * (H.Hvv + H.Hvv.adjoint())));
  if (ev.info() != Eigen::Success)
  {
    throw ConvergenceError("evaluate_compressed: eigensolver failed");
  }
  const Vector<S> y = ev.eigenvectors().adjoint() * vb;
  Vector<S> fy(nv);
  for (Index j = 0; j < nv; ++j)
  {
    const double fl = f.value<double>(ev.eigenvalues()[j]);
    if (!std::isfinite(fl))
    {
      throw ConvergenceError("evaluate_compressed: f is not finite at a Ritz value");
    }
    fy[j] = S(fl) * y[j];
  }
  Vector<S> v2 = V * (ev.eigenvectors() * fy);
  Vector<S> v1 = Vector<S>::Zero(U.rows());
  if (nu > 0)
  {
    const Solver eu(DenseMatrix<S>(S(0.5) * (H.Huu + H.Huu.adjoint())));
    if (eu.info() != Eigen::Success)
    {
      throw ConvergenceError("evaluate_compressed: eigensolver failed");
    }
    DenseMatrix<S> M = eu.eigenvectors().adjoint() * H.Huv * ev.eigenvectors();
    for (Index j = 0; j < nv; ++j)
    {
      for (Index i = 0; i < nu; ++i)
      {
        const double dd = matfunc::divided_difference<double>(f, eu.eigenvalues()[i],
                                                              ev.eigenvalues()[j]);
        if (!std::isfinite(dd))
        {
          throw ConvergenceError("evaluate_compressed: divided difference is not finite");
        }
        M(i, j) *= S(dd);
      }
    }
    v1 = U * (eu.eigenvectors() * (M * y));
  }
  return {std::move(v1), std::move(v2)};
}

}  // namespace

template <typename S>
DenseMatrix<S> CompressedBlockMatrix<S>::assemble() const
{
  const Index nu = Huu.rows(), nv = Hvv.rows();
  DenseMatrix<S> M = DenseMatrix<S>::Zero(nu + nv, nu + nv);
  M.topLeftCorner(nu, nu) = Huu;
  M.topRightCorner(nu, nv) = Huv;
  M.bottomRightCorner(nv, nv) = Hvv;
  return M;
}

template <typename S>
SeparateOrthonormalization<S>::SeparateOrthonormalization(LinearOperator<S> A,
                                                          LinearOperator<S> E,
                                                          const Vector<S> &b,
                                                          Index max_iterations,
                                                          SeparateOrthOptions options)
  : A_(std::move(A)), E_(std::move(E)), options_(options), max_iterations_(max_iterations)
{
  require_pair(A_, E_, b, "separate_orthonormalization");
  if (max_iterations < 0)
  {
    throw ArgumentError("separate_orthonormalization: negative iteration count");
  }
  const Index n = A_.rows();
  const Index cu = std::max<Index>(max_iterations, 1);
  const Index cv = max_iterations + 1;
  U_.setZero(n, cu);
  AU_.setZero(n, cu);
  V_.setZero(n, cv);
  AV_.setZero(n, cv);
  EV_.setZero(n, cv);
  R_.setZero(cu, cv);
  UAU_.setZero(cu, cu);
  UEV_.setZero(cu, cv);
  VAV_.setZero(cv, cv);

  beta0_ = b.norm();
  append_v(b / S(beta0_));
}

template <typename S>
void SeparateOrthonormalization<S>::append_v(const Vector<S> &v)
{
  const Index j = nv_;
  V_.col(j) = v;
  Vector<S> y;
  A_.apply(v, y);
  AV_.col(j) = y;
  E_.apply(v, y);
  EV_.col(j) = y;
  VAV_.col(j).head(j + 1) = V_.leftCols(j + 1).adjoint() * AV_.col(j);
  if (j > 0)
  {
    VAV_.row(j).head(j) = V_.col(j).adjoint() * AV_.leftCols(j);
  }
  if (nu_ > 0)
  {
    UEV_.col(j).head(nu_) = U_.leftCols(nu_).adjoint() * EV_.col(j);
  }
  ++nv_;
}

template <typename S>
void SeparateOrthonormalization<S>::append_u(const Vector<S> &u)
{
  const Index p = nu_;
  U_.col(p) = u;
  Vector<S> y;
  A_.apply(u, y);
  AU_.col(p) = y;
  UAU_.col(p).head(p + 1) = U_.leftCols(p + 1).adjoint() * AU_.col(p);
  if (p > 0)
  {
    UAU_.row(p).head(p) = U_.col(p).adjoint() * AU_.leftCols(p);
  }
  if (nv_ > 0)
  {
    UEV_.row(p).head(nv_) = U_.col(p).adjoint() * EV_.leftCols(nv_);
  }
  ++nu_;
}

template <typename S>
bool SeparateOrthonormalization<S>::grow_top_closure()
{
  // Candidates in order: E V (fixed once V froze), then A U (grows with U).
  while (closure_cursor_ < nv_ + nu_)
  {
    const Index c = closure_cursor_++;
    const Vector<S> candidate = c < nv_ ? Vector<S>(EV_.col(c)) : Vector<S>(AU_.col(c - nv_));
    auto gs = linalg::gram_schmidt_step<S>(U_.leftCols(nu_), candidate, true,
                                           options_.breakdown_tol);
    if (!gs.breakdown)
    {
      append_u(gs.q);
      return true;
    }
  }
  return false;
}

template <typename S>
bool SeparateOrthonormalization<S>::step()
{
  if (exhausted_ || iterations_ >= max_iterations_)
  {
    return false;
  }
  if (bottom_breakdown_)
  {
    if (!grow_top_closure())
    {
      exhausted_ = true;
      return false;
    }
    ++iterations_;
    return true;
  }

  const Index last = nv_ - 1;
  const auto gv = linalg::gram_schmidt_step<S>(V_.leftCols(nv_), Vector<S>(AV_.col(last)), true,
                                               options_.breakdown_tol);

  // t = A w + E v_last with w = U r, r the last column of R; A w comes from the cache.
  Vector<S> t = EV_.col(last);
  if (nu_ > 0)
  {
    t += AU_.leftCols(nu_) * R_.col(last).head(nu_);
  }
  const auto gu = linalg::gram_schmidt_step<S>(U_.leftCols(nu_), t, true, options_.breakdown_tol);

  if (gv.breakdown)
  {
    // K(A, b) is invariant. The new Krylov vector has a zero bottom, so R is left alone and
    // only the top span can still grow.
    bottom_breakdown_ = true;
    bool grew = false;
    if (!gu.breakdown)
    {
      append_u(gu.q);
      grew = true;
    }
    else
    {
      grew = grow_top_closure();
    }
    if (!grew)
    {
      exhausted_ = true;
      return false;
    }
    ++iterations_;
    return true;
  }

  const S beta = gv.scale;
  const S alpha = gu.breakdown ? S(0) : gu.scale;
  const Vector<S> &g = gu.coeffs;
  const Vector<S> Rh = R_.topLeftCorner(nu_, nv_) * gv.coeffs;
  if (options_.mutate_r_update && !gu.breakdown)
  {
    R_.col(nv_).head(nu_) = -Rh / beta + g / alpha;
  }
  else
  {
    R_.col(nv_).head(nu_) = (g - Rh) / beta;
  }
  if (!gu.breakdown)
  {
    R_(nu_, nv_) = alpha / beta;
  }

  append_v(gv.q);
  if (gu.breakdown)
  {
    top_deflated_ = true;
  }
  else
  {
    append_u(gu.q);
  }
  ++iterations_;
  return true;
}

template <typename S>
CompressedBlockMatrix<S> SeparateOrthonormalization<S>::compressed() const
{
  return {UAU_.topLeftCorner(nu_, nu_), UEV_.topLeftCorner(nu_, nv_),
          VAV_.topLeftCorner(nv_, nv_)};
}

template <typename S>
std::pair<Vector<S>, Vector<S>>
SeparateOrthonormalization<S>::approximate(const FunctionSpec &f,
                                           CompressedEvaluation mode) const
{
  Vector<S> vb = Vector<S>::Zero(nv_);
  vb[0] = S(beta0_);
  return evaluate_compressed<S>(compressed(), U_.leftCols(nu_), V_.leftCols(nv_), vb, f, mode);
}

template <typename S>
StructuredKrylovBasis<S> SeparateOrthonormalization<S>::basis() const
{
  StructuredKrylovBasis<S> out;
  out.U = U_.leftCols(nu_);
  out.V = V_.leftCols(nv_);
  out.R = R_.topLeftCorner(nu_, nv_);
  out.AU = AU_.leftCols(nu_);
  out.EV = EV_.leftCols(nv_);
  out.VAV = VAV_.topLeftCorner(nv_, nv_);
  out.beta0 = beta0_;
  out.iterations = iterations_;
  out.bottom_breakdown = bottom_breakdown_;
  out.top_deflated = top_deflated_;
  out.exhausted = exhausted_;
  return out;
}

template <typename S>
StructuredKrylovBasis<S> separate_orthonormalization(const LinearOperator<S> &A,
                                                     const LinearOperator<S> &E,
                                                     const Vector<S> &b, Index k,
                                                     SeparateOrthOptions options)
{
  if (k < 1)
  {
    throw ArgumentError("separate_orthonormalization: k must be at least 1");
  }
  SeparateOrthonormalization<S> process(A, E, b, k, options);
  while (process.step())
  {
  }
  return process.basis();
}

template <typename S>
CompressedBlockMatrix<S> assemble_compressed(const StructuredKrylovBasis<S> &basis)
{
  return {basis.U.adjoint() * basis.AU, basis.U.adjoint() * basis.EV, basis.VAV};
}

template <typename S>
std::pair<Vector<S>, Vector<S>> evaluate_compressed(const CompressedBlockMatrix<S> &H,
                                                    const Eigen::Ref<const DenseMatrix<S>> &U,
                                                    const Eigen::Ref<const DenseMatrix<S>> &V,
                                                    const Vector<S> &vb, const FunctionSpec &f,
                                                    CompressedEvaluation mode)
{
  const Index nu = H.Huu.rows(), nv = H.Hvv.rows();
  if (U.cols() != nu || V.cols() != nv || vb.size() != nv || H.Huv.rows() != nu ||
      H.Huv.cols() != nv)
  {
    throw DimensionError("evaluate_compressed: inconsistent block sizes");
  }
  if (mode == CompressedEvaluation::HermitianSpectral)
  {
    return evaluate_spectral<S>(H, U, V, vb, f);
  }
  const DenseMatrix<S> F = matfunc::matfun<S>(H.assemble(), f);
  Vector<S> v1 = Vector<S>::Zero(U.rows());
  if (nu > 0)
  {
    v1 = U * (F.topRightCorner(nu, nv) * vb);
  }
  Vector<S> v2 = V * (F.bottomRightCorner(nv, nv) * vb);
  return {std::move(v1), std::move(v2)};
}

template <typename S>
std::pair<Vector<S>, Vector<S>> project_and_evaluate(const LinearOperator<S> &A,
                                                     const LinearOperator<S> &E,
                                                     const Vector<S> &b, const FunctionSpec &f,
                                                     const DenseMatrix<S> &U,
                                                     const DenseMatrix<S> &V)
{
  require_pair(A, E, b, "project_and_evaluate");
  if (U.rows() != A.rows() || V.rows() != A.rows())
  {
    throw DimensionError("project_and_evaluate: basis row count differs from n");
  }
  CompressedBlockMatrix<S> H{U.adjoint() * apply_columns(A, U), U.adjoint() * apply_columns(E, V),
                             V.adjoint() * apply_columns(A, V)};
  const Vector<S> vb = V.adjoint() * b;
  return evaluate_compressed<S>(H, U, V, vb, f);
}

#define LFAB_INSTANTIATE(S)                                                                     \
  template struct CompressedBlockMatrix<S>;                                                     \
  template class SeparateOrthonormalization<S>;                                                 \
  template StructuredKrylovBasis<S> separate_orthonormalization<S>(                             \
    const LinearOperator<S> &, const LinearOperator<S> &, const Vector<S> &, Index,              \
    SeparateOrthOptions);                                                                       \
  template CompressedBlockMatrix<S> assemble_compressed<S>(const StructuredKrylovBasis<S> &);   \
  template std::pair<Vector<S>, Vector<S>> evaluate_compressed<S>(                              \
    const CompressedBlockMatrix<S> &, const Eigen::Ref<const DenseMatrix<S>> &,                 \
    const Eigen::Ref<const DenseMatrix<S>> &, const Vector<S> &, const FunctionSpec &,          \
    CompressedEvaluation);                                                                      \
  template std::pair<Vector<S>, Vector<S>> project_and_evaluate<S>(                             \
    const LinearOperator<S> &, const LinearOperator<S> &, const Vector<S> &, const FunctionSpec &, \
    const DenseMatrix<S> &, const DenseMatrix<S> &);

LFAB_INSTANTIATE(Real)
LFAB_INSTANTIATE(Complex)

#undef LFAB_INSTANTIATE

}  // namespace lfab::krylov
