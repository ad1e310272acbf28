// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/frechet/oracles.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "lfab/matfunc/dense.hpp"

namespace lfab::frechet
{

namespace
{

template <typename S>
void require_dense_pair(const DenseMatrix<S> &A, const DenseMatrix<S> &E, const char *who)
{
  if (A.rows() != A.cols() || E.rows() != A.rows() || E.cols() != A.cols())
  {
    throw DimensionError(std::string(who) + ": A and E must be square of equal size");
  }
}

template <typename S>
bool is_diagonal(const DenseMatrix<S> &A)
{
  for (Index j = 0; j < A.cols(); ++j)
  {
    for (Index i = 0; i < A.rows(); ++i)
    {
      if (i != j && A(i, j) != S(0))
      {
        return false;
      }
    }
  }
  return true;
}

template <typename S>
bool is_hermitian(const DenseMatrix<S> &A)
{
  return A == A.adjoint();
}

/// D o M with D[i, j] = f[lambda_i, lambda_j].
template <typename T>
DenseMatrix<T> divided_difference_hadamard(const Vector<T> &lambda, const DenseMatrix<T> &M,
                                           const FunctionSpec &f)
{
  const Index n = lambda.size();
  DenseMatrix<T> out(n, n);
  for (Index j = 0; j < n; ++j)
  {
    for (Index i = 0; i < n; ++i)
    {
      out(i, j) = matfunc::divided_difference<T>(f, lambda[i], lambda[j]) * M(i, j);
    }
  }
  return out;
}

template <typename T>
Vector<T> apply_f(const Vector<T> &lambda, const FunctionSpec &f)
{
  Vector<T> out(lambda.size());
  for (Index i = 0; i < lambda.size(); ++i)
  {
    out[i] = f.value(lambda[i]);
  }
  return out;
}

template <typename S>
Vector<S> to_scalar(const Vector<Complex> &z)
{
  if constexpr (is_complex_v<S>)
  {
    return z;
  }
  else
  {
    return z.real();
  }
}

}  // namespace

std::string to_string(OracleMethod method)
{
  return method == OracleMethod::DenseEmbedding ? "dense-embedding" : "daleckii-krein";
}

template <typename S>
DenseMatrix<S> frechet_dense(const DenseMatrix<S> &A, const DenseMatrix<S> &E,
                             const FunctionSpec &f)
{
  require_dense_pair(A, E, "frechet_dense");
  const Index n = A.rows();
  if (n > kDenseOracleMaxN)
  {
    throw SizeGuardError("frechet_dense: n = " + std::to_string(n) + " exceeds the dense limit " +
                         std::to_string(kDenseOracleMaxN));
  }
  DenseMatrix<S> M = DenseMatrix<S>::Zero(2 * n, 2 * n);
  M.topLeftCorner(n, n) = A;
  M.topRightCorner(n, n) = E;
  M.bottomRightCorner(n, n) = A;
  return matfunc::matfun<S>(M, f).topRightCorner(n, n);
}

template <typename S>
OracleResult<S> oracle_dense_embedding(const FrechetProblem<S> &problem)
{
  problem.validate();
  const Index n = problem.size();
  if (n > kDenseOracleMaxN)
  {
    throw SizeGuardError("oracle_dense_embedding: n = " + std::to_string(n) +
                         " exceeds the dense limit " + std::to_string(kDenseOracleMaxN));
  }
  DenseMatrix<S> M = DenseMatrix<S>::Zero(2 * n, 2 * n);
  M.topLeftCorner(n, n) = problem.A.to_dense();
  M.topRightCorner(n, n) = problem.E.to_dense();
  M.bottomRightCorner(n, n) = M.topLeftCorner(n, n);
  const DenseMatrix<S> F = matfunc::matfun<S>(M, problem.f);
  OracleResult<S> out;
  out.Lb = F.topRightCorner(n, n) * problem.b;
  out.fAb = F.bottomRightCorner(n, n) * problem.b;
  out.method = OracleMethod::DenseEmbedding;
  return out;
}

template <typename S>
OracleResult<S> oracle_daleckii_krein_diagonal(const Vector<S> &lambda, const DenseMatrix<S> &E,
                                               const Vector<S> &b, const FunctionSpec &f)
{
  const Index n = lambda.size();
  if (E.rows() != n || E.cols() != n || b.size() != n)
  {
    throw DimensionError("oracle_daleckii_krein: inconsistent sizes");
  }
  OracleResult<S> out;
  out.method = OracleMethod::DaleckiiKrein;
  // Real eigenvalues of sqrt may be negative: evaluate in complex arithmetic.
  const Vector<Complex> lam = lambda.template cast<Complex>();
  const Vector<Complex> bc = b.template cast<Complex>();
  const DenseMatrix<Complex> Ec = E.template cast<Complex>();
  const Vector<Complex> Lb = divided_difference_hadamard<Complex>(lam, Ec, f) * bc;
  out.Lb = to_scalar<S>(Lb);
  out.fAb = to_scalar<S>(apply_f<Complex>(lam, f).cwiseProduct(bc));
  return out;
}

template <typename S>
OracleResult<S> oracle_daleckii_krein(const DenseMatrix<S> &A, const DenseMatrix<S> &E,
                                      const Vector<S> &b, const FunctionSpec &f)
{
  require_dense_pair(A, E, "oracle_daleckii_krein");
  if (b.size() != A.rows())
  {
    throw DimensionError("oracle_daleckii_krein: b has the wrong length");
  }
  if (is_diagonal(A))
  {
    return oracle_daleckii_krein_diagonal<S>(A.diagonal(), E, b, f);
  }

  OracleResult<S> out;
  out.method = OracleMethod::DaleckiiKrein;
  if (is_hermitian(A))
  {
    Eigen::SelfAdjointEigenSolver<DenseMatrix<S>> eig(A);
    if (eig.info() != Eigen::Success)
    {
      throw ConvergenceError("oracle_daleckii_krein: symmetric eigensolver failed");
    }
    const DenseMatrix<Complex> X = eig.eigenvectors().template cast<Complex>();
    const Vector<Complex> lam = eig.eigenvalues().template cast<Complex>();
    const DenseMatrix<Complex> M = X.adjoint() * E.template cast<Complex>() * X;
    const Vector<Complex> xb = X.adjoint() * b.template cast<Complex>();
    out.Lb = to_scalar<S>(X * (divided_difference_hadamard<Complex>(lam, M, f) * xb));
    out.fAb = to_scalar<S>(X * apply_f<Complex>(lam, f).cwiseProduct(xb));
    return out;
  }

  Eigen::ComplexEigenSolver<DenseMatrix<Complex>> eig(A.template cast<Complex>());
  if (eig.info() != Eigen::Success)
  {
    throw ConvergenceError("oracle_daleckii_krein: eigensolver failed");
  }
  const DenseMatrix<Complex> &X = eig.eigenvectors();
  const Vector<Complex> &lam = eig.eigenvalues();
  const Eigen::JacobiSVD<DenseMatrix<Complex>> svd(X);
  const auto &sv = svd.singularValues();
  out.eigenvector_cond = sv[sv.size() - 1] > 0.0 ? sv[0] / sv[sv.size() - 1]
                                                 : std::numeric_limits<double>::infinity();
  out.ill_conditioned = out.eigenvector_cond > kEigenvectorCondWarn;
  const Eigen::PartialPivLU<DenseMatrix<Complex>> lu(X);
  const DenseMatrix<Complex> M = lu.solve(E.template cast<Complex>() * X);
  const Vector<Complex> xb = lu.solve(b.template cast<Complex>());
  out.Lb = to_scalar<S>(X * (divided_difference_hadamard<Complex>(lam, M, f) * xb));
  out.fAb = to_scalar<S>(X * apply_f<Complex>(lam, f).cwiseProduct(xb));
  return out;
}

template <typename S>
Vector<S> oracle_monomial_sum(const LinearOperator<S> &A, const LinearOperator<S> &E,
                              const Vector<S> &b, const std::vector<double> &coefficients)
{
  if (coefficients.empty())
  {
    throw ArgumentError("oracle_monomial_sum: coefficient list is empty");
  }
  const Index d = static_cast<Index>(coefficients.size()) - 1;
  // powers[m] = A^m b
  std::vector<Vector<S>> powers{b};
  for (Index m = 1; m < d; ++m)
  {
    powers.push_back(A * powers.back());
  }
  Vector<S> out = Vector<S>::Zero(b.size());
  for (Index j = 1; j <= d; ++j)
  {
    if (coefficients[j] == 0.0)
    {
      continue;
    }
    // sum_l A^l E A^(j-1-l) b, accumulated Horner-style in l.
    Vector<S> acc = E * powers[0];
    for (Index m = 1; m < j; ++m)
    {
      acc = A * acc + E * powers[m];
    }
    out += S(coefficients[j]) * acc;
  }
  return out;
}

#define LFAB_INSTANTIATE(S)                                                                       \
  template DenseMatrix<S> frechet_dense<S>(const DenseMatrix<S> &, const DenseMatrix<S> &,        \
                                           const FunctionSpec &);                                 \
  template OracleResult<S> oracle_dense_embedding<S>(const FrechetProblem<S> &);                  \
  template OracleResult<S> oracle_daleckii_krein<S>(const DenseMatrix<S> &, const DenseMatrix<S> &, \
                                                    const Vector<S> &, const FunctionSpec &);     \
  template OracleResult<S> oracle_daleckii_krein_diagonal<S>(                                     \
    const Vector<S> &, const DenseMatrix<S> &, const Vector<S> &, const FunctionSpec &);          \
  template Vector<S> oracle_monomial_sum<S>(const LinearOperator<S> &, const LinearOperator<S> &, \
                                            const Vector<S> &, const std::vector<double> &);

LFAB_INSTANTIATE(Real)
LFAB_INSTANTIATE(Complex)

#undef LFAB_INSTANTIATE

}  // namespace lfab::frechet
