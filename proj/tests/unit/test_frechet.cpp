// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "lfab/frechet/baselines.hpp"
#include "lfab/frechet/identities.hpp"
#include "lfab/frechet/oracles.hpp"
#include "lfab/krylov/modified.hpp"
#include "lfab/matfunc/dense.hpp"

namespace lfab
{
namespace
{

using M = DenseMatrix<Real>;
using V = Vector<Real>;
using frechet::FrechetProblem;

FrechetProblem<Real> random_problem(Index n, std::uint64_t seed, FunctionSpec f)
{
  Rng rng(seed);
  auto A = test::small_random<Real>(n, rng);
  auto E = test::small_random<Real>(n, rng);
  return {std::move(A), std::move(E), linalg::randn_vector<Real>(n, rng), std::move(f)};
}

FrechetProblem<Real> diagonal_problem(Index n, std::uint64_t seed)
{
  Rng rng(seed);
  auto E = SparseMatrix<Real>::from_dense(linalg::randn_dense<Real>(n, n, rng));
  return {test::diag_range(n), std::move(E), linalg::randn_vector<Real>(n, rng),
          FunctionSpec::sqrt()};
}

V diag_oracle(const FrechetProblem<Real> &p)
{
  return frechet::oracle_daleckii_krein_diagonal<Real>(p.A.to_dense().diagonal(), p.E.to_dense(),
                                                       p.b, p.f)
    .Lb;
}

// ---------------------------------------------------------------------------------------------
// Baselines

TEST(FiniteDifference, IdentityFunctionIsExact)
{
  const auto p = random_problem(20, 1, FunctionSpec::polynomial({0, 1}));
  const V Eb = spmv(p.E, p.b);
  for (double eps : {1e-3, 1e-6})
  {
    EXPECT_LE(test::rel_err(frechet::fd_arnoldi<Real>(p, eps, 5), Eb), 1e-8);
  }
}

TEST(FiniteDifference, ZeroDirection)
{
  auto p = random_problem(20, 2, FunctionSpec::exp(1.0));
  p.E = SparseMatrix<Real>::zero(20, 20);
  EXPECT_EQ(frechet::fd_arnoldi<Real>(p, 1e-6, 5).norm(), 0.0);
  EXPECT_EQ(frechet::cs_arnoldi<Real>(p, 1e-20, 5).norm(), 0.0);
}

TEST(FiniteDifference, DefaultStepScalesWithNorms)
{
  auto p = random_problem(20, 3, FunctionSpec::exp(1.0));
  const double eps = frechet::default_fd_eps<Real>(p);
  EXPECT_NEAR(eps, 1e-5 * p.A.frobenius_norm() / p.E.frobenius_norm(), 1e-18);
  p.E = SparseMatrix<Real>::zero(20, 20);
  EXPECT_EQ(frechet::default_fd_eps<Real>(p), 1e-5);
  EXPECT_THROW(frechet::fd_arnoldi<Real>(p, 0.0, 3), ArgumentError);
}

TEST(ComplexStep, IdentityFunctionIsExact)
{
  const auto p = random_problem(20, 4, FunctionSpec::polynomial({0, 1}));
  EXPECT_LE(test::rel_err(frechet::cs_arnoldi<Real>(p, 1e-20, 5), spmv(p.E, p.b)), 1e-12);
}

TEST(ComplexStep, RejectsComplexData)
{
  Rng rng(5);
  FrechetProblem<Complex> p{test::small_random<Complex>(5, rng), test::small_random<Complex>(5, rng),
                            linalg::randn_vector<Complex>(5, rng), FunctionSpec::exp(1.0)};
  EXPECT_THROW(frechet::cs_arnoldi<Complex>(p, 1e-20, 3), ArgumentError);
}

TEST(Baselines, SweepsMatchSingleRuns)
{
  const auto p = diagonal_problem(60, 6);
  const auto fd = frechet::fd_arnoldi_sweep<Real>(p, 1e-6, 12);
  const auto cs = frechet::cs_arnoldi_sweep<Real>(p, 1e-20, 12);
  ASSERT_EQ(fd.size(), 12u);
  EXPECT_LE(test::rel_err(fd[11], frechet::fd_arnoldi<Real>(p, 1e-6, 12)), 1e-12);
  EXPECT_LE(test::rel_err(cs[4], frechet::cs_arnoldi<Real>(p, 1e-20, 5)), 1e-12);
}

TEST(Baselines, ExampleSetupOrdering)
{
  // Example setup with n = 500: block embedding at k = 50 already beats the fd plateau.
  const auto p = diagonal_problem(500, 42);
  const V ref = diag_oracle(p);
  const auto block = krylov::block_embedding_arnoldi<Real>(p.A, p.E, p.b, p.f, 50);
  const auto fd = frechet::fd_arnoldi_sweep<Real>(p, 1e-8, 120);
  const double plateau = test::rel_err(fd.back(), ref);
  EXPECT_GT(plateau, 1e-7);  // cancellation floor, about sqrt(u)
  EXPECT_LT(test::rel_err(block.v1, ref), 1e-2);
  const auto cs = frechet::cs_arnoldi_sweep<Real>(p, 1e-20, 160);
  EXPECT_LT(test::rel_err(cs.back(), ref), 1e-2 * plateau);
}

// ---------------------------------------------------------------------------------------------
// Oracles

TEST(Oracles, SquareHasClosedForm)
{
  const auto p = random_problem(15, 7, FunctionSpec::polynomial({0, 0, 1}));
  const auto r = frechet::oracle_dense_embedding<Real>(p);
  EXPECT_EQ(r.method, frechet::OracleMethod::DenseEmbedding);
  const V ref = spmv(p.A, spmv(p.E, p.b)) + spmv(p.E, spmv(p.A, p.b));
  EXPECT_LE(test::rel_err(r.Lb, ref), 1e-13);
}

TEST(Oracles, ZeroDirection)
{
  auto p = random_problem(15, 8, FunctionSpec::exp(1.0));
  p.E = SparseMatrix<Real>::zero(15, 15);
  const auto r = frechet::oracle_dense_embedding<Real>(p);
  EXPECT_EQ(r.Lb.norm(), 0.0);
  EXPECT_LE(test::rel_err(r.fAb, V(matfunc::expm<Real>(p.A.to_dense()) * p.b)), 1e-13);
}

TEST(Oracles, DaleckiiKreinHandExample)
{
  const M A = (M(2, 2) << 1, 0, 0, 4).finished();
  const M E = (M(2, 2) << 0, 1, 1, 0).finished();
  const V b = V::Ones(2);
  const auto r = frechet::oracle_daleckii_krein<Real>(A, E, b, FunctionSpec::sqrt());
  EXPECT_LE((r.Lb - V::Constant(2, 1.0 / 3.0)).norm(), 1e-15);
  FrechetProblem<Real> p{SparseMatrix<Real>::from_dense(A), SparseMatrix<Real>::from_dense(E), b,
                         FunctionSpec::sqrt()};
  EXPECT_LE(test::rel_err(frechet::fd_arnoldi<Real>(p, 1e-6, 2), r.Lb), 1e-5);
}

TEST(Oracles, IdentityDirectionGivesDerivative)
{
  const V lambda = (V(3) << 1, 2, 5).finished();
  const V b = (V(3) << 1, -2, 3).finished();
  const auto r = frechet::oracle_daleckii_krein_diagonal<Real>(lambda, M::Identity(3, 3), b,
                                                               FunctionSpec::sqrt());
  const V ref = (0.5 / lambda.array().sqrt()).matrix().cwiseProduct(b);
  EXPECT_LE(test::rel_err(r.Lb, ref), 1e-15);
}

TEST(Oracles, CrossConsistency)
{
  Rng rng(9);
  // Hermitian 10 x 10.
  const M G = linalg::randn_dense<Real>(10, 10, rng);
  const M S = (G + G.transpose()) / 4.0;
  const M E = linalg::randn_dense<Real>(10, 10, rng);
  const V b = linalg::randn_vector<Real>(10, rng);
  const auto f = FunctionSpec::exp(1.0);
  FrechetProblem<Real> p{SparseMatrix<Real>::from_dense(S), SparseMatrix<Real>::from_dense(E), b, f};
  EXPECT_LE(test::rel_err(frechet::oracle_daleckii_krein<Real>(S, E, b, f).Lb,
                          frechet::oracle_dense_embedding<Real>(p).Lb),
            1e-9);
  // General diagonalizable 20 x 20.
  const M A = linalg::randn_dense<Real>(20, 20, rng) / std::sqrt(20.0);
  const M E2 = linalg::randn_dense<Real>(20, 20, rng);
  const V b2 = linalg::randn_vector<Real>(20, rng);
  FrechetProblem<Real> q{SparseMatrix<Real>::from_dense(A), SparseMatrix<Real>::from_dense(E2), b2,
                         f};
  const auto dk = frechet::oracle_daleckii_krein<Real>(A, E2, b2, f);
  EXPECT_FALSE(dk.ill_conditioned);
  EXPECT_LE(test::rel_err(dk.Lb, frechet::oracle_dense_embedding<Real>(q).Lb), 1e-9);
}

TEST(Oracles, MonomialSumMatchesDense)
{
  const auto p = random_problem(12, 10, FunctionSpec::polynomial({1, -1, 2, 0.5}));
  const V sum = frechet::oracle_monomial_sum<Real>(p.A, p.E, p.b, p.f.coefficients());
  EXPECT_LE(test::rel_err(sum, frechet::oracle_dense_embedding<Real>(p).Lb), 1e-12);
}

TEST(Oracles, SizeGuard)
{
  const Index n = frechet::kDenseOracleMaxN + 1;
  FrechetProblem<Real> p{SparseMatrix<Real>::identity(n), SparseMatrix<Real>::identity(n),
                         V::Ones(n), FunctionSpec::exp(1.0)};
  EXPECT_THROW(frechet::oracle_dense_embedding<Real>(p), SizeGuardError);
}

// ---------------------------------------------------------------------------------------------
// Identities

TEST(Identities, AdjointSymmetricExp)
{
  Rng rng(11);
  const M G = linalg::randn_dense<Real>(10, 10, rng);
  const M A = (G + G.transpose()) / 4.0;
  const M E = linalg::randn_dense<Real>(10, 10, rng);
  const V b = linalg::randn_vector<Real>(10, rng), c = linalg::randn_vector<Real>(10, rng);
  EXPECT_LE(frechet::adjoint_identity_residual<Real>(A, E, b, c, FunctionSpec::exp(1.0)), 1e-10);
  EXPECT_EQ(frechet::adjoint_identity_residual<Real>(A, M::Zero(10, 10), b, c,
                                                     FunctionSpec::exp(1.0)),
            0.0);
}

TEST(Identities, AdjointComplexNonNormal)
{
  Rng rng(12);
  for (int t = 0; t < 5; ++t)
  {
    const DenseMatrix<Complex> A = linalg::randn_dense<Complex>(10, 10, rng) / 4.0;
    const DenseMatrix<Complex> E = linalg::randn_dense<Complex>(10, 10, rng);
    const Vector<Complex> b = linalg::randn_vector<Complex>(10, rng);
    const Vector<Complex> c = linalg::randn_vector<Complex>(10, rng);
    EXPECT_LE(frechet::adjoint_identity_residual<Complex>(A, E, b, c, FunctionSpec::exp(1.0)),
              1e-10);
    // Without the adjoint on A the identity fails for non-normal complex A.
    EXPECT_GT(frechet::adjoint_identity_residual_unstarred<Complex>(A, E, b, c,
                                                                    FunctionSpec::exp(1.0)),
              1e-6);
  }
}

TEST(Identities, RankOneReduction)
{
  const V lambda = (V(3) << 4, 2, 9).finished();
  const M A = lambda.asDiagonal();
  const V e1 = V::Unit(3, 0);
  const auto [l, r] = frechet::rank_one_reduction<Real>(A, e1, e1, e1, e1, FunctionSpec::sqrt());
  EXPECT_NEAR(l, 0.25, 1e-15);
  EXPECT_NEAR(r, 0.25, 1e-15);

  Rng rng(13);
  const DenseMatrix<Complex> C = linalg::randn_dense<Complex>(8, 8, rng) / 3.0;
  Vector<Complex> v[4];
  for (auto &x : v)
  {
    x = linalg::randn_vector<Complex>(8, rng);
  }
  const auto [lc, rc] = frechet::rank_one_reduction<Complex>(C, v[0], v[1], v[2], v[3],
                                                             FunctionSpec::exp(1.0));
  EXPECT_LE(std::abs(lc - rc), 1e-10 * std::abs(lc));
  const auto [lp, rp] = frechet::rank_one_reduction<Complex>(C, v[0], v[1], v[2], v[3],
                                                             FunctionSpec::polynomial({0, 1}));
  const Complex expect = v[3].dot(v[0]) * v[1].dot(v[2]);
  EXPECT_LE(std::abs(lp - expect), 1e-12 * std::abs(expect));
  EXPECT_LE(std::abs(rp - expect), 1e-12 * std::abs(expect));
}

}  // namespace
}  // namespace lfab
