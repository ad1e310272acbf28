// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "helpers.hpp"
#include "lfab/matfunc/dense.hpp"

namespace lfab
{
namespace
{

using matfunc::divided_difference;
using M = DenseMatrix<Real>;

TEST(FunctionSpec, ParseAndErrors)
{
  EXPECT_EQ(FunctionSpec::parse("sqrt").kind(), FunctionSpec::Kind::Sqrt);
  EXPECT_EQ(FunctionSpec::parse("exp").time_scale(), 1.0);
  EXPECT_EQ(FunctionSpec::parse("exp:2.5").time_scale(), 2.5);
  const auto p = FunctionSpec::parse("poly:1,0,3,0");
  EXPECT_EQ(p.coefficients().size(), 4u);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_THROW(FunctionSpec::parse("cosh"), ArgumentError);
  EXPECT_THROW(FunctionSpec::parse("poly:"), ArgumentError);
  EXPECT_THROW(FunctionSpec::parse("poly:1,x"), ArgumentError);
}

TEST(Expm, Examples)
{
  EXPECT_EQ(matfunc::expm<Real>(M::Zero(3, 3)), M::Identity(3, 3));
  const M N = (M(2, 2) << 0, 1, 0, 0).finished();
  EXPECT_LT((matfunc::expm<Real>(N) - (M(2, 2) << 1, 1, 0, 1).finished()).norm(), 1e-15);
  const M D = matfunc::expm<Real>((M(2, 2) << 1, 0, 0, 2).finished());
  EXPECT_NEAR(D(0, 0), std::exp(1.0), 1e-14 * std::exp(1.0));
  EXPECT_NEAR(D(1, 1), std::exp(2.0), 1e-14 * std::exp(2.0));
}

TEST(Expm, LargeNormUsesScaling)
{
  Rng rng(4);
  const M A = linalg::randn_dense<Real>(6, 6, rng);
  const M S = 0.5 * (A + A.transpose()) * 10.0;
  Eigen::SelfAdjointEigenSolver<M> es(S);
  const M ref = es.eigenvectors() * es.eigenvalues().array().exp().matrix().asDiagonal() *
                es.eigenvectors().transpose();
  EXPECT_LT(test::rel_err(matfunc::expm<Real>(S), ref), 1e-12);
}

TEST(Sqrtm, Examples)
{
  EXPECT_LT((matfunc::sqrtm<Real>(M::Identity(3, 3)) - M::Identity(3, 3)).norm(), 1e-15);
  const M D = matfunc::sqrtm<Real>(Vector<Real>((Vector<Real>(3) << 1, 4, 9).finished()).asDiagonal());
  EXPECT_LT((D.diagonal() - (Vector<Real>(3) << 1, 2, 3).finished()).norm(), 1e-14);
  const M J = (M(2, 2) << 4, 1, 0, 4).finished();
  const M X = matfunc::sqrtm<Real>(J);
  EXPECT_LT((X - (M(2, 2) << 2, 0.25, 0, 2).finished()).norm(), 1e-14);
  EXPECT_LT((X * X - J).norm(), 1e-14);
}

TEST(Sqrtm, RejectsNegativeSpectrum)
{
  const M A = (M(2, 2) << -1, 0, 0, 1).finished();
  EXPECT_THROW(matfunc::sqrtm<Real>(A), Error);
}

TEST(Sqrtm, ComplexNonNormal)
{
  Rng rng(9);
  DenseMatrix<Complex> A = linalg::randn_dense<Complex>(5, 5, rng) * 0.2;
  A += DenseMatrix<Complex>::Identity(5, 5) * 3.0;
  const auto X = matfunc::sqrtm<Complex>(A);
  EXPECT_LT((X * X - A).norm() / A.norm(), 1e-13);
}

TEST(Polym, Examples)
{
  Rng rng(1);
  const M H = linalg::randn_dense<Real>(4, 4, rng);
  EXPECT_EQ(matfunc::polym<Real>(H, {1.0}), M::Identity(4, 4));
  const M P = (M(2, 2) << 0, 1, 1, 0).finished();
  EXPECT_EQ(matfunc::polym<Real>(P, {0, 0, 1}), M::Identity(2, 2));
  const M D = (M(2, 2) << 1, 0, 0, 2).finished();
  EXPECT_EQ(matfunc::polym<Real>(D, {0, 1, 1}), (M(2, 2) << 2, 0, 0, 6).finished());
}

TEST(Matfun, Examples)
{
  EXPECT_NEAR(matfunc::matfun<Real>(M::Constant(1, 1, 1.0), FunctionSpec::exp(2.0))(0, 0),
              std::exp(2.0), 1e-14);
  EXPECT_NEAR(matfunc::matfun<Real>(M::Constant(1, 1, 9.0), FunctionSpec::sqrt())(0, 0), 3.0,
              1e-15);
  Rng rng(6);
  const M H = linalg::randn_dense<Real>(5, 5, rng);
  EXPECT_LT((matfunc::matfun<Real>(H, FunctionSpec::polynomial({0, 1})) - H).norm(), 1e-15);
}

TEST(DividedDifference, Examples)
{
  EXPECT_NEAR(divided_difference<Real>(FunctionSpec::sqrt(), 1.0, 4.0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(divided_difference<Real>(FunctionSpec::sqrt(), 4.0, 4.0), 0.25, 1e-15);
  EXPECT_NEAR(divided_difference<Real>(FunctionSpec::exp(1.0), 0.0, 0.0), 1.0, 1e-15);
}

TEST(DividedDifference, NearlyConfluentIsAccurateAndSymmetric)
{
  const auto f = FunctionSpec::exp(1.0);
  const double x = 3.0, y = 3.0 + 1e-9;
  const double ref = std::exp(x) * std::expm1(y - x) / (y - x);
  EXPECT_NEAR(divided_difference<Real>(f, x, y), ref, 1e-14 * ref);
  EXPECT_EQ(divided_difference<Real>(f, x, y), divided_difference<Real>(f, y, x));
  const auto s = FunctionSpec::sqrt();
  EXPECT_NEAR(divided_difference<Real>(s, 4.0, 4.0 + 1e-10), 0.25, 1e-10);
  const auto p = FunctionSpec::polynomial({0, 0, 0, 1});
  EXPECT_NEAR(divided_difference<Real>(p, 2.0, 2.0 + 1e-12), 12.0, 1e-9);
}

TEST(Chebyshev, Examples)
{
  const SpectralInterval I(-1.0, 1.0);
  EXPECT_NEAR(matfunc::chebyshev_uniform_error([](double) { return 1.0; }, I, 0).error, 0.0,
              1e-15);
  EXPECT_NEAR(matfunc::chebyshev_uniform_error([](double z) { return z; }, I, 0).error, 1.0,
              1e-6);
  const SpectralInterval J(1.0, 500.0);
  auto g = [](double z) { return 0.5 / std::sqrt(z); };
  const double e10 = matfunc::chebyshev_uniform_error(g, J, 10).error;
  const double e20 = matfunc::chebyshev_uniform_error(g, J, 20).error;
  const double e40 = matfunc::chebyshev_uniform_error(g, J, 40).error;
  EXPECT_GT(e10, e20);
  EXPECT_GT(e20, e40);
  EXPECT_THROW(SpectralInterval(2.0, 1.0), ArgumentError);
}

}  // namespace
}  // namespace lfab
