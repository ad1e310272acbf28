// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "lfab/apps/centrality.hpp"
#include "lfab/apps/heat.hpp"

namespace lfab
{
namespace
{

using apps::Measure;
using apps::SensitivityQuery;
using V = Vector<Real>;

SparseMatrix<Real> path_graph(Index n)
{
  SparseBuilder<Real> b(n, n);
  for (Index i = 0; i + 1 < n; ++i)
  {
    b.add(i, i + 1, 1.0);
    b.add(i + 1, i, 1.0);
  }
  return std::move(b).build();
}

SparseMatrix<Real> cycle_graph(Index n)
{
  SparseBuilder<Real> b(n, n);
  for (Index i = 0; i < n; ++i)
  {
    b.add(i, (i + 1) % n, 1.0);
    b.add((i + 1) % n, i, 1.0);
  }
  return std::move(b).build();
}

double rel(double x, double ref)
{
  return std::abs(x - ref) / std::max(std::abs(ref), 1e-300);
}

// ---------------------------------------------------------------------------------------------
// Sensitivity

TEST(Sensitivity, EmptyGraphTotalCommunicability)
{
  const auto A = SparseMatrix<Real>::zero(5, 5);
  for (Index i : {0, 3})
  {
    const auto r = apps::sensitivity_entry(A, {Measure::TotalCommunicability, i, 4, 0, false}, 10);
    EXPECT_NEAR(r.estimate, 1.0, 1e-14);
  }
}

TEST(Sensitivity, PathGraphMatchesDense)
{
  const auto A2 = path_graph(2);
  const SensitivityQuery sc{Measure::SubgraphCentrality, 0, 1, 0, false};
  EXPECT_LE(rel(apps::sensitivity_entry(A2, sc, 10).estimate,
                apps::sensitivity_dense_reference(A2, sc)),
            1e-10);
  const auto A5 = path_graph(5);
  const SensitivityQuery tn{Measure::TotalCommunicability, 0, 4, 0, false};
  EXPECT_LE(rel(apps::sensitivity_entry(A5, tn, 20).estimate,
                apps::sensitivity_dense_reference(A5, tn)),
            1e-9);
}

TEST(Sensitivity, EstradaOnDiagonal)
{
  const V lambda = (V(4) << 0.5, -1.0, 2.0, 0.0).finished();
  const auto A = SparseMatrix<Real>::diagonal(lambda);
  for (Index i = 0; i < 4; ++i)
  {
    for (Index j = 0; j < 4; ++j)
    {
      const auto r = apps::sensitivity_entry(A, {Measure::EstradaIndex, i, j, 0, false}, 6);
      EXPECT_NEAR(r.estimate, i == j ? std::exp(lambda[i]) : 0.0, 1e-13);
    }
  }
}

TEST(Sensitivity, ReducedFormsMatchUnreducedDefinitions)
{
  for (std::uint64_t seed = 0; seed < 4; ++seed)
  {
    Rng rng(seed);
    const Index n = 8 + rng.index(13);
    const auto A = linalg::random_graph(n, 0.3, rng, seed % 2 == 0);
    for (Measure m : {Measure::TotalCommunicability, Measure::SubgraphCentrality,
                      Measure::EstradaIndex})
    {
      const SensitivityQuery q{m, rng.index(n), rng.index(n), rng.index(n), false};
      const auto r = apps::sensitivity_entry(A, q, 60, 1e-14);
      EXPECT_LE(rel(r.estimate, apps::sensitivity_dense_reference(A, q)), 1e-9)
        << "seed " << seed << " measure " << apps::to_string(m);
    }
  }
}

TEST(Sensitivity, QueryValidation)
{
  const auto A = path_graph(5);
  EXPECT_THROW(apps::sensitivity_entry(A, {Measure::TotalCommunicability, 5, 0, 0, false}, 5),
               ArgumentError);
  EXPECT_THROW(apps::sensitivity_entry(A, {Measure::SubgraphCentrality, 0, 0, -1, false}, 5),
               ArgumentError);
  EXPECT_THROW(apps::parse_measure("xx"), ArgumentError);
  EXPECT_EQ(apps::parse_measure("ei"), Measure::EstradaIndex);
}

TEST(FullRank, DirectionPattern)
{
  SparseBuilder<Real> b(2, 2);
  b.add(0, 1, 2.5);
  b.add(1, 0, -1.0);
  const auto E = apps::full_rank_direction(std::move(b).build());
  EXPECT_EQ(E.coeff(0, 1), 1.0);
  EXPECT_EQ(E.coeff(1, 0), 1.0);
  EXPECT_EQ(apps::full_rank_direction(SparseMatrix<Real>::zero(3, 3)).nnz(), 0);
  const auto C = cycle_graph(5);
  EXPECT_EQ(apps::full_rank_direction(C).to_dense(), C.to_dense());
}

TEST(FullRank, CycleMatchesDenseAndIsStable)
{
  const auto A = cycle_graph(6);
  const SensitivityQuery q{Measure::TotalCommunicability, 0, 0, 0, true};
  const double ref = apps::sensitivity_dense_reference(A, q);
  const auto r = apps::sensitivity_full_rank(A, 30, 1e-10);
  EXPECT_LE(rel(r.estimate, ref), 1e-9);
  EXPECT_TRUE(r.converged);
  const auto r5 = apps::sensitivity_full_rank(A, r.iterations + 5, 1e-10);
  EXPECT_LE(rel(r5.estimate, r.estimate), 1e-9);
  EXPECT_EQ(apps::sensitivity_full_rank(SparseMatrix<Real>::zero(4, 4), 5).estimate, 0.0);
}

TEST(FullRank, RandomGraphs)
{
  for (std::uint64_t seed = 10; seed < 13; ++seed)
  {
    Rng rng(seed);
    const auto A = linalg::random_graph(15, 0.25, rng, true);
    const SensitivityQuery q{Measure::TotalCommunicability, 0, 0, 0, true};
    EXPECT_LE(rel(apps::sensitivity_full_rank(A, 60, 1e-14).estimate,
                  apps::sensitivity_dense_reference(A, q)),
              1e-9);
  }
}

TEST(Sensitivity, StepsRecordUpdates)
{
  const auto A = cycle_graph(12);
  const auto r = apps::sensitivity_entry(A, {Measure::TotalCommunicability, 0, 6, 0, false}, 30,
                                         1e-12);
  ASSERT_FALSE(r.steps.empty());
  EXPECT_TRUE(std::isinf(r.steps.front().update_norm));
  EXPECT_EQ(r.steps.back().estimate, r.estimate);
  EXPECT_TRUE(r.converged);
}

// ---------------------------------------------------------------------------------------------
// Heat

TEST(Laplacian, StencilAndSymmetry)
{
  const auto L = apps::assemble_laplacian_2d(3);
  const double h = 0.5, s = 1.0 / (h * h);
  EXPECT_EQ(L.rows(), 9);
  EXPECT_EQ(L.coeff(4, 4), -4.0 * s);
  for (Index j : {1, 3, 5, 7})
  {
    EXPECT_EQ(L.coeff(4, j), s);
  }
  EXPECT_EQ(L.to_dense(), L.transpose().to_dense());
  EXPECT_THROW(apps::assemble_laplacian_2d(2), ArgumentError);
}

TEST(Laplacian, ClosedFormEigenvalues)
{
  const Index m = 3;
  const auto L = apps::assemble_laplacian_2d(m).to_dense();
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Real>> es(L);
  std::vector<double> expected;
  const double h = 2.0 / double(m + 1);
  for (Index p = 1; p <= m; ++p)
  {
    for (Index q = 1; q <= m; ++q)
    {
      expected.push_back(2.0 / (h * h) *
                         (std::cos(p * M_PI / (m + 1)) + std::cos(q * M_PI / (m + 1)) - 2.0));
    }
  }
  std::sort(expected.begin(), expected.end());
  for (Index i = 0; i < m * m; ++i)
  {
    EXPECT_NEAR(es.eigenvalues()[i], expected[i], 1e-12 * std::abs(expected[i]));
  }
}

apps::HeatFitConfig small_config()
{
  apps::HeatFitConfig c;
  c.grid_points_per_dim = 20;
  return c;
}

TEST(Heat, MinimumAtReference)
{
  const apps::HeatModel model(small_config());
  const V s_ref = model.solution(0.85);
  const auto e = model.evaluate(0.85, s_ref);
  EXPECT_LE(e.value, 1e-20);
  EXPECT_LE(std::abs(e.gradient), 1e-9);
}

TEST(Heat, GradientMatchesCentralDifferences)
{
  const apps::HeatModel model(small_config());
  const V s_ref = model.solution(0.85);
  const double delta = 1e-6;
  for (double sigma : {0.9, 1.0, 1.1})
  {
    const double g = model.evaluate(sigma, s_ref).gradient;
    const double fd = (model.evaluate(sigma + delta, s_ref).value -
                       model.evaluate(sigma - delta, s_ref).value) /
                      (2.0 * delta);
    EXPECT_LE(rel(g, fd), 1e-5) << "sigma " << sigma;
  }
}

TEST(Heat, SolutionMatchesDenseExponential)
{
  apps::HeatFitConfig c;
  c.grid_points_per_dim = 8;
  const apps::HeatModel model(c);
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Real>> es(model.laplacian().to_dense());
  const V ref = es.eigenvectors() * (0.7 * es.eigenvalues()).array().exp().matrix().asDiagonal() *
                es.eigenvectors().transpose() * model.initial_condition();
  EXPECT_LE(test::rel_err(model.solution(0.7), ref), 1e-10);
}

TEST(Heat, ZeroInitialCondition)
{
  auto c = small_config();
  c.u0 = apps::InitialCondition::Zero;
  const apps::HeatModel model(c);
  Rng rng(1);
  const V s_ref = linalg::randn_vector<Real>(400, rng);
  const auto e = model.evaluate(1.0, s_ref);
  EXPECT_DOUBLE_EQ(e.value, s_ref.squaredNorm());
  EXPECT_EQ(e.gradient, 0.0);
}

TEST(Heat, FitConvergesOnSmallGrid)
{
  const auto r = apps::heat_fit(small_config());
  ASSERT_TRUE(r.converged) << r.message;
  EXPECT_LE(std::abs(r.sigma_trajectory.back() - 0.85), 1e-4);
  EXPECT_LE(r.f_trajectory.back(), 1e-8);
  for (std::size_t i = 1; i < r.f_trajectory.size(); ++i)
  {
    EXPECT_LE(r.f_trajectory[i], r.f_trajectory[i - 1]);
  }
}

TEST(Heat, StartAtReferenceTerminatesImmediately)
{
  auto c = small_config();
  c.sigma0 = c.sigma_ref;
  const auto r = apps::heat_fit(c);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.sigma_trajectory.size(), 1u);
}

TEST(Heat, LineSearchFailureIsReported)
{
  auto c = small_config();
  c.max_backtracks = 1;
  c.step0 = 1e3;  // every first trial overshoots
  const auto r = apps::heat_fit(c);
  EXPECT_TRUE(r.failed);
  EXPECT_FALSE(r.converged);
  EXPECT_FALSE(r.message.empty());
}

TEST(Heat, ConfigValidation)
{
  auto c = small_config();
  c.sigma0 = -1.0;
  EXPECT_THROW(c.validate(), ArgumentError);
  EXPECT_THROW(apps::parse_initial_condition("gauss"), ArgumentError);
  EXPECT_EQ(apps::parse_initial_condition("cosine"), apps::InitialCondition::Cosine);
}

}  // namespace
}  // namespace lfab
