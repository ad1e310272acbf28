// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "lfab/linalg/sparse.hpp"

namespace lfab::apps
{

enum class InitialCondition
{
  Bump,    // (1 - x^2)(1 - y^2) exp(x + y)
  Cosine,  // cos(pi x / 2) cos(pi y / 2)
  Zero
};

InitialCondition parse_initial_condition(const std::string &text);

struct HeatFitConfig
{
  Index grid_points_per_dim = 75;
  double final_time = 1.0;
  double sigma0 = 1.0;
  double sigma_ref = 0.85;
  double step0 = 0.5;
  double abs_tol = 1.0e-8;
  Index max_iters = 500;
  Index krylov_k = 400;          // iteration budget per solve
  double krylov_tol = 1.0e-12;   // update-norm stopping tolerance per solve
  Index max_backtracks = 30;
  InitialCondition u0 = InitialCondition::Bump;

  void validate() const;
};

/// 5-point Laplacian on the m x m interior grid of [-1, 1]^2 with homogeneous Dirichlet
/// boundary, h = 2 / (m + 1). Node (p, q) (x index p, y index q) has index q m + p.
SparseMatrix<Real> assemble_laplacian_2d(Index m);

/// The initial condition sampled at the interior grid nodes.
Vector<Real> sample_initial_condition(Index m, InitialCondition kind);

struct HeatEvaluation
{
  double value = 0.0;     // ||s(sigma) - s_ref||^2
  double gradient = 0.0;  // d/dsigma of value
  Vector<Real> state;     // s(sigma)
  Index krylov_iterations = 0;
};

/// Holds the discretization; evaluations share it.
class HeatModel
{
public:
  explicit HeatModel(HeatFitConfig config);

  const HeatFitConfig &config() const noexcept { return config_; }
  const SparseMatrix<Real> &laplacian() const noexcept { return laplacian_; }
  const Vector<Real> &initial_condition() const noexcept { return u0_; }

  /// s(sigma) = exp(T sigma Lap) u0.
  Vector<Real> solution(double sigma) const;

  /// One modified Arnoldi run on (T sigma Lap, T Lap, u0) gives v2 = s(sigma) and
  /// v1 = ds/dsigma.
  HeatEvaluation evaluate(double sigma, const Vector<Real> &s_ref) const;

private:
  HeatFitConfig config_;
  SparseMatrix<Real> laplacian_;
  Vector<Real> u0_;
};

HeatEvaluation heat_objective_and_gradient(const HeatFitConfig &config, double sigma,
                                           const Vector<Real> &s_ref);

struct HeatFitResult
{
  std::vector<double> sigma_trajectory;  // entry 0 is sigma0
  std::vector<double> f_trajectory;
  bool converged = false;  // f <= abs_tol
  bool failed = false;     // line search gave up
  std::string message;
};

/// Gradient descent with backtracking: each iteration starts at step0 and halves until f
/// decreases (at most max_backtracks times).
HeatFitResult heat_fit(const HeatFitConfig &config);

}  // namespace lfab::apps
