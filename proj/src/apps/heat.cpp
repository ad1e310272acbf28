// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/apps/heat.hpp"

#include <cmath>

#include "lfab/krylov/modified.hpp"

namespace lfab::apps
{

namespace
{

double node_coordinate(Index p, Index m)
{
  const double h = 2.0 / static_cast<double>(m + 1);
  return -1.0 + h * static_cast<double>(p + 1);
}

}  // namespace

InitialCondition parse_initial_condition(const std::string &text)
{
  if (text == "bump")
  {
    return InitialCondition::Bump;
  }
  if (text == "cosine")
  {
    return InitialCondition::Cosine;
  }
  if (text == "zero")
  {
    return InitialCondition::Zero;
  }
  throw ArgumentError("unknown initial condition '" + text + "' (expected bump, cosine or zero)");
}

void HeatFitConfig::validate() const
{
  if (grid_points_per_dim < 3)
  {
    throw ArgumentError("heat: grid must have at least 3 points per dimension");
  }
  if (!(sigma0 > 0.0) || !(sigma_ref > 0.0))
  {
    throw ArgumentError("heat: sigma values must be positive");
  }
  if (!(final_time > 0.0) || !(step0 > 0.0) || !(abs_tol >= 0.0))
  {
    throw ArgumentError("heat: final time and initial step must be positive, tolerance >= 0");
  }
  if (max_iters < 0 || krylov_k < 1 || max_backtracks < 1)
  {
    throw ArgumentError("heat: invalid iteration limits");
  }
}

SparseMatrix<Real> assemble_laplacian_2d(Index m)
{
  if (m < 3)
  {
    throw ArgumentError("assemble_laplacian_2d: m must be at least 3");
  }
  const double h = 2.0 / static_cast<double>(m + 1);
  const double off = 1.0 / (h * h);
  SparseBuilder<Real> builder(m * m, m * m);
  builder.reserve(static_cast<std::size_t>(5 * m * m));
  for (Index q = 0; q < m; ++q)
  {
    for (Index p = 0; p < m; ++p)
    {
      const Index r = q * m + p;
      builder.add(r, r, -4.0 * off);
      if (p > 0)
      {
        builder.add(r, r - 1, off);
      }
      if (p + 1 < m)
      {
        builder.add(r, r + 1, off);
      }
      if (q > 0)
      {
        builder.add(r, r - m, off);
      }
      if (q + 1 < m)
      {
        builder.add(r, r + m, off);
      }
    }
  }
  return std::move(builder).build();
}

Vector<Real> sample_initial_condition(Index m, InitialCondition kind)
{
  Vector<Real> u(m * m);
  for (Index q = 0; q < m; ++q)
  {
    const double y = node_coordinate(q, m);
    for (Index p = 0; p < m; ++p)
    {
      const double x = node_coordinate(p, m);
      double v = 0.0;
      switch (kind)
      {
        case InitialCondition::Bump:
          v = (1.0 - x * x) * (1.0 - y * y) * std::exp(x + y);
          break;
        case InitialCondition::Cosine:
          v = std::cos(M_PI * x / 2.0) * std::cos(M_PI * y / 2.0);
          break;
        case InitialCondition::Zero:
          break;
      }
      u[q * m + p] = v;
    }
  }
  return u;
}

HeatModel::HeatModel(HeatFitConfig config)
  : config_(std::move(config)),
    laplacian_((config_.validate(), assemble_laplacian_2d(config_.grid_points_per_dim))),
    u0_(sample_initial_condition(config_.grid_points_per_dim, config_.u0))
{
}

HeatEvaluation HeatModel::evaluate(double sigma, const Vector<Real> &s_ref) const
{
  if (!(sigma > 0.0))
  {
    throw ArgumentError("heat: sigma must be positive");
  }
  if (s_ref.size() != u0_.size())
  {
    throw DimensionError("heat: reference solution has the wrong length");
  }
  HeatEvaluation out;
  Vector<Real> ds = Vector<Real>::Zero(u0_.size());
  if (u0_.norm() == 0.0)
  {
    out.state = Vector<Real>::Zero(u0_.size());
  }
  else
  {
    const double T = config_.final_time;
    krylov::FrechetOptions<Real> options;
    options.stop_tol = config_.krylov_tol;
    // The Laplacian is symmetric, so both diagonal blocks of the compressed matrix are too.
    options.evaluation = krylov::CompressedEvaluation::HermitianSpectral;
    const auto r = krylov::modified_arnoldi<Real>(laplacian_.scaled(T * sigma),
                                                  laplacian_.scaled(T), u0_,
                                                  FunctionSpec::exp(1.0), config_.krylov_k,
                                                  options);
    out.state = r.v2;
    ds = r.v1;
    out.krylov_iterations = r.iterations;
  }
  const Vector<Real> residual = out.state - s_ref;
  out.value = residual.squaredNorm();
  out.gradient = 2.0 * residual.dot(ds);
  return out;
}

Vector<Real> HeatModel::solution(double sigma) const
{
  return evaluate(sigma, Vector<Real>::Zero(u0_.size())).state;
}

HeatEvaluation heat_objective_and_gradient(const HeatFitConfig &config, double sigma,
                                           const Vector<Real> &s_ref)
{
  return HeatModel(config).evaluate(sigma, s_ref);
}

HeatFitResult heat_fit(const HeatFitConfig &config)
{
  const HeatModel model(config);
  const Vector<Real> s_ref = model.solution(config.sigma_ref);

  HeatFitResult out;
  double sigma = config.sigma0;
  HeatEvaluation current = model.evaluate(sigma, s_ref);
  out.sigma_trajectory.push_back(sigma);
  out.f_trajectory.push_back(current.value);

  for (Index it = 0; it < config.max_iters; ++it)
  {
    if (std::abs(current.value) <= config.abs_tol)
    {
      break;
    }
    double step = config.step0;
    bool accepted = false;
    for (Index bt = 0; bt < config.max_backtracks; ++bt, step *= 0.5)
    {
      const double candidate = sigma - step * current.gradient;
      if (!(candidate > 0.0))
      {
        continue;
      }
      HeatEvaluation next = model.evaluate(candidate, s_ref);
      if (next.value < current.value)
      {
        sigma = candidate;
        current = std::move(next);
        accepted = true;
        break;
      }
    }
    if (!accepted)
    {
      out.failed = true;
      out.message = "line search failed: no decrease after " +
                    std::to_string(config.max_backtracks) + " step halvings at sigma = " +
                    std::to_string(sigma);
      break;
    }
    out.sigma_trajectory.push_back(sigma);
    out.f_trajectory.push_back(current.value);
  }
  out.converged = std::abs(current.value) <= config.abs_tol;
  if (!out.converged && !out.failed)
  {
    out.message = "iteration limit reached";
  }
  return out;
}

}  // namespace lfab::apps
