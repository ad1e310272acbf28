// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/apps/centrality.hpp"

#include <cmath>
#include <limits>

#include "lfab/frechet/oracles.hpp"
#include "lfab/krylov/modified.hpp"

namespace lfab::apps
{

namespace
{

Vector<Real> unit(Index n, Index i)
{
  Vector<Real> e = Vector<Real>::Zero(n);
  e[i] = 1.0;
  return e;
}

/// Runs modified Arnoldi and tracks the scalar left^T v1 at every iteration.
SensitivityResult track_scalar(const LinearOperator<Real> &A, const LinearOperator<Real> &E,
                               const Vector<Real> &b, const Vector<Real> &left, Index k,
                               double stop_tol)
{
  if (k < 1)
  {
    throw ArgumentError("sensitivity: k must be at least 1");
  }
  SensitivityResult out;
  krylov::FrechetOptions<Real> options;
  options.check_every = 1;
  options.observer = [&](Index it, const Vector<Real> &v1, const Vector<Real> &) {
    const double s = left.dot(v1);
    double update = std::numeric_limits<double>::infinity();
    if (!out.steps.empty())
    {
      const double diff = std::abs(s - out.steps.back().estimate);
      update = s != 0.0 ? diff / std::abs(s) : (diff == 0.0 ? 0.0 : update);
    }
    out.steps.push_back({it, s, update});
  };
  // The scalar can sit at exactly 0 until the Krylov space reaches the query nodes, so the stop
  // uses the vector update instead.
  options.stop_tol = stop_tol;
  const auto result =
    krylov::modified_arnoldi<Real>(A, E, b, FunctionSpec::exp(1.0), k, options);
  out.estimate = left.dot(result.v1);
  out.iterations = result.iterations;
  // Stopping short of the budget without a tolerance hit means the spaces stopped growing and
  // the projection is exact.
  const bool hit = stop_tol > 0.0 && !result.history.empty() &&
                   result.history.back().update_norm <= stop_tol;
  out.converged = hit || result.iterations < k;
  return out;
}

}  // namespace

Measure parse_measure(const std::string &text)
{
  if (text == "tn" || text == "TN")
  {
    return Measure::TotalCommunicability;
  }
  if (text == "sc" || text == "SC")
  {
    return Measure::SubgraphCentrality;
  }
  if (text == "ei" || text == "EI")
  {
    return Measure::EstradaIndex;
  }
  throw ArgumentError("unknown measure '" + text + "' (expected tn, sc or ei)");
}

std::string to_string(Measure measure)
{
  switch (measure)
  {
    case Measure::TotalCommunicability:
      return "tn";
    case Measure::SubgraphCentrality:
      return "sc";
    case Measure::EstradaIndex:
      return "ei";
  }
  return "?";
}

void SensitivityQuery::validate(Index n) const
{
  auto check = [n](Index v, const char *name) {
    if (v < 0 || v >= n)
    {
      throw ArgumentError(std::string("sensitivity: index ") + name + " = " + std::to_string(v) +
                          " out of range for n = " + std::to_string(n));
    }
  };
  if (!full_rank_direction)
  {
    check(i, "i");
    check(j, "j");
    if (measure == Measure::SubgraphCentrality)
    {
      check(ell, "ell");
    }
  }
}

SparseMatrix<Real> full_rank_direction(const SparseMatrix<Real> &A)
{
  std::vector<Index> row_ptr{0};
  std::vector<Index> col_idx;
  std::vector<Real> values;
  for (Index r = 0; r < A.rows(); ++r)
  {
    for (Index p = A.row_ptr()[r]; p < A.row_ptr()[r + 1]; ++p)
    {
      if (A.values()[p] != 0.0)
      {
        col_idx.push_back(A.col_idx()[p]);
        values.push_back(1.0);
      }
    }
    row_ptr.push_back(static_cast<Index>(col_idx.size()));
  }
  return SparseMatrix<Real>(A.rows(), A.cols(), std::move(row_ptr), std::move(col_idx),
                            std::move(values));
}

SensitivityResult sensitivity_entry(const SparseMatrix<Real> &A, const SensitivityQuery &query,
                                    Index k, double stop_tol)
{
  if (!A.is_square())
  {
    throw DimensionError("sensitivity: adjacency matrix must be square");
  }
  const Index n = A.rows();
  query.validate(n);
  if (query.full_rank_direction)
  {
    return sensitivity_full_rank(A, k, stop_tol);
  }

  const LinearOperator<Real> At = A.transpose();
  LinearOperator<Real> direction = linalg::identity_operator<Real>(n);
  switch (query.measure)
  {
    case Measure::TotalCommunicability:
      direction = linalg::rank_one_operator<Real>(Vector<Real>::Ones(n), Vector<Real>::Ones(n));
      break;
    case Measure::SubgraphCentrality:
      direction = linalg::rank_one_operator<Real>(unit(n, query.ell), unit(n, query.ell));
      break;
    case Measure::EstradaIndex:
      break;
  }
  return track_scalar(At, direction, unit(n, query.j), unit(n, query.i), k, stop_tol);
}

SensitivityResult sensitivity_full_rank(const SparseMatrix<Real> &A, Index k, double stop_tol)
{
  if (!A.is_square())
  {
    throw DimensionError("sensitivity: adjacency matrix must be square");
  }
  const Index n = A.rows();
  const Vector<Real> ones = Vector<Real>::Ones(n);
  return track_scalar(A, full_rank_direction(A), ones, ones, k, stop_tol);
}

double sensitivity_dense_reference(const SparseMatrix<Real> &A, const SensitivityQuery &query)
{
  const Index n = A.rows();
  query.validate(n);
  const DenseMatrix<Real> Ad = A.to_dense();
  const FunctionSpec f = FunctionSpec::exp(1.0);
  const Vector<Real> ones = Vector<Real>::Ones(n);
  if (query.full_rank_direction)
  {
    const DenseMatrix<Real> L = frechet::frechet_dense<Real>(Ad, full_rank_direction(A).to_dense(), f);
    return ones.dot(L * ones);
  }
  DenseMatrix<Real> E = DenseMatrix<Real>::Zero(n, n);
  E(query.i, query.j) = 1.0;
  const DenseMatrix<Real> L = frechet::frechet_dense<Real>(Ad, E, f);
  switch (query.measure)
  {
    case Measure::TotalCommunicability:
      return ones.dot(L * ones);
    case Measure::SubgraphCentrality:
      return L(query.ell, query.ell);
    case Measure::EstradaIndex:
      return L.trace();
  }
  return 0.0;
}

}  // namespace lfab::apps
