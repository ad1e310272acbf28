// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "lfab/frechet/baselines.hpp"
#include "lfab/frechet/identities.hpp"
#include "lfab/krylov/checks.hpp"
#include "lfab/krylov/modified.hpp"
#include "lfab/krylov/structured.hpp"
#include "lfab/linalg/io.hpp"
#include "lfab/linalg/orthog.hpp"
#include "lfab/linalg/random.hpp"

namespace lfab::cli
{

namespace
{

std::string sci(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Vector<Real> read_vector(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw Error("cannot open '" + path + "'");
  }
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line))
  {
    ++lineno;
    if (line.empty() || line[0] == '%' || line[0] == '#')
    {
      continue;
    }
    values.push_back(parse_number(line, lineno));
  }
  return Eigen::Map<Vector<Real>>(values.data(), static_cast<Index>(values.size()));
}

double relative(const Vector<Real> &x, const Vector<Real> &ref, double scale)
{
  const double err = (x - ref).norm();
  return scale > 0.0 ? err / scale : err;
}

/// Fills a per-k curve from sparse observations: missing entries take the previous value.
std::vector<double> fill_forward(std::vector<double> curve)
{
  double last = NAN;
  for (double &v : curve)
  {
    if (std::isnan(v))
    {
      v = last;
    }
    else
    {
      last = v;
    }
  }
  return curve;
}

}  // namespace

std::string to_string(Method method)
{
  switch (method)
  {
    case Method::Modified: return "modified";
    case Method::Block: return "block";
    case Method::Fd: return "fd";
    case Method::Cs: return "cs";
    case Method::Fab: return "fab";
  }
  return "?";
}

std::vector<Method> all_methods()
{
  return {Method::Modified, Method::Block, Method::Fd, Method::Cs, Method::Fab};
}

std::vector<Method> parse_methods(const std::string &text)
{
  std::vector<Method> out;
  std::size_t start = 0;
  while (start <= text.size())
  {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string name = text.substr(start, comma - start);
    bool known = false;
    for (Method m : all_methods())
    {
      if (to_string(m) == name)
      {
        known = true;
        if (std::find(out.begin(), out.end(), m) == out.end())
        {
          out.push_back(m);
        }
      }
    }
    if (!known)
    {
      throw ArgumentError("unknown method '" + name +
                          "' (expected modified, block, fd, cs or fab)");
    }
    start = comma + 1;
  }
  return out;
}

void ConvergenceConfig::validate() const
{
  const int sources = (diag ? 1 : 0) + (random_n > 0 ? 1 : 0) + (a_path.empty() ? 0 : 1);
  if (sources != 1)
  {
    throw ArgumentError("convergence: give exactly one of --diag, --random or --A");
  }
  if (diag && !(diag->first <= diag->second))
  {
    throw ArgumentError("convergence: --diag needs lo <= hi");
  }
  if (k_max < 1)
  {
    throw ArgumentError("convergence: --kmax must be at least 1");
  }
  if (methods.empty())
  {
    throw ArgumentError("convergence: no methods selected");
  }
  if (fd_eps && !(*fd_eps > 0.0))
  {
    throw ArgumentError("convergence: --fd-eps must be positive");
  }
  if (!(cs_eps > 0.0))
  {
    throw ArgumentError("convergence: --cs-eps must be positive");
  }
}

frechet::FrechetProblem<Real> build_convergence_problem(const ConvergenceConfig &config)
{
  config.validate();
  Rng rng(config.seed);
  SparseMatrix<Real> A, E;
  if (config.diag)
  {
    const auto [lo, hi] = *config.diag;
    const Index n = static_cast<Index>(std::floor(hi - lo)) + 1;
    A = SparseMatrix<Real>::diagonal(Vector<Real>::LinSpaced(n, lo, lo + double(n - 1)));
  }
  else if (config.random_n > 0)
  {
    const Index n = config.random_n;
    const double scale = 1.0 / std::sqrt(0.2 * static_cast<double>(n));
    A = linalg::random_sparse<Real>(n, n, 0.2, rng, scale);
    if (config.e_path.empty())
    {
      E = linalg::random_sparse<Real>(n, n, 0.2, rng, scale);
    }
  }
  else
  {
    A = linalg::read_matrix_market<Real>(std::filesystem::path(config.a_path));
    if (!A.is_square())
    {
      throw DimensionError("convergence: A must be square");
    }
  }
  const Index n = A.rows();
  if (!config.e_path.empty())
  {
    E = linalg::read_matrix_market<Real>(std::filesystem::path(config.e_path));
  }
  else if (E.rows() == 0 && config.diag && config.zero_e && n > frechet::kDenseOracleMaxN)
  {
    E = SparseMatrix<Real>::zero(n, n);
  }
  else if (E.rows() == 0)
  {
    // Drawn even under --zero-e so that b is the same with and without it.
    if (n > frechet::kDenseOracleMaxN)
    {
      throw SizeGuardError("convergence: a random dense E needs n <= " +
                           std::to_string(frechet::kDenseOracleMaxN) + "; pass --E instead");
    }
    E = SparseMatrix<Real>::from_dense(linalg::randn_dense<Real>(n, n, rng));
  }
  if (config.zero_e)
  {
    E = SparseMatrix<Real>::zero(n, n);
  }
  Vector<Real> b = config.b_path.empty() ? linalg::randn_vector<Real>(n, rng)
                                         : read_vector(config.b_path);
  frechet::FrechetProblem<Real> problem{std::move(A), std::move(E), std::move(b), config.f};
  problem.validate();
  return problem;
}

ConvergenceStudy run_convergence(const ConvergenceConfig &config)
{
  const auto problem = build_convergence_problem(config);
  const Index n = problem.size(), K = config.k_max;

  frechet::OracleResult<Real> oracle = [&] {
    if (problem.A.is_diagonal())
    {
      Vector<Real> d(n);
      for (Index i = 0; i < n; ++i)
      {
        d[i] = problem.A.coeff(i, i);
      }
      return frechet::oracle_daleckii_krein_diagonal<Real>(d, problem.E.to_dense(), problem.b,
                                                           problem.f);
    }
    if (n > frechet::kDenseOracleMaxN)
    {
      throw SizeGuardError("convergence: no oracle for n = " + std::to_string(n) + " (limit " +
                           std::to_string(frechet::kDenseOracleMaxN) +
                           " for non-diagonal A); use a smaller or diagonal A");
    }
    if (problem.A.is_hermitian())
    {
      return frechet::oracle_daleckii_krein<Real>(problem.A.to_dense(), problem.E.to_dense(),
                                                  problem.b, problem.f);
    }
    return frechet::oracle_dense_embedding<Real>(problem);
  }();
  const double l_scale = oracle.Lb.norm(), f_scale = oracle.fAb.norm();

  ConvergenceStudy study;
  study.oracle = oracle.method;
  study.ill_conditioned = oracle.ill_conditioned;
  study.fd_eps = config.fd_eps ? *config.fd_eps : frechet::default_fd_eps<Real>(problem);

  for (Method method : config.methods)
  {
    std::vector<double> curve(K, NAN);
    auto observe = [&](Index k, const Vector<Real> &v1, const Vector<Real> &) {
      if (k >= 1 && k <= K)
      {
        curve[k - 1] = relative(v1, oracle.Lb, l_scale);
      }
    };
    auto from_sweep = [&](const std::vector<Vector<Real>> &xs, const Vector<Real> &ref,
                          double scale) {
      for (Index k = 0; k < K; ++k)
      {
        curve[k] = relative(xs[k], ref, scale);
      }
    };
    switch (method)
    {
      case Method::Modified:
      case Method::Block:
      {
        krylov::FrechetOptions<Real> options;
        options.check_every = 1;
        options.observer = observe;
        if (method == Method::Modified)
        {
          krylov::modified_arnoldi<Real>(problem.A, problem.E, problem.b, problem.f, K, options);
        }
        else
        {
          krylov::block_embedding_arnoldi<Real>(problem.A, problem.E, problem.b, problem.f, K,
                                                options);
        }
        break;
      }
      case Method::Fd:
        from_sweep(frechet::fd_arnoldi_sweep<Real>(problem, study.fd_eps, K), oracle.Lb, l_scale);
        break;
      case Method::Cs:
        from_sweep(frechet::cs_arnoldi_sweep<Real>(problem, config.cs_eps, K), oracle.Lb,
                   l_scale);
        break;
      case Method::Fab:
        from_sweep(frechet::fab_sweep<Real>(LinearOperator<Real>(problem.A), problem.b, problem.f,
                                            K),
                   oracle.fAb, f_scale);
        break;
    }
    curve = fill_forward(std::move(curve));
    for (Index k = 0; k < K; ++k)
    {
      study.rows.push_back({method, k + 1, curve[k]});
    }
  }
  return study;
}

CsvTable convergence_csv(const ConvergenceStudy &study)
{
  CsvTable table{{"method", "k", "rel_error"}, {}};
  for (const auto &row : study.rows)
  {
    table.rows.push_back({to_string(row.method), std::to_string(row.k),
                          format_number(row.rel_error)});
  }
  return table;
}

const std::vector<DatasetPreset> &dataset_presets()
{
  static const std::vector<DatasetPreset> presets{{"Air500", 256, 123},
                                                  {"Autobahn", 218, 605},
                                                  {"USPowerGrid", 3579, 2400},
                                                  {"as-735", 3105, 5000},
                                                  {"HepTh", 7200, 6969}};
  return presets;
}

const DatasetPreset *find_dataset(const std::string &name)
{
  for (const auto &p : dataset_presets())
  {
    if (name == p.name)
    {
      return &p;
    }
  }
  return nullptr;
}

SparseMatrix<Real> load_graph(const SensitivityConfig &config)
{
  const std::filesystem::path path(config.graph_path);
  SparseMatrix<Real> A;
  if (path.extension() == ".mtx")
  {
    A = linalg::read_matrix_market<Real>(path);
    if (!A.is_square())
    {
      throw DimensionError("sensitivity: adjacency matrix must be square");
    }
    if (config.symmetrize)
    {
      std::vector<Triplet<Real>> entries;
      for (Index r = 0; r < A.rows(); ++r)
      {
        for (Index p = A.row_ptr()[r]; p < A.row_ptr()[r + 1]; ++p)
        {
          if (A.values()[p] != 0.0)
          {
            entries.push_back({r, A.col_idx()[p], 1.0});
            entries.push_back({A.col_idx()[p], r, 1.0});
          }
        }
      }
      A = SparseMatrix<Real>::from_triplets(A.rows(), A.cols(), std::move(entries),
                                            DuplicatePolicy::ClampOne);
    }
  }
  else
  {
    A = linalg::read_edge_list(path, config.nodes, !config.symmetrize, config.edge_base);
  }
  return A;
}

apps::SensitivityResult run_sensitivity(const SensitivityConfig &config)
{
  if (config.k_max < 1)
  {
    throw ArgumentError("sensitivity: --kmax must be at least 1");
  }
  const SparseMatrix<Real> A = load_graph(config);
  return apps::sensitivity_entry(A, config.query, config.k_max, config.stop_tol);
}

CsvTable sensitivity_csv(const apps::SensitivityResult &result)
{
  CsvTable table{{"k", "estimate", "update_norm"}, {}};
  for (const auto &s : result.steps)
  {
    table.rows.push_back(
      {std::to_string(s.k), format_number(s.estimate), format_number(s.update_norm)});
  }
  return table;
}

CsvTable heat_fit_csv(const apps::HeatFitResult &result)
{
  CsvTable table{{"iter", "sigma", "f_value"}, {}};
  for (std::size_t it = 0; it < result.sigma_trajectory.size(); ++it)
  {
    table.rows.push_back({std::to_string(it), format_number(result.sigma_trajectory[it]),
                          format_number(result.f_trajectory[it])});
  }
  return table;
}

// ---------------------------------------------------------------------------------------------

CheckLine check_adjoint_identity(std::uint64_t seed, int instances, Index n)
{
  Rng rng(seed);
  const FunctionSpec fs[] = {FunctionSpec::exp(1.0), FunctionSpec::polynomial({1, -2, 0.5, 1})};
  double worst = 0.0;
  for (int t = 0; t < instances; ++t)
  {
    const DenseMatrix<Complex> A =
      linalg::randn_dense<Complex>(n, n, rng) / std::sqrt(2.0 * static_cast<double>(n));
    const DenseMatrix<Complex> E = linalg::randn_dense<Complex>(n, n, rng);
    const Vector<Complex> b = linalg::randn_vector<Complex>(n, rng);
    const Vector<Complex> c = linalg::randn_vector<Complex>(n, rng);
    worst = std::max(worst, frechet::adjoint_identity_residual<Complex>(A, E, b, c, fs[t % 2]));
  }
  return {"adjoint-identity", worst <= 1e-10, "max residual " + sci(worst)};
}

CheckLine check_rank_one_reduction(std::uint64_t seed, int instances, Index n)
{
  Rng rng(seed + 1);
  double worst = 0.0;
  for (int t = 0; t < instances; ++t)
  {
    const DenseMatrix<Complex> A =
      linalg::randn_dense<Complex>(n, n, rng) / std::sqrt(2.0 * static_cast<double>(n));
    const Vector<Complex> x = linalg::randn_vector<Complex>(n, rng);
    const Vector<Complex> y = linalg::randn_vector<Complex>(n, rng);
    const Vector<Complex> b = linalg::randn_vector<Complex>(n, rng);
    const Vector<Complex> c = linalg::randn_vector<Complex>(n, rng);
    const auto [lhs, rhs] =
      frechet::rank_one_reduction<Complex>(A, x, y, b, c, FunctionSpec::exp(1.0));
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    worst = std::max(worst, scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0);
  }
  return {"rank-one-reduction", worst <= 1e-10, "max relative residual " + sci(worst)};
}

CheckLine check_polynomial_exactness(std::uint64_t seed, int instances, Index n)
{
  Rng rng(seed + 2);
  double worst = 0.0;
  const double scale = 1.0 / std::sqrt(0.2 * static_cast<double>(n));
  for (int t = 0; t < instances; ++t)
  {
    const Index k = 1 + rng.index(6);
    const Index degree = rng.index(k);
    std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1);
    for (double &c : coeffs)
    {
      c = rng.normal();
    }
    const auto A = linalg::random_sparse<Real>(n, n, 0.2, rng, scale);
    const auto E = linalg::random_sparse<Real>(n, n, 0.2, rng, scale);
    const Vector<Real> b = linalg::randn_vector<Real>(n, rng);
    worst = std::max(worst, krylov::exactness_check<Real>(A, E, b, coeffs, k));
  }
  return {"polynomial-exactness", worst <= 1e-10, "max relative error " + sci(worst)};
}

CheckLine check_convergence_bound(std::uint64_t seed)
{
  Rng rng(seed + 3);
  const Index n = 100;
  const auto A = SparseMatrix<Real>::diagonal(Vector<Real>::LinSpaced(n, 1.0, 100.0));
  const auto E = SparseMatrix<Real>::from_dense(linalg::randn_dense<Real>(n, n, rng));
  const Vector<Real> b = linalg::randn_vector<Real>(n, rng);
  bool ok = true;
  double prev_rhs = INFINITY;
  std::string detail;
  for (Index k : {10, 20, 40})
  {
    const auto r = krylov::verify_convergence_bound<Real>(A, E, b, FunctionSpec::sqrt(), k);
    ok = ok && r.lhs <= r.rhs && r.rhs < prev_rhs;
    prev_rhs = r.rhs;
    detail += (detail.empty() ? "" : "; ") + std::string("k=") + std::to_string(k) + " lhs " +
              sci(r.lhs) + " rhs " + sci(r.rhs);
  }
  return {"convergence-bound", ok, detail};
}

CheckLine check_span_property(std::uint64_t seed, bool mutate_r_update, int instances, Index n,
                              Index k)
{
  Rng rng(seed + 4);
  const double scale = 1.0 / std::sqrt(0.2 * static_cast<double>(n));
  double worst_angle = 0.0, worst_orth = 0.0;
  bool triangular = true;
  for (int t = 0; t < instances; ++t)
  {
    const auto A = linalg::random_sparse<Real>(n, n, 0.2, rng, scale);
    const auto E = linalg::random_sparse<Real>(n, n, 0.2, rng, scale);
    const Vector<Real> b = linalg::randn_vector<Real>(n, rng);
    krylov::SeparateOrthOptions options;
    options.mutate_r_update = mutate_r_update;
    const auto basis = krylov::separate_orthonormalization<Real>(A, E, b, k, options);
    const Index nv = basis.V.cols();

    DenseMatrix<Real> W(2 * n, nv);
    W.topRows(n) = basis.U * basis.R;
    W.bottomRows(n) = basis.V;

    // Explicit Krylov vectors of the embedding, normalized column by column.
    const auto op = linalg::block_embedding_operator<Real>(A, E);
    DenseMatrix<Real> K(2 * n, nv);
    Vector<Real> z = Vector<Real>::Zero(2 * n);
    z.tail(n) = b / b.norm();
    for (Index j = 0; j < nv; ++j)
    {
      K.col(j) = z;
      z = op * z;
      z /= z.norm();
    }
    const DenseMatrix<Real> QW = linalg::orth<Real>(W), QK = linalg::orth<Real>(K);
    const double angle = QW.cols() == QK.cols() ? linalg::max_principal_angle<Real>(QW, QK)
                                                : M_PI / 2;  // rank mismatch
    worst_angle = std::max(worst_angle, angle);
    worst_orth = std::max({worst_orth, linalg::orthonormality_error<Real>(basis.U),
                           linalg::orthonormality_error<Real>(basis.V)});
    for (Index j = 0; j < basis.R.cols(); ++j)
    {
      for (Index i = j; i < basis.R.rows(); ++i)
      {
        triangular = triangular && basis.R(i, j) == 0.0;
      }
    }
  }
  const bool ok = worst_angle <= 1e-8 && worst_orth <= 1e-10 && triangular;
  return {"span-property", ok,
          "max principal angle " + sci(worst_angle) + ", orthonormality " + sci(worst_orth) +
            ", R strictly upper " + (triangular ? "yes" : "no")};
}

std::vector<CheckLine> run_check_suite(const CheckConfig &config)
{
  return {check_adjoint_identity(config.seed), check_rank_one_reduction(config.seed),
          check_polynomial_exactness(config.seed), check_convergence_bound(config.seed),
          check_span_property(config.seed, config.mutate_r_update)};
}

}  // namespace lfab::cli
