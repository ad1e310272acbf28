// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lfab/apps/centrality.hpp"
#include "lfab/apps/heat.hpp"
#include "lfab/cli/csv.hpp"
#include "lfab/frechet/oracles.hpp"
#include "lfab/frechet/problem.hpp"

namespace lfab::cli
{

/// Process exit codes.
enum ExitCode : int
{
  kExitOk = 0,
  kExitUsage = 1,
  kExitComputation = 2,
  kExitCheckFailed = 3
};

enum class Method
{
  Modified,
  Block,
  Fd,
  Cs,
  Fab
};

std::string to_string(Method method);
/// Comma separated subset of modified, block, fd, cs, fab. Order is preserved, repeats dropped.
std::vector<Method> parse_methods(const std::string &text);
std::vector<Method> all_methods();

// ---------------------------------------------------------------------------------------------
// convergence

struct ConvergenceConfig
{
  /// Synthetic diagonal A = diag(lo, lo + 1, ..., hi) with random dense E and random b.
  std::optional<std::pair<double, double>> diag;
  /// Synthetic random sparse A and E of this size (0: unused).
  Index random_n = 0;
  std::string a_path;  // Matrix Market
  std::string e_path;  // Matrix Market; random dense E when empty
  std::string b_path;  // one value per line; random b when empty
  bool zero_e = false;
  FunctionSpec f = FunctionSpec::sqrt();
  Index k_max = 80;
  std::uint64_t seed = 42;
  std::vector<Method> methods = all_methods();
  std::optional<double> fd_eps;  // default_fd_eps when unset
  double cs_eps = 1.0e-20;

  void validate() const;
};

struct ConvergenceRow
{
  Method method;
  Index k;
  double rel_error;
};

struct ConvergenceStudy
{
  std::vector<ConvergenceRow> rows;  // grouped by method, k = 1..k_max
  frechet::OracleMethod oracle = frechet::OracleMethod::DaleckiiKrein;
  bool ill_conditioned = false;
  double fd_eps = 0.0;
};

frechet::FrechetProblem<Real> build_convergence_problem(const ConvergenceConfig &config);

/// Errors of every method for k = 1..k_max against an oracle: Daleckii-Krein for diagonal or
/// symmetric A, dense embedding otherwise. fab is measured against f(A) b. Curves that stop
/// early (breakdown) are padded with their last value. When the reference vanishes the error
/// is absolute.
ConvergenceStudy run_convergence(const ConvergenceConfig &config);

CsvTable convergence_csv(const ConvergenceStudy &study);

// ---------------------------------------------------------------------------------------------
// sensitivity

struct DatasetPreset
{
  const char *name;
  Index i;  // 0-based
  Index j;
};

/// Index pairs for the five benchmark graphs. Returns nullptr for unknown names.
const DatasetPreset *find_dataset(const std::string &name);
const std::vector<DatasetPreset> &dataset_presets();

struct SensitivityConfig
{
  std::string graph_path;  // .mtx: Matrix Market; anything else: edge list
  Index nodes = 0;         // edge lists only; 0 infers from the largest index
  int edge_base = 0;       // edge lists only
  bool symmetrize = false; // unit-weight union of A and A^T
  apps::SensitivityQuery query;
  Index k_max = 100;
  double stop_tol = 1.0e-10;
};

SparseMatrix<Real> load_graph(const SensitivityConfig &config);
apps::SensitivityResult run_sensitivity(const SensitivityConfig &config);
CsvTable sensitivity_csv(const apps::SensitivityResult &result);

// ---------------------------------------------------------------------------------------------
// heat fit

CsvTable heat_fit_csv(const apps::HeatFitResult &result);

// ---------------------------------------------------------------------------------------------
// check suite

struct CheckConfig
{
  std::uint64_t seed = 42;
  bool mutate_r_update = false;  // test hook forwarded to the span-property check
};

struct CheckLine
{
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<CheckLine> run_check_suite(const CheckConfig &config);

// Individual suites. Each builds its own seeded instances.
CheckLine check_adjoint_identity(std::uint64_t seed, int instances = 10, Index n = 10);
CheckLine check_rank_one_reduction(std::uint64_t seed, int instances = 10, Index n = 10);
CheckLine check_polynomial_exactness(std::uint64_t seed, int instances = 20, Index n = 30);
CheckLine check_convergence_bound(std::uint64_t seed);
CheckLine check_span_property(std::uint64_t seed, bool mutate_r_update, int instances = 5,
                              Index n = 40, Index k = 8);

}  // namespace lfab::cli
