// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "lfab/cli/commands.hpp"
#include "lfab/cli/plot.hpp"

namespace
{

using namespace lfab;
using namespace lfab::cli;

std::pair<double, double> parse_range(const std::string &text)
{
  const auto colon = text.find(':');
  if (colon == std::string::npos)
  {
    throw ArgumentError("--diag expects lo:hi, got '" + text + "'");
  }
  return {parse_number(text.substr(0, colon), 0), parse_number(text.substr(colon + 1), 0)};
}

void emit(const CsvTable &table, const std::string &output, const std::string &plot)
{
  if (output.empty() || output == "-")
  {
    write_csv(std::cout, table);
  }
  else
  {
    write_csv(std::filesystem::path(output), table);
  }
  if (!plot.empty())
  {
    if (output.empty() || output == "-")
    {
      throw ArgumentError("--plot needs --output");
    }
    emit_plot(output, plot);
  }
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Krylov approximation of Frechet derivative actions L_f(A, E) b"};
  app.require_subcommand(1);

  // convergence
  auto *conv = app.add_subcommand("convergence", "error against an oracle for k = 1..kmax");
  ConvergenceConfig cc;
  std::string diag, f_text = "sqrt", methods_text, conv_out, conv_plot;
  double fd_eps = 0.0;
  conv->add_option("--diag", diag, "diagonal A = diag(lo..hi), e.g. 1:500");
  conv->add_option("--random", cc.random_n, "random sparse A and E of this size");
  conv->add_option("--A", cc.a_path, "Matrix Market file for A");
  conv->add_option("--E", cc.e_path, "Matrix Market file for E (default: random dense)");
  conv->add_option("--b", cc.b_path, "vector file, one value per line (default: random)");
  conv->add_flag("--zero-e", cc.zero_e, "use E = 0");
  conv->add_option("--f", f_text, "exp, exp:<t>, sqrt or poly:<c0>,<c1>,...");
  conv->add_option("--kmax", cc.k_max, "largest k")->check(CLI::PositiveNumber);
  conv->add_option("--seed", cc.seed, "PRNG seed");
  conv->add_option("--methods", methods_text, "subset of modified,block,fd,cs,fab");
  conv->add_option("--fd-eps", fd_eps, "finite-difference step (default scales with norms)");
  conv->add_option("--cs-eps", cc.cs_eps, "complex-step size");
  conv->add_option("--output,-o", conv_out, "CSV path (default stdout)");
  conv->add_option("--plot", conv_plot, "also write an SVG plot");

  // sensitivity
  auto *sens = app.add_subcommand("sensitivity", "sensitivity of a centrality measure");
  SensitivityConfig sc;
  std::string measure = "tn", dataset, sens_out, sens_plot;
  Index qi = -1, qj = -1;
  bool directed = false;
  sens->add_option("graph", sc.graph_path, "graph: .mtx or edge list")->required();
  sens->add_option("--measure", measure, "tn, sc or ei");
  sens->add_option("--i", qi, "row index (0-based)");
  sens->add_option("--j", qj, "column index (0-based)");
  sens->add_option("--ell", sc.query.ell, "node for subgraph centrality (0-based)");
  sens->add_flag("--full-rank", sc.query.full_rank_direction, "direction: pattern of A");
  sens->add_option("--dataset", dataset, "preset indices: Air500, Autobahn, USPowerGrid, as-735, HepTh");
  auto *sym = sens->add_flag("--symmetrize", sc.symmetrize, "use the union of A and A^T");
  sens->add_flag("--directed", directed, "keep the graph as read (default)")->excludes(sym);
  sens->add_option("--nodes", sc.nodes, "node count for edge lists (default: inferred)");
  sens->add_option("--base", sc.edge_base, "index base of edge lists (0 or 1)");
  sens->add_option("--kmax", sc.k_max, "iteration budget")->check(CLI::PositiveNumber);
  sens->add_option("--stop-tol", sc.stop_tol, "relative update tolerance");
  sens->add_option("--output,-o", sens_out, "CSV path (default stdout)");
  sens->add_option("--plot", sens_plot, "also write an SVG plot");

  // heat-fit
  auto *heat = app.add_subcommand("heat-fit", "fit the diffusion coefficient of a heat problem");
  apps::HeatFitConfig hc;
  std::string u0 = "bump", heat_out, heat_plot;
  heat->add_option("--grid", hc.grid_points_per_dim, "interior points per dimension");
  heat->add_option("--sigma0", hc.sigma0, "starting value");
  heat->add_option("--sigma-ref", hc.sigma_ref, "value that generates the data");
  heat->add_option("--step0", hc.step0, "initial step of each line search");
  heat->add_option("--tol", hc.abs_tol, "absolute tolerance on f");
  heat->add_option("--max-iters", hc.max_iters, "iteration limit");
  heat->add_option("--krylov-k", hc.krylov_k, "Krylov budget per solve");
  heat->add_option("--krylov-tol", hc.krylov_tol, "Krylov stopping tolerance");
  heat->add_option("--u0", u0, "initial condition: bump, cosine or zero");
  heat->add_option("--output,-o", heat_out, "CSV path (default stdout)");
  heat->add_option("--plot", heat_plot, "also write an SVG plot");

  // check
  auto *check = app.add_subcommand("check", "run the identity and bound suites");
  CheckConfig kc;
  check->add_option("--seed", kc.seed, "PRNG seed");
  check->add_flag("--mutate-r-update", kc.mutate_r_update, "test hook: corrupt the R update");

  // plot
  auto *plot = app.add_subcommand("plot", "render a CSV written by another command as SVG");
  std::string plot_in, plot_out;
  plot->add_option("csv", plot_in, "input CSV")->required();
  plot->add_option("svg", plot_out, "output SVG")->required();

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try
  {
    if (*conv)
    {
      cc.f = FunctionSpec::parse(f_text);
      if (!diag.empty())
      {
        cc.diag = parse_range(diag);
      }
      if (!methods_text.empty())
      {
        cc.methods = parse_methods(methods_text);
      }
      if (fd_eps > 0.0)
      {
        cc.fd_eps = fd_eps;
      }
      cc.validate();
      const auto study = run_convergence(cc);
      std::fprintf(stderr, "oracle: %s%s; fd eps %.3e\n", frechet::to_string(study.oracle).c_str(),
                   study.ill_conditioned ? " (ill-conditioned eigenvectors)" : "", study.fd_eps);
      emit(convergence_csv(study), conv_out, conv_plot);
    }
    else if (*sens)
    {
      sc.query.measure = apps::parse_measure(measure);
      if (!dataset.empty())
      {
        const DatasetPreset *p = find_dataset(dataset);
        if (p == nullptr)
        {
          throw ArgumentError("unknown dataset '" + dataset + "'");
        }
        sc.query.i = p->i;
        sc.query.j = p->j;
      }
      if (qi >= 0)
      {
        sc.query.i = qi;
      }
      if (qj >= 0)
      {
        sc.query.j = qj;
      }
      const auto result = run_sensitivity(sc);
      std::fprintf(stderr, "estimate %.17g after %lld iterations (%s)\n", result.estimate,
                   static_cast<long long>(result.iterations),
                   result.converged ? "converged" : "not converged");
      emit(sensitivity_csv(result), sens_out, sens_plot);
    }
    else if (*heat)
    {
      hc.u0 = apps::parse_initial_condition(u0);
      hc.validate();
      const auto result = apps::heat_fit(hc);
      emit(heat_fit_csv(result), heat_out, heat_plot);
      if (!result.converged)
      {
        std::fprintf(stderr, "heat-fit: %s\n", result.message.c_str());
        return kExitComputation;
      }
    }
    else if (*check)
    {
      bool all = true;
      for (const auto &line : run_check_suite(kc))
      {
        std::printf("%s %s: %s\n", line.passed ? "PASS" : "FAIL", line.name.c_str(),
                    line.detail.c_str());
        all = all && line.passed;
      }
      return all ? kExitOk : kExitCheckFailed;
    }
    else if (*plot)
    {
      emit_plot(plot_in, plot_out);
    }
  }
  catch (const ArgumentError &e)
  {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  catch (const ParseError &e)
  {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  catch (const std::exception &e)
  {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitComputation;
  }
  return kExitOk;
}
