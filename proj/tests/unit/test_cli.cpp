// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "lfab/cli/commands.hpp"
#include "lfab/cli/plot.hpp"
#include "lfab/linalg/io.hpp"
#include "lfab/linalg/random.hpp"

namespace lfab
{
namespace
{

namespace fs = std::filesystem;
using namespace cli;

class TempDir : public ::testing::Test
{
protected:
  void SetUp() override
  {
    dir_ = fs::temp_directory_path() /
           ("lfab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path file(const std::string &name) const { return dir_ / name; }
  void write(const std::string &name, const std::string &text) const
  {
    std::ofstream(file(name)) << text;
  }

  fs::path dir_;
};

std::string to_text(const CsvTable &t)
{
  std::ostringstream out;
  write_csv(out, t);
  return out.str();
}

std::vector<double> column(const CsvTable &t, const std::string &method)
{
  std::vector<double> out;
  for (const auto &row : t.rows)
  {
    if (row[0] == method)
    {
      out.push_back(parse_number(row[2], 0));
    }
  }
  return out;
}

TEST(Csv, NumberFormatting)
{
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(INFINITY), "inf");
  EXPECT_EQ(parse_number(format_number(1.0 / 3.0), 0), 1.0 / 3.0);
  EXPECT_THROW(parse_number("1.5x", 3), ParseError);
  EXPECT_THROW(parse_number("", 3), ParseError);
}

TEST(Csv, RoundTripAndErrors)
{
  const CsvTable t{{"a", "b"}, {{"1", "2"}, {"3", "4"}}};
  std::istringstream in(to_text(t));
  const auto back = read_csv(in);
  EXPECT_EQ(back.header, t.header);
  EXPECT_EQ(back.rows, t.rows);
  EXPECT_EQ(back.column("b"), 1u);
  EXPECT_THROW(back.column("c"), ParseError);
  std::istringstream ragged("a,b\n1\n");
  EXPECT_THROW(read_csv(ragged), ParseError);
  std::istringstream empty("");
  EXPECT_THROW(read_csv(empty), ParseError);
}

TEST(Methods, Parsing)
{
  EXPECT_EQ(parse_methods("fab,modified,fab"), (std::vector<Method>{Method::Fab, Method::Modified}));
  EXPECT_THROW(parse_methods("modified,newton"), ArgumentError);
  EXPECT_EQ(all_methods().size(), 5u);
}

TEST(Convergence, SchemaAndPolynomialExactness)
{
  ConvergenceConfig c;
  c.random_n = 30;
  c.f = FunctionSpec::parse("poly:0,0,1");
  c.k_max = 5;
  const auto table = convergence_csv(run_convergence(c));
  EXPECT_EQ(table.header, (std::vector<std::string>{"method", "k", "rel_error"}));
  EXPECT_EQ(table.rows.size(), 25u);
  const auto modified = column(table, "modified");
  ASSERT_EQ(modified.size(), 5u);
  EXPECT_LE(modified[2], 1e-10);
  EXPECT_EQ(table.rows[0][1], "1");
}

TEST(Convergence, ZeroDirection)
{
  ConvergenceConfig c;
  c.random_n = 20;
  c.zero_e = true;
  c.f = FunctionSpec::exp(1.0);
  c.k_max = 6;
  const auto table = convergence_csv(run_convergence(c));
  for (const char *m : {"modified", "block", "fd", "cs"})
  {
    for (double e : column(table, m))
    {
      EXPECT_LE(e, 1e-14) << m;
    }
  }
  c.zero_e = false;
  c.methods = {Method::Fab};
  const auto fab_only = convergence_csv(run_convergence(c));
  const auto with_zero = column(table, "fab"), with_e = column(fab_only, "fab");
  ASSERT_EQ(with_zero.size(), with_e.size());
  for (std::size_t i = 0; i < with_e.size(); ++i)
  {
    // Same A and b; the reference f(A)b differs only by rounding.
    EXPECT_NEAR(with_zero[i], with_e[i], 1e-12 * with_e[i]);
  }
}

TEST(Convergence, Deterministic)
{
  ConvergenceConfig c;
  c.diag = {{1.0, 60.0}};
  c.k_max = 10;
  const std::string a = to_text(convergence_csv(run_convergence(c)));
  const std::string b = to_text(convergence_csv(run_convergence(c)));
  EXPECT_EQ(a, b);
  c.seed = 43;
  EXPECT_NE(a, to_text(convergence_csv(run_convergence(c))));
}

TEST(Convergence, ConfigErrors)
{
  ConvergenceConfig none;
  EXPECT_THROW(none.validate(), ArgumentError);
  ConvergenceConfig two;
  two.random_n = 5;
  two.diag = {{1.0, 5.0}};
  EXPECT_THROW(two.validate(), ArgumentError);
  ConvergenceConfig big;
  big.random_n = frechet::kDenseOracleMaxN + 1;
  big.zero_e = true;
  big.k_max = 1;
  EXPECT_THROW(run_convergence(big), SizeGuardError);
}

TEST_F(TempDir, ConvergenceFromFiles)
{
  Rng rng(3);
  linalg::write_matrix_market(file("A.mtx"), linalg::random_sparse<Real>(12, 12, 0.3, rng, 0.5));
  linalg::write_matrix_market(file("E.mtx"), linalg::random_sparse<Real>(12, 12, 0.3, rng));
  std::string b;
  for (int i = 0; i < 12; ++i)
  {
    b += std::to_string(i % 3 - 1.5) + "\n";
  }
  write("b.txt", b);
  ConvergenceConfig c;
  c.a_path = file("A.mtx").string();
  c.e_path = file("E.mtx").string();
  c.b_path = file("b.txt").string();
  c.f = FunctionSpec::exp(1.0);
  c.k_max = 15;
  c.methods = {Method::Modified};
  const auto study = run_convergence(c);
  EXPECT_EQ(study.oracle, frechet::OracleMethod::DenseEmbedding);
  EXPECT_LE(study.rows.back().rel_error, 1e-12);
}

TEST_F(TempDir, SensitivityCommand)
{
  write("path.txt", "0 1\n1 2\n2 3\n3 4\n");
  SensitivityConfig c;
  c.graph_path = file("path.txt").string();
  c.symmetrize = true;
  c.query = {apps::Measure::TotalCommunicability, 0, 4, 0, false};
  c.k_max = 20;
  const auto r = run_sensitivity(c);
  EXPECT_NEAR(r.estimate, apps::sensitivity_dense_reference(load_graph(c), c.query),
              1e-9 * std::abs(r.estimate));
  const auto t = sensitivity_csv(r);
  EXPECT_EQ(t.header, (std::vector<std::string>{"k", "estimate", "update_norm"}));
  EXPECT_EQ(t.rows.front()[2], "inf");

  write("empty.mtx", "%%MatrixMarket matrix coordinate real general\n5 5 0\n");
  c.graph_path = file("empty.mtx").string();
  EXPECT_NEAR(run_sensitivity(c).estimate, 1.0, 1e-14);

  write("cycle.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  c.graph_path = file("cycle.txt").string();
  c.query.full_rank_direction = true;
  const auto fr = run_sensitivity(c);
  EXPECT_NEAR(fr.estimate, apps::sensitivity_dense_reference(load_graph(c), c.query),
              1e-9 * fr.estimate);

  c.query = {apps::Measure::TotalCommunicability, 6, 0, 0, false};
  EXPECT_THROW(run_sensitivity(c), ArgumentError);
}

TEST_F(TempDir, SymmetrizeMatrixMarket)
{
  write("d.mtx", "%%MatrixMarket matrix coordinate real general\n3 3 1\n1 2 7.0\n");
  SensitivityConfig c;
  c.graph_path = file("d.mtx").string();
  EXPECT_EQ(load_graph(c).coeff(1, 0), 0.0);
  c.symmetrize = true;
  const auto A = load_graph(c);
  EXPECT_EQ(A.coeff(0, 1), 1.0);
  EXPECT_EQ(A.coeff(1, 0), 1.0);
}

TEST(Datasets, Presets)
{
  const auto *air = find_dataset("Air500");
  ASSERT_NE(air, nullptr);
  EXPECT_EQ(air->i, 256);
  EXPECT_EQ(air->j, 123);
  EXPECT_EQ(dataset_presets().size(), 5u);
  EXPECT_EQ(find_dataset("nope"), nullptr);
}

TEST(HeatCsv, Schema)
{
  apps::HeatFitConfig c;
  c.grid_points_per_dim = 10;
  c.sigma0 = c.sigma_ref;
  const auto t = heat_fit_csv(apps::heat_fit(c));
  EXPECT_EQ(t.header, (std::vector<std::string>{"iter", "sigma", "f_value"}));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0][0], "0");
}

TEST(CheckSuite, PassesForSeveralSeeds)
{
  for (std::uint64_t seed : {42u, 7u})
  {
    for (const auto &line : run_check_suite({seed, false}))
    {
      EXPECT_TRUE(line.passed) << "seed " << seed << ": " << line.name << " " << line.detail;
    }
  }
}

TEST(CheckSuite, MutationFailsSpanProperty)
{
  const auto lines = run_check_suite({42, true});
  const auto it = std::find_if(lines.begin(), lines.end(),
                               [](const CheckLine &l) { return l.name == "span-property"; });
  ASSERT_NE(it, lines.end());
  EXPECT_FALSE(it->passed);
}

TEST_F(TempDir, PlotStructure)
{
  write("two.csv", "method,k,rel_error\na,1,1\na,2,0.1\nb,1,0.5\nb,2,0.01\n");
  emit_plot(file("two.csv"), file("two.svg"));
  std::ifstream in(file("two.svg"));
  const std::string svg((std::istreambuf_iterator<char>(in)), {});
  std::size_t count = 0;
  for (std::size_t p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1))
  {
    ++count;
  }
  EXPECT_EQ(count, 2u);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  EXPECT_NE(svg.find(">a</text>"), std::string::npos);
}

TEST_F(TempDir, PlotConstantSeriesIsHorizontal)
{
  write("c.csv", "method,k,rel_error\nm,1,0.001\nm,2,0.001\nm,3,0.001\n");
  const auto series = series_from_csv(read_csv(file("c.csv")));
  const std::string svg = render_svg(series, "k", "e");
  const std::smatch m = [&] {
    std::smatch out;
    std::regex_search(svg, out, std::regex("points=\"([^\"]*)\""));
    return out;
  }();
  ASSERT_TRUE(m.ready() && !m.empty());
  std::istringstream pts(m[1].str());
  std::string pt;
  std::set<std::string> ys;
  while (pts >> pt)
  {
    ys.insert(pt.substr(pt.find(',') + 1));
  }
  EXPECT_EQ(ys.size(), 1u);
}

TEST_F(TempDir, PlotRejectsEmptyAndMalformed)
{
  write("empty.csv", "method,k,rel_error\n");
  EXPECT_THROW(emit_plot(file("empty.csv"), file("empty.svg")), ParseError);
  EXPECT_FALSE(fs::exists(file("empty.svg")));
  write("bad.csv", "method,k,rel_error\nm,1,abc\n");
  EXPECT_THROW(emit_plot(file("bad.csv"), file("bad.svg")), ParseError);
  write("odd.csv", "x,y\n1,2\n");
  EXPECT_THROW(emit_plot(file("odd.csv"), file("odd.svg")), ParseError);
  write("heat.csv", "iter,sigma,f_value\n0,1,0.1\n1,0.9,0.01\n");
  EXPECT_NO_THROW(emit_plot(file("heat.csv"), file("heat.svg")));
}

}  // namespace
}  // namespace lfab
