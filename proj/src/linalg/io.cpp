// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/linalg/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace lfab::linalg
{

namespace
{

std::string lower(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool is_blank(const std::string &line)
{
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

enum class Field
{
  Real,
  Integer,
  Pattern,
  Complex
};

enum class Symmetry
{
  General,
  Symmetric,
  SkewSymmetric,
  Hermitian
};

std::ifstream open_input(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ParseError("cannot open " + path.string(), 0);
  }
  return in;
}

std::string format_scalar(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

template <typename S>
SparseMatrix<S> read_matrix_market(std::istream &in, int base)
{
  if (base != 0 && base != 1)
  {
    throw ArgumentError("read_matrix_market: base must be 0 or 1");
  }
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line))
  {
    throw ParseError("empty file", 1);
  }
  ++lineno;

  std::istringstream header(line);
  std::string banner, object, format, field_s, symmetry_s;
  header >> banner >> object >> format >> field_s >> symmetry_s;
  if (banner != "%%MatrixMarket" || lower(object) != "matrix")
  {
    throw ParseError("missing %%MatrixMarket matrix banner", lineno);
  }
  if (lower(format) != "coordinate")
  {
    throw ParseError("only coordinate format is supported, got '" + format + "'", lineno);
  }

  Field field;
  field_s = lower(field_s);
  if (field_s == "real" || field_s == "double")
    field = Field::Real;
  else if (field_s == "integer")
    field = Field::Integer;
  else if (field_s == "pattern")
    field = Field::Pattern;
  else if (field_s == "complex")
    field = Field::Complex;
  else
    throw ParseError("unsupported field '" + field_s + "'", lineno);

  if (field == Field::Complex && !is_complex_v<S>)
  {
    throw ParseError("complex matrix cannot be read into a real matrix", lineno);
  }

  Symmetry symmetry;
  symmetry_s = lower(symmetry_s);
  if (symmetry_s == "general")
    symmetry = Symmetry::General;
  else if (symmetry_s == "symmetric")
    symmetry = Symmetry::Symmetric;
  else if (symmetry_s == "skew-symmetric")
    symmetry = Symmetry::SkewSymmetric;
  else if (symmetry_s == "hermitian")
    symmetry = Symmetry::Hermitian;
  else
    throw ParseError("unsupported symmetry '" + symmetry_s + "'", lineno);

  // Skip comments to the size line.
  long long rows = -1, cols = -1, nnz = -1;
  while (std::getline(in, line))
  {
    ++lineno;
    if (line.empty() || line[0] == '%' || is_blank(line))
    {
      continue;
    }
    std::istringstream sz(line);
    if (!(sz >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0)
    {
      throw ParseError("malformed size line", lineno);
    }
    break;
  }
  if (rows < 0)
  {
    throw ParseError("missing size line", lineno);
  }
  if (symmetry != Symmetry::General && rows != cols)
  {
    throw ParseError("symmetric storage requires a square matrix", lineno);
  }

  SparseBuilder<S> builder(rows, cols);
  builder.reserve(static_cast<std::size_t>(symmetry == Symmetry::General ? nnz : 2 * nnz));
  long long read = 0;
  while (read < nnz && std::getline(in, line))
  {
    ++lineno;
    if (line.empty() || line[0] == '%' || is_blank(line))
    {
      continue;
    }
    std::istringstream entry(line);
    long long i = 0, j = 0;
    if (!(entry >> i >> j))
    {
      throw ParseError("malformed entry", lineno);
    }
    S value(1);
    if (field == Field::Real || field == Field::Integer)
    {
      double v;
      if (!(entry >> v))
      {
        throw ParseError("missing value", lineno);
      }
      value = S(v);
    }
    else if (field == Field::Complex)
    {
      double re, im;
      if (!(entry >> re >> im))
      {
        throw ParseError("missing complex value", lineno);
      }
      if constexpr (is_complex_v<S>)
      {
        value = S(re, im);
      }
    }
    i -= base;
    j -= base;
    if (i < 0 || i >= rows || j < 0 || j >= cols)
    {
      throw ParseError("index (" + std::to_string(i + base) + ", " + std::to_string(j + base) +
                         ") out of range",
                       lineno);
    }
    builder.add(i, j, value);
    if (i != j)
    {
      switch (symmetry)
      {
        case Symmetry::General:
          break;
        case Symmetry::Symmetric:
          builder.add(j, i, value);
          break;
        case Symmetry::SkewSymmetric:
          builder.add(j, i, -value);
          break;
        case Symmetry::Hermitian:
          if constexpr (is_complex_v<S>)
          {
            builder.add(j, i, std::conj(value));
          }
          else
          {
            builder.add(j, i, value);
          }
          break;
      }
    }
    ++read;
  }
  if (read < nnz)
  {
    throw ParseError("expected " + std::to_string(nnz) + " entries, found " +
                       std::to_string(read),
                     lineno);
  }
  return std::move(builder).build(DuplicatePolicy::Sum);
}

template <typename S>
SparseMatrix<S> read_matrix_market(const std::filesystem::path &path, int base)
{
  auto in = open_input(path);
  return read_matrix_market<S>(in, base);
}

template <typename S>
void write_matrix_market(std::ostream &out, const SparseMatrix<S> &A)
{
  out << "%%MatrixMarket matrix coordinate " << (is_complex_v<S> ? "complex" : "real")
      << " general\n";
  out << A.rows() << ' ' << A.cols() << ' ' << A.nnz() << '\n';
  const auto rp = A.row_ptr();
  const auto ci = A.col_idx();
  const auto va = A.values();
  for (Index i = 0; i < A.rows(); ++i)
  {
    for (Index p = rp[i]; p < rp[i + 1]; ++p)
    {
      out << (i + 1) << ' ' << (ci[p] + 1) << ' ';
      if constexpr (is_complex_v<S>)
      {
        out << format_scalar(va[p].real()) << ' ' << format_scalar(va[p].imag());
      }
      else
      {
        out << format_scalar(va[p]);
      }
      out << '\n';
    }
  }
}

template <typename S>
void write_matrix_market(const std::filesystem::path &path, const SparseMatrix<S> &A)
{
  std::ofstream out(path);
  if (!out)
  {
    throw Error("cannot write " + path.string());
  }
  write_matrix_market(out, A);
}

SparseMatrix<Real> read_edge_list(std::istream &in, Index n_nodes, bool directed, int base)
{
  if (base != 0 && base != 1)
  {
    throw ArgumentError("read_edge_list: base must be 0 or 1");
  }
  if (n_nodes < 0)
  {
    throw ArgumentError("read_edge_list: negative node count");
  }
  std::vector<std::pair<Index, Index>> edges;
  std::string line;
  std::size_t lineno = 0;
  Index largest = -1;
  while (std::getline(in, line))
  {
    ++lineno;
    if (line.empty() || line[0] == '#' || line[0] == '%' || is_blank(line))
    {
      continue;
    }
    std::istringstream entry(line);
    long long i, j;
    if (!(entry >> i >> j))
    {
      throw ParseError("expected two node indices", lineno);
    }
    i -= base;
    j -= base;
    if (i < 0 || j < 0)
    {
      throw ParseError("negative node index", lineno);
    }
    if (n_nodes > 0 && (i >= n_nodes || j >= n_nodes))
    {
      throw ParseError("node index " + std::to_string(std::max(i, j) + base) +
                         " exceeds node count " + std::to_string(n_nodes),
                       lineno);
    }
    largest = std::max<Index>(largest, std::max(i, j));
    edges.emplace_back(i, j);
  }

  const Index n = n_nodes > 0 ? n_nodes : largest + 1;
  SparseBuilder<Real> builder(n, n);
  builder.reserve(directed ? edges.size() : 2 * edges.size());
  for (const auto &[i, j] : edges)
  {
    builder.add(i, j, 1.0);
    if (!directed)
    {
      builder.add(j, i, 1.0);
    }
  }
  return std::move(builder).build(DuplicatePolicy::ClampOne);
}

SparseMatrix<Real> read_edge_list(const std::filesystem::path &path, Index n_nodes,
                                  bool directed, int base)
{
  auto in = open_input(path);
  return read_edge_list(in, n_nodes, directed, base);
}

template SparseMatrix<Real> read_matrix_market<Real>(std::istream &, int);
template SparseMatrix<Complex> read_matrix_market<Complex>(std::istream &, int);
template SparseMatrix<Real> read_matrix_market<Real>(const std::filesystem::path &, int);
template SparseMatrix<Complex> read_matrix_market<Complex>(const std::filesystem::path &, int);
template void write_matrix_market<Real>(std::ostream &, const SparseMatrix<Real> &);
template void write_matrix_market<Complex>(std::ostream &, const SparseMatrix<Complex> &);
template void write_matrix_market<Real>(const std::filesystem::path &,
                                        const SparseMatrix<Real> &);
template void write_matrix_market<Complex>(const std::filesystem::path &,
                                           const SparseMatrix<Complex> &);

}  // namespace lfab::linalg
