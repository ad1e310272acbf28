// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>

#include "lfab/linalg/sparse.hpp"

namespace lfab::linalg
{

/// Reads a Matrix Market coordinate file (real, integer, pattern or complex field; general,
/// symmetric, skew-symmetric or hermitian symmetry). Symmetric storage is expanded, pattern
/// entries become 1 and duplicates are summed. `base` is the index base of the file (1 per the
/// Matrix Market standard).
template <typename S>
SparseMatrix<S> read_matrix_market(std::istream &in, int base = 1);
template <typename S>
SparseMatrix<S> read_matrix_market(const std::filesystem::path &path, int base = 1);

/// Writes a general coordinate file with 17 significant digits, 1-based.
template <typename S>
void write_matrix_market(std::ostream &out, const SparseMatrix<S> &A);
template <typename S>
void write_matrix_market(const std::filesystem::path &path, const SparseMatrix<S> &A);

/// Unweighted adjacency matrix from whitespace-separated integer pairs, one edge per line.
/// Lines starting with '#' or '%' are comments. Repeated edges clamp to weight 1; undirected
/// graphs store both (i, j) and (j, i). n_nodes = 0 infers the size from the largest index.
SparseMatrix<Real> read_edge_list(std::istream &in, Index n_nodes, bool directed, int base = 0);
SparseMatrix<Real> read_edge_list(const std::filesystem::path &path, Index n_nodes,
                                  bool directed, int base = 0);

}  // namespace lfab::linalg
