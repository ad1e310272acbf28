// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "lfab/linalg/sparse.hpp"

namespace lfab
{

/// Counter-based 64-bit generator: the n-th output is splitmix64(seed + n * golden). Satisfies
/// UniformRandomBitGenerator so it plugs into <random> distributions.
class Rng
{
public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 42) : seed_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()()
  {
    std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double normal() { return normal_(*this); }
  double uniform() { return uniform_(*this); }
  Index index(Index n) { return std::uniform_int_distribution<Index>(0, n - 1)(*this); }

private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  std::normal_distribution<double> normal_;
  std::uniform_real_distribution<double> uniform_;
};

namespace linalg
{

template <typename S>
S random_scalar(Rng &rng)
{
  if constexpr (is_complex_v<S>)
  {
    const double re = rng.normal();
    return S(re, rng.normal());
  }
  else
  {
    return rng.normal();
  }
}

/// Standard normal entries (real and imaginary parts independent for complex S).
template <typename S>
Vector<S> randn_vector(Index n, Rng &rng)
{
  Vector<S> v(n);
  for (Index i = 0; i < n; ++i)
  {
    v[i] = random_scalar<S>(rng);
  }
  return v;
}

template <typename S>
DenseMatrix<S> randn_dense(Index rows, Index cols, Rng &rng)
{
  DenseMatrix<S> m(rows, cols);
  for (Index j = 0; j < cols; ++j)
  {
    for (Index i = 0; i < rows; ++i)
    {
      m(i, j) = random_scalar<S>(rng);
    }
  }
  return m;
}

/// Each entry present independently with probability `density`, normal values scaled by scale.
template <typename S>
SparseMatrix<S> random_sparse(Index rows, Index cols, double density, Rng &rng,
                              double scale = 1.0)
{
  SparseBuilder<S> builder(rows, cols);
  for (Index i = 0; i < rows; ++i)
  {
    for (Index j = 0; j < cols; ++j)
    {
      if (rng.uniform() < density)
      {
        builder.add(i, j, S(scale) * random_scalar<S>(rng));
      }
    }
  }
  return std::move(builder).build();
}

/// Erdos-Renyi adjacency matrix without self loops.
inline SparseMatrix<Real> random_graph(Index n, double p, Rng &rng, bool directed)
{
  SparseBuilder<Real> builder(n, n);
  for (Index i = 0; i < n; ++i)
  {
    for (Index j = directed ? 0 : i + 1; j < n; ++j)
    {
      if (i != j && rng.uniform() < p)
      {
        builder.add(i, j, 1.0);
        if (!directed)
        {
          builder.add(j, i, 1.0);
        }
      }
    }
  }
  return std::move(builder).build(DuplicatePolicy::ClampOne);
}

}  // namespace linalg

}  // namespace lfab
