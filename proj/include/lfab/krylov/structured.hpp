// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "lfab/linalg/operator.hpp"
#include "lfab/linalg/orthog.hpp"
#include "lfab/matfunc/function.hpp"

namespace lfab::krylov
{

/// Torn basis of K(calA, [0; b]) for calA = [[A, E], [0, A]]: the basis vectors are the
/// columns of [U R; V]. U and V are orthonormal, R is strictly upper triangular.
///
/// After the bottom track becomes A-invariant, U keeps growing (see SeparateOrthonormalization)
/// and the extra rows of R are zero.
template <typename S>
struct StructuredKrylovBasis
{
  DenseMatrix<S> U;
  DenseMatrix<S> V;
  DenseMatrix<S> R;    // U.cols() x V.cols()
  DenseMatrix<S> AU;   // A U
  DenseMatrix<S> EV;   // E V
  DenseMatrix<S> VAV;  // V^* A V
  double beta0 = 0.0;  // ||b||; V^* b = beta0 e_1
  Index iterations = 0;
  bool bottom_breakdown = false;  // A V = V (V^* A V)
  bool top_deflated = false;      // at least one top direction was dependent
  bool exhausted = false;         // the block-diagonal projection is exact
};

/// Projected matrix [[Huu, Huv], [0, Hvv]] of calA onto diag(U, V). The zero block is implied.
template <typename S>
struct CompressedBlockMatrix
{
  DenseMatrix<S> Huu;
  DenseMatrix<S> Huv;
  DenseMatrix<S> Hvv;

  DenseMatrix<S> assemble() const;
};

enum class CompressedEvaluation
{
  /// f on the assembled block matrix with the dense kernels.
  Dense,
  /// For Hermitian A: f through the eigendecompositions of the Hermitian diagonal blocks, with
  /// divided differences for the coupling block. O(k^3) with a small constant.
  HermitianSpectral
};

struct SeparateOrthOptions
{
  double breakdown_tol = kDefaultBreakdownTol;
  /// Test hook: use g / alpha in the R update instead of g / beta. Produces a wrong basis;
  /// exists so the span check can be seen to fail.
  bool mutate_r_update = false;
};

/// Incremental separate orthonormalization. Each step costs one product with E and two with A:
/// E v and A v for the new bottom vector and A u for the new top vector. A w is recovered from
/// the AU cache, since w = U r.
///
/// Breakdowns:
///  - top direction dependent (alpha breakdown): R gains a column, U does not grow.
///  - bottom direction dependent (beta breakdown): K(A, b) is invariant. V freezes, and further
///    steps grow U by Gram-Schmidt over E V and then A U until span(U) is A-invariant and
///    contains E V, at which point the projection is exact.
template <typename S>
class SeparateOrthonormalization
{
public:
  SeparateOrthonormalization(LinearOperator<S> A, LinearOperator<S> E, const Vector<S> &b,
                             Index max_iterations, SeparateOrthOptions options = {});

  /// One iteration. Returns false, changing nothing, once the spaces stop growing or the
  /// iteration budget is used up.
  bool step();

  Index iterations() const noexcept { return iterations_; }
  Index top_dimension() const noexcept { return nu_; }
  Index bottom_dimension() const noexcept { return nv_; }
  bool bottom_breakdown() const noexcept { return bottom_breakdown_; }
  bool top_deflated() const noexcept { return top_deflated_; }
  bool exhausted() const noexcept { return exhausted_; }
  double beta0() const noexcept { return beta0_; }

  auto U() const { return U_.leftCols(nu_); }
  auto V() const { return V_.leftCols(nv_); }
  auto R() const { return R_.topLeftCorner(nu_, nv_); }

  /// Compressed matrix from the incrementally maintained projections.
  CompressedBlockMatrix<S> compressed() const;

  /// (v1, v2) = (U F12 beta0 e1, V F22 beta0 e1) with F = f(compressed).
  std::pair<Vector<S>, Vector<S>>
  approximate(const FunctionSpec &f,
              CompressedEvaluation mode = CompressedEvaluation::Dense) const;

  StructuredKrylovBasis<S> basis() const;

private:
  void append_v(const Vector<S> &v);
  void append_u(const Vector<S> &u);
  bool grow_top_closure();

  LinearOperator<S> A_;
  LinearOperator<S> E_;
  SeparateOrthOptions options_;
  Index max_iterations_;
  double beta0_;

  DenseMatrix<S> U_, V_, R_;
  DenseMatrix<S> AU_, AV_, EV_;
  DenseMatrix<S> UAU_, UEV_, VAV_;
  Index nu_ = 0;
  Index nv_ = 0;
  Index iterations_ = 0;
  Index closure_cursor_ = 0;
  bool bottom_breakdown_ = false;
  bool top_deflated_ = false;
  bool exhausted_ = false;
};

/// Runs k iterations (fewer on exhaustion) and returns the basis with its caches.
template <typename S>
StructuredKrylovBasis<S> separate_orthonormalization(const LinearOperator<S> &A,
                                                     const LinearOperator<S> &E,
                                                     const Vector<S> &b, Index k,
                                                     SeparateOrthOptions options = {});

/// Huu = U^* AU, Huv = U^* EV, Hvv = VAV; uses only the cached products.
template <typename S>
CompressedBlockMatrix<S> assemble_compressed(const StructuredKrylovBasis<S> &basis);

/// (v1, v2) from F = f([[Huu, Huv], [0, Hvv]]) and the bottom coordinates vb = V^* b.
template <typename S>
std::pair<Vector<S>, Vector<S>> evaluate_compressed(const CompressedBlockMatrix<S> &H,
                                                    const Eigen::Ref<const DenseMatrix<S>> &U,
                                                    const Eigen::Ref<const DenseMatrix<S>> &V,
                                                    const Vector<S> &vb, const FunctionSpec &f,
                                                    CompressedEvaluation mode =
                                                      CompressedEvaluation::Dense);

/// Block-diagonal projection onto diag(U, V) for arbitrary orthonormal U and V. Performs the
/// products with A and E explicitly.
template <typename S>
std::pair<Vector<S>, Vector<S>> project_and_evaluate(const LinearOperator<S> &A,
                                                     const LinearOperator<S> &E,
                                                     const Vector<S> &b, const FunctionSpec &f,
                                                     const DenseMatrix<S> &U,
                                                     const DenseMatrix<S> &V);

}  // namespace lfab::krylov
