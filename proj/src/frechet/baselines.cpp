// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/frechet/baselines.hpp"

#include <algorithm>

namespace lfab::frechet
{

namespace
{

void require_eps(double eps, const char *who)
{
  if (!(eps > 0.0) || !std::isfinite(eps))
  {
    throw ArgumentError(std::string(who) + ": eps must be positive and finite");
  }
}

void require_budget(Index k, const char *who)
{
  if (k < 1)
  {
    throw ArgumentError(std::string(who) + ": k must be at least 1");
  }
}

template <typename S>
void pad_to(std::vector<Vector<S>> &out, Index k_max)
{
  while (static_cast<Index>(out.size()) < k_max)
  {
    out.push_back(out.back());
  }
}

/// Complex operator A + i eps E built from real data.
LinearOperator<Complex> complex_shift(const FrechetProblem<Real> &p, double eps)
{
  return linalg::lazy_sum<Complex>(p.A.to_complex(), p.E.to_complex(), Complex(0.0, eps));
}

}  // namespace

template <typename S>
double default_fd_eps(const FrechetProblem<S> &problem)
{
  const double na = problem.A.frobenius_norm();
  const double ne = problem.E.frobenius_norm();
  if (ne == 0.0)
  {
    return 1.0e-5;
  }
  return std::clamp(1.0e-5 * std::max(na, 1.0e-300) / ne, 1.0e-10, 1.0e-2);
}

template <typename S>
std::vector<Vector<S>> fab_sweep(const LinearOperator<S> &A, const Vector<S> &b,
                                 const FunctionSpec &f, Index k_max,
                                 krylov::ArnoldiOptions options)
{
  require_budget(k_max, "fab_sweep");
  std::vector<Vector<S>> out;
  out.reserve(k_max);
  krylov::FabOptions<S> opts;
  opts.breakdown_tol = options.breakdown_tol;
  opts.inner = options.inner;
  opts.observer = [&out](Index, const Vector<S> &x) { out.push_back(x); };
  krylov::arnoldi_fAb<S>(A, b, f, k_max, opts);
  pad_to(out, k_max);
  return out;
}

template <typename S>
std::vector<Vector<S>> fd_arnoldi_sweep(const FrechetProblem<S> &problem, double eps,
                                        Index k_max, double breakdown_tol)
{
  problem.validate();
  require_eps(eps, "fd_arnoldi");
  const LinearOperator<S> A = problem.A;
  const auto base = fab_sweep<S>(A, problem.b, problem.f, k_max, {breakdown_tol});
  const auto shifted = fab_sweep<S>(linalg::lazy_sum<S>(A, problem.E, S(eps)), problem.b,
                                    problem.f, k_max, {breakdown_tol});
  std::vector<Vector<S>> out(k_max);
  for (Index k = 0; k < k_max; ++k)
  {
    out[k] = (shifted[k] - base[k]) / S(eps);
  }
  return out;
}

template <typename S>
std::vector<Vector<S>> cs_arnoldi_sweep(const FrechetProblem<S> &problem, double eps,
                                        Index k_max, double breakdown_tol)
{
  if constexpr (is_complex_v<S>)
  {
    throw ArgumentError("cs_arnoldi: the complex-step method needs real A, E and b");
  }
  else
  {
    problem.validate();
    require_eps(eps, "cs_arnoldi");
    const auto z = fab_sweep<Complex>(complex_shift(problem, eps), problem.b.template cast<Complex>(),
                                      problem.f, k_max, {breakdown_tol, InnerProduct::Bilinear});
    std::vector<Vector<S>> out(k_max);
    for (Index k = 0; k < k_max; ++k)
    {
      out[k] = z[k].imag() / eps;
    }
    return out;
  }
}

template <typename S>
Vector<S> fd_arnoldi(const FrechetProblem<S> &problem, double eps, Index k, double breakdown_tol)
{
  problem.validate();
  require_eps(eps, "fd_arnoldi");
  require_budget(k, "fd_arnoldi");
  const LinearOperator<S> A = problem.A;
  krylov::FabOptions<S> opts;
  opts.breakdown_tol = breakdown_tol;
  const auto base = krylov::arnoldi_fAb<S>(A, problem.b, problem.f, k, opts);
  const auto shifted = krylov::arnoldi_fAb<S>(linalg::lazy_sum<S>(A, problem.E, S(eps)),
                                              problem.b, problem.f, k, opts);
  return (shifted.approx - base.approx) / S(eps);
}

template <typename S>
Vector<S> cs_arnoldi(const FrechetProblem<S> &problem, double eps, Index k, double breakdown_tol)
{
  if constexpr (is_complex_v<S>)
  {
    throw ArgumentError("cs_arnoldi: the complex-step method needs real A, E and b");
  }
  else
  {
    problem.validate();
    require_eps(eps, "cs_arnoldi");
    require_budget(k, "cs_arnoldi");
    krylov::FabOptions<Complex> opts;
    opts.breakdown_tol = breakdown_tol;
    opts.inner = InnerProduct::Bilinear;
    const auto z = krylov::arnoldi_fAb<Complex>(complex_shift(problem, eps),
                                                problem.b.template cast<Complex>(), problem.f, k,
                                                opts);
    return z.approx.imag() / eps;
  }
}

#define LFAB_INSTANTIATE(S)                                                                   \
  template double default_fd_eps<S>(const FrechetProblem<S> &);                               \
  template Vector<S> fd_arnoldi<S>(const FrechetProblem<S> &, double, Index, double);         \
  template Vector<S> cs_arnoldi<S>(const FrechetProblem<S> &, double, Index, double);         \
  template std::vector<Vector<S>> fd_arnoldi_sweep<S>(const FrechetProblem<S> &, double,      \
                                                      Index, double);                         \
  template std::vector<Vector<S>> cs_arnoldi_sweep<S>(const FrechetProblem<S> &, double,      \
                                                      Index, double);                         \
  template std::vector<Vector<S>> fab_sweep<S>(const LinearOperator<S> &, const Vector<S> &,  \
                                               const FunctionSpec &, Index,                   \
                                               krylov::ArnoldiOptions);

LFAB_INSTANTIATE(Real)
LFAB_INSTANTIATE(Complex)

#undef LFAB_INSTANTIATE

}  // namespace lfab::frechet
