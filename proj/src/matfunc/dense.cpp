// Copyright (c) The lfab authors.
// SPDX-License-Identifier: Apache-2.0

#include "lfab/matfunc/dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/LU>

namespace lfab::matfunc
{

namespace
{

// Pade-13 coefficients for exp, and the largest 1-norm for which the approximant is accurate
// to unit roundoff without scaling.
constexpr double kPade13[14] = {64764752532480000.0,
                                32382376266240000.0,
                                7771770303897600.0,
                                1187353796428800.0,
                                129060195264000.0,
                                10559470521600.0,
                                670442572800.0,
                                33522128640.0,
                                1323241920.0,
                                40840800.0,
                                960960.0,
                                16380.0,
                                182.0,
                                1.0};
constexpr double kTheta13 = 5.371920351148152;

constexpr int kSqrtMaxIterations = 50;
constexpr double kSqrtStepTol = 1.0e-14;
constexpr double kSqrtResidualTol = 1.0e-10;

template <typename S>
void require_square(const DenseMatrix<S> &H, const char *who)
{
  if (H.rows() != H.cols())
  {
    throw DimensionError(std::string(who) + ": matrix is " + std::to_string(H.rows()) + "x" +
                         std::to_string(H.cols()) + ", expected square");
  }
}

template <typename S>
double log_abs_det(const Eigen::PartialPivLU<DenseMatrix<S>> &lu)
{
  const auto &m = lu.matrixLU();
  double s = 0.0;
  for (Index i = 0; i < m.rows(); ++i)
  {
    s += std::log(std::abs(m(i, i)));
  }
  return s;
}

}  // namespace

template <typename S>
DenseMatrix<S> expm(const DenseMatrix<S> &H)
{
  require_square(H, "expm");
  if (!linalg::all_finite(H))
  {
    throw ArgumentError("expm: non-finite entries");
  }
  const Index n = H.rows();
  const DenseMatrix<S> I = DenseMatrix<S>::Identity(n, n);
  const double norm1 = n == 0 ? 0.0 : static_cast<double>(H.cwiseAbs().colwise().sum().maxCoeff());
  if (norm1 == 0.0)
  {
    return I;
  }

  int s = 0;
  if (norm1 > kTheta13)
  {
    s = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
  }
  const DenseMatrix<S> A = H * S(std::ldexp(1.0, -s));
  const auto &b = kPade13;

  const DenseMatrix<S> A2 = A * A;
  const DenseMatrix<S> A4 = A2 * A2;
  const DenseMatrix<S> A6 = A4 * A2;

  DenseMatrix<S> inner = S(b[13]) * A6 + S(b[11]) * A4 + S(b[9]) * A2;
  DenseMatrix<S> U = A6 * inner;
  U += S(b[7]) * A6 + S(b[5]) * A4 + S(b[3]) * A2 + S(b[1]) * I;
  U = A * U;

  inner = S(b[12]) * A6 + S(b[10]) * A4 + S(b[8]) * A2;
  DenseMatrix<S> V = A6 * inner;
  V += S(b[6]) * A6 + S(b[4]) * A4 + S(b[2]) * A2 + S(b[0]) * I;

  DenseMatrix<S> R = (V - U).partialPivLu().solve(V + U);
  for (int j = 0; j < s; ++j)
  {
    R = R * R;
  }
  return R;
}

template <typename S>
DenseMatrix<S> sqrtm(const DenseMatrix<S> &H)
{
  require_square(H, "sqrtm");
  if (!linalg::all_finite(H))
  {
    throw ArgumentError("sqrtm: non-finite entries");
  }
  const Index n = H.rows();
  if (n == 0)
  {
    return H;
  }

  DenseMatrix<S> Y = H;
  DenseMatrix<S> Z = DenseMatrix<S>::Identity(n, n);
  bool scale = true;
  bool converged = false;
  double prev_step = std::numeric_limits<double>::infinity();

  for (int it = 0; it < kSqrtMaxIterations; ++it)
  {
    const Eigen::PartialPivLU<DenseMatrix<S>> luY(Y), luZ(Z);
    double mu = 1.0;
    if (scale)
    {
      mu = std::exp(-(log_abs_det(luY) + log_abs_det(luZ)) / (2.0 * static_cast<double>(n)));
      if (!std::isfinite(mu))
      {
        mu = 1.0;
      }
    }
    const DenseMatrix<S> Yinv = luY.inverse();
    const DenseMatrix<S> Zinv = luZ.inverse();
    DenseMatrix<S> Ynext = S(0.5 * mu) * Y + S(0.5 / mu) * Zinv;
    DenseMatrix<S> Znext = S(0.5 * mu) * Z + S(0.5 / mu) * Yinv;
    if (!linalg::all_finite(Ynext) || !linalg::all_finite(Znext))
    {
      throw ConvergenceError("sqrtm: iteration produced non-finite entries (eigenvalue on or "
                             "near the closed negative real axis?)");
    }

    const double step = (Ynext - Y).norm() / std::max(Y.norm(), 1e-300);
    Y = std::move(Ynext);
    Z = std::move(Znext);
    if (converged)
    {
      // One extra sweep after convergence so first-order perturbations (complex step) settle.
      break;
    }
    if (step < 1e-2)
    {
      scale = false;
    }
    // Either the step hit the tolerance, or it stalled at the rounding floor.
    if (step <= kSqrtStepTol || (step <= 1e-10 && step > 0.5 * prev_step))
    {
      converged = true;
    }
    prev_step = step;
  }
  if (!converged)
  {
    throw ConvergenceError("sqrtm: Denman-Beavers iteration did not converge in " +
                           std::to_string(kSqrtMaxIterations) + " steps");
  }
  const double residual = (Y * Y - H).norm();
  if (residual > kSqrtResidualTol * H.norm())
  {
    throw ConvergenceError("sqrtm: residual ||X^2 - H||_F / ||H||_F = " +
                           std::to_string(residual / H.norm()) + " exceeds 1e-10");
  }
  return Y;
}

template <typename S>
DenseMatrix<S> polym(const DenseMatrix<S> &H, const std::vector<double> &coefficients)
{
  require_square(H, "polym");
  if (coefficients.empty())
  {
    throw ArgumentError("polym: coefficient list is empty");
  }
  const Index n = H.rows();
  DenseMatrix<S> P = S(coefficients.back()) * DenseMatrix<S>::Identity(n, n);
  for (std::size_t j = coefficients.size() - 1; j-- > 0;)
  {
    P = P * H;
    P.diagonal().array() += S(coefficients[j]);
  }
  return P;
}

template <typename S>
DenseMatrix<S> matfun(const DenseMatrix<S> &H, const FunctionSpec &f)
{
  switch (f.kind())
  {
    case FunctionSpec::Kind::Exp:
      return expm<S>(S(f.time_scale()) * H);
    case FunctionSpec::Kind::Sqrt:
      return sqrtm<S>(H);
    case FunctionSpec::Kind::Polynomial:
      return polym<S>(H, f.coefficients());
  }
  throw ArgumentError("matfun: unknown function kind");
}

template <typename S>
S divided_difference(const FunctionSpec &f, S x, S y)
{
  using std::abs;
  const double gap = abs(x - y);
  const double scale = std::max({abs(x), abs(y), 1.0});
  if (gap > 1.0e-7 * scale)
  {
    if constexpr (!is_complex_v<S>)
    {
      if (f.kind() == FunctionSpec::Kind::Exp)
      {
        // e^{tx} - e^{ty} = -e^{t hi} expm1(t (lo - hi)) without cancellation.
        const double t = f.time_scale();
        const S hi = t * x >= t * y ? x : y;
        const S lo = t * x >= t * y ? y : x;
        return -std::exp(t * hi) * std::expm1(t * (lo - hi)) / (hi - lo);
      }
    }
    return (f.value(x) - f.value(y)) / (x - y);
  }
  return f.derivative((x + y) / S(2));
}

ChebyshevErrorEstimate chebyshev_uniform_error(const std::function<double(double)> &g,
                                               const SpectralInterval &interval, int degree)
{
  if (degree < 0)
  {
    throw ArgumentError("chebyshev_uniform_error: degree must be nonnegative");
  }
  const double lebesgue = 1.0 + (2.0 / M_PI) * std::log(degree + 1.0) + 1.0;
  if (interval.lo == interval.hi)
  {
    return {0.0, lebesgue};
  }

  const int m = degree + 1;
  const double mid = 0.5 * (interval.hi + interval.lo);
  const double half = 0.5 * (interval.hi - interval.lo);

  // Interpolate at the Chebyshev points of the first kind; coefficients by the discrete
  // cosine transform.
  std::vector<double> values(m), coeffs(m, 0.0);
  for (int j = 0; j < m; ++j)
  {
    values[j] = g(mid + half * std::cos(M_PI * (j + 0.5) / m));
  }
  for (int k = 0; k < m; ++k)
  {
    double s = 0.0;
    for (int j = 0; j < m; ++j)
    {
      s += values[j] * std::cos(M_PI * k * (j + 0.5) / m);
    }
    coeffs[k] = (k == 0 ? 1.0 : 2.0) * s / m;
  }

  constexpr int kGrid = 1000;
  double err = 0.0;
  for (int i = 0; i < kGrid; ++i)
  {
    const double t = -1.0 + 2.0 * i / (kGrid - 1);
    // Clenshaw recurrence for sum_k c_k T_k(t).
    double b1 = 0.0, b2 = 0.0;
    for (int k = m - 1; k >= 1; --k)
    {
      const double b0 = 2.0 * t * b1 - b2 + coeffs[k];
      b2 = b1;
      b1 = b0;
    }
    const double p = t * b1 - b2 + coeffs[0];
    err = std::max(err, std::abs(g(mid + half * t) - p));
  }
  return {err, lebesgue};
}

#define LFAB_INSTANTIATE(S)                                                            \
  template DenseMatrix<S> expm<S>(const DenseMatrix<S> &);                             \
  template DenseMatrix<S> sqrtm<S>(const DenseMatrix<S> &);                            \
  template DenseMatrix<S> polym<S>(const DenseMatrix<S> &, const std::vector<double> &); \
  template DenseMatrix<S> matfun<S>(const DenseMatrix<S> &, const FunctionSpec &);     \
  template S divided_difference<S>(const FunctionSpec &, S, S);

LFAB_INSTANTIATE(Real)
LFAB_INSTANTIATE(Complex)

#undef LFAB_INSTANTIATE

}  // namespace lfab::matfunc
