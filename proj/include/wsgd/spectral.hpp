#pragma once

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <random>

#include "wsgd/error.hpp"
#include "wsgd/toeplitz.hpp"
#include "wsgd/weights.hpp"

namespace wsgd {

/// Summary of a uniform sampling of f(alpha; x) over [0, pi].
struct GeneratingFunctionScan {
  double alpha = 0;
  ShiftScheme scheme{};
  Index samples = 0;
  double min_value = 0, max_value = 0;
  double argmin = 0, argmax = 0;

  /// Values within 1e-14 of zero count as zero, so roundoff around an identically zero symbol is ignored.
  bool sign_change() const { return min_value < -1e-14 && max_value > 1e-14; }
};

/// Closed-form generating function of the symmetric part (A + A^T)/2 on [0, pi].
template <typename Scalar = double>
Scalar generating_function(Scalar alpha, ShiftScheme scheme, Scalar x) {
  using std::cos;
  using std::pow;
  using std::sin;
  const Scalar pi = Scalar(EIGEN_PI);
  if (x < Scalar(0) || x > pi) throw ParameterError("generating_function: x must lie in [0, pi]");
  if (x == Scalar(0)) return Scalar(0);
  const Scalar a = alpha;
  const Scalar amp = pow(Scalar(2) * sin(x / Scalar(2)), a);
  const Scalar th = a / Scalar(2) * (x - pi);
  switch (scheme.kind) {
    case ShiftKind::P1Q0:
      return amp * (a / Scalar(2) * cos(th - x) + (Scalar(2) - a) / Scalar(2) * cos(th));
    case ShiftKind::P1QM1:
      return amp * (a / Scalar(2) * sin(th) * sin(x) + cos(th) * cos(x));
    case ShiftKind::PQR: {
      const Scalar a2 = a * a;
      // These are the lambdas themselves: the conjugate pair sums to twice the real part.
      const Scalar c1 = Scalar(5) * a / Scalar(24) + a2 / Scalar(8);
      const Scalar c2 = Scalar(1) + a / Scalar(12) - a2 / Scalar(4);
      const Scalar c3 = Scalar(-7) * a / Scalar(24) + a2 / Scalar(8);
      return amp * (c1 * cos(th - x) + c2 * cos(th) + c3 * cos(th + x));
    }
    default:
      throw ParameterError("generating_function: scheme must be p1q0, p1qm1 or pqr");
  }
}

/// Uniform scan with `samples` points including both endpoints.
template <typename Scalar = double>
GeneratingFunctionScan scan_sign(Scalar alpha, ShiftScheme scheme, Index samples) {
  if (samples < 64) throw ParameterError("scan_sign: at least 64 samples");
  GeneratingFunctionScan s;
  s.alpha = double(alpha);
  s.scheme = scheme;
  s.samples = samples;
  s.min_value = std::numeric_limits<double>::infinity();
  s.max_value = -std::numeric_limits<double>::infinity();
  const Scalar pi = Scalar(EIGEN_PI);
  for (Index k = 0; k < samples; ++k) {
    const Scalar x = k == samples - 1 ? pi : pi * Scalar(k) / Scalar(samples - 1);
    const double f = double(generating_function<Scalar>(alpha, scheme, x));
    if (f < s.min_value) s.min_value = f, s.argmin = double(x);
    if (f > s.max_value) s.max_value = f, s.argmax = double(x);
  }
  return s;
}

struct DefinitenessResult {
  bool negative_definite = false;
  Index failing_minor = -1;  ///< 1-based order of the first non-positive leading minor of -(T+T^T)/2
};

/// Cholesky of S = -(T + T^T)/2 in the natural order. Success certifies T negative definite;
/// otherwise the leading minor that broke is reported.
template <typename Scalar>
DefinitenessResult certify_negative_definite(const ToeplitzOperator<Scalar>& T) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Matrix D = T.toDense();
  const Matrix S = -(D + D.transpose()) / Scalar(2);
  const Index n = S.rows();
  Matrix L = Matrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    const Scalar d = S(j, j) - L.row(j).head(j).squaredNorm();
    if (!(d > Scalar(0))) return {false, j + 1};
    using std::sqrt;
    L(j, j) = sqrt(d);
    for (Index i = j + 1; i < n; ++i)
      L(i, j) = (S(i, j) - L.row(i).head(j).dot(L.row(j).head(j))) / L(j, j);
  }
  return {true, -1};
}

/// Checks f_min <= v^T ((T + T^T)/2) v <= f_max for random unit vectors,
/// with [f_min, f_max] from a 4096-point scan widened by 1e-10.
template <typename Scalar>
bool rayleigh_bound_check(const ToeplitzOperator<Scalar>& T, Scalar alpha, ShiftScheme scheme,
                          int trials, unsigned seed = 12345u) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const auto scan = scan_sign<Scalar>(alpha, scheme, 4096);
  const double lo = scan.min_value - 1e-10, hi = scan.max_value + 1e-10;
  const Matrix D = T.toDense();
  const Matrix S = (D + D.transpose()) / Scalar(2);
  const Index n = S.rows();
  if (n == 1) return double(S(0, 0)) >= lo && double(S(0, 0)) <= hi;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  for (int t = 0; t < trials; ++t) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v[i] = Scalar(nd(rng));
    v.normalize();
    const double r = double(v.dot(S * v));
    if (r < lo || r > hi) return false;
  }
  return true;
}

}  // namespace wsgd
