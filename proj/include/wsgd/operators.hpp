#pragma once

#include <Eigen/Core>

#include <cmath>
#include <utility>

#include "wsgd/error.hpp"
#include "wsgd/toeplitz.hpp"
#include "wsgd/weights.hpp"

namespace wsgd {

/// Nodal values on a uniform grid x_k = a + k h, k = 0..N.
template <typename Scalar>
struct GridFunction1D {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Vector values;
  Scalar a = Scalar(0);
  Scalar b = Scalar(1);

  GridFunction1D() = default;
  GridFunction1D(Vector v, Scalar a_, Scalar b_) : values(std::move(v)), a(a_), b(b_) {
    if (values.size() < 3) throw ParameterError("grid function needs N >= 2");
    if (!(b > a)) throw ParameterError("grid function needs b > a");
  }

  /// Sample f at the N+1 nodes.
  template <typename F>
  static GridFunction1D sample(F&& f, Scalar a, Scalar b, Index N) {
    if (N < 2) throw ParameterError("grid function needs N >= 2");
    Vector v(N + 1);
    const Scalar h = (b - a) / Scalar(N);
    for (Index k = 0; k <= N; ++k) v[k] = f(a + Scalar(k) * h);
    return GridFunction1D(std::move(v), a, b);
  }

  Index N() const { return values.size() - 1; }
  Scalar h() const { return (b - a) / Scalar(N()); }
  Scalar x(Index k) const { return a + Scalar(k) * h(); }
};

/// Toeplitz matrix of order n with entry (i, j) = w_{i-j+lead}.
template <typename Scalar>
ToeplitzOperator<Scalar> assemble_toeplitz(const WeightSequence<Scalar>& w, Index n) {
  if (n < 1) throw ParameterError("matrix order must be positive");
  const int s = w.lead();
  typename ToeplitzOperator<Scalar>::Vector col(n), row(n);
  for (Index k = 0; k < n; ++k) {
    col[k] = w[k + s];
    row[k] = w[s - k];
  }
  return ToeplitzOperator<Scalar>(std::move(col), std::move(row));
}

/// The second-order matrix: w_1 on the diagonal, w_0 above it, w_{k+1} on the k-th subdiagonal.
template <typename Scalar = double>
ToeplitzOperator<Scalar> assemble_wsgd_matrix(Scalar alpha, ShiftScheme scheme, Index n) {
  if (n < 2) throw ParameterError("assemble_wsgd_matrix: n >= 2 required");
  return assemble_toeplitz(wsgd2_weights<Scalar>(alpha, scheme, n + 2), n);
}

/// The third-order matrix for shifts (1,0,-1).
template <typename Scalar = double>
ToeplitzOperator<Scalar> assemble_3wsgd_matrix(Scalar alpha, Index n) {
  if (n < 3) throw ParameterError("assemble_3wsgd_matrix: n >= 3 required");
  return assemble_toeplitz(wsgd3_weights<Scalar>(alpha, n + 2), n);
}

/// Matrix for any supported scheme, order n.
template <typename Scalar = double>
ToeplitzOperator<Scalar> assemble_matrix(Scalar alpha, ShiftScheme scheme, Index n) {
  return assemble_toeplitz(weights<Scalar>(alpha, scheme, n + 2), n);
}

/// Dense (N-1) x (N+1) matrix of the left-sided stencil: row i-1 holds the
/// coefficients of u_0..u_N at interior node i. No 1/h^alpha factor.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> left_stencil_matrix(
    const WeightSequence<Scalar>& w, Index N) {
  if (N < 2) throw ParameterError("stencil needs N >= 2");
  const int s = w.lead();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> L =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(N - 1, N + 1);
  for (Index i = 1; i < N; ++i)
    for (Index m = 0; m <= i + s; ++m) {
      const Index node = i - m + s;
      if (node <= N) L(i - 1, node) += w[m];
    }
  return L;
}

/// Right-sided counterpart: the left stencil mirrored about the midpoint.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> right_stencil_matrix(
    const WeightSequence<Scalar>& w, Index N) {
  return left_stencil_matrix(w, N).rowwise().reverse().colwise().reverse();
}

/// h^{-alpha} sum_k w_k u_{i-k+1} at the interior nodes i = 1..N-1.
template <typename Scalar>
typename GridFunction1D<Scalar>::Vector apply_left(const GridFunction1D<Scalar>& u,
                                                  const WeightSequence<Scalar>& w) {
  const Index N = u.N();
  const int s = w.lead();
  typename GridFunction1D<Scalar>::Vector r(N - 1);
  for (Index i = 1; i < N; ++i) {
    Scalar acc(0);
    for (Index m = 0; m <= i + s; ++m) {
      const Index node = i - m + s;
      if (node <= N) acc += w[m] * u.values[node];
    }
    r[i - 1] = acc;
  }
  using std::pow;
  return r / pow(u.h(), w.alpha);
}

/// h^{-alpha} sum_k w_k u_{i+k-1} at the interior nodes i = 1..N-1.
template <typename Scalar>
typename GridFunction1D<Scalar>::Vector apply_right(const GridFunction1D<Scalar>& u,
                                                   const WeightSequence<Scalar>& w) {
  const Index N = u.N();
  const int s = w.lead();
  typename GridFunction1D<Scalar>::Vector r(N - 1);
  for (Index i = 1; i < N; ++i) {
    Scalar acc(0);
    for (Index m = 0; m <= N - i + s; ++m) {
      const Index node = i + m - s;
      if (node >= 0) acc += w[m] * u.values[node];
    }
    r[i - 1] = acc;
  }
  using std::pow;
  return r / pow(u.h(), w.alpha);
}

template <typename Scalar>
typename GridFunction1D<Scalar>::Vector apply_left_wsgd(const GridFunction1D<Scalar>& u, Scalar alpha,
                                                       ShiftScheme scheme) {
  return apply_left(u, weights<Scalar>(alpha, scheme, u.N() + 3));
}

template <typename Scalar>
typename GridFunction1D<Scalar>::Vector apply_right_wsgd(const GridFunction1D<Scalar>& u, Scalar alpha,
                                                        ShiftScheme scheme) {
  return apply_right(u, weights<Scalar>(alpha, scheme, u.N() + 3));
}

/// Columns of the left stencil that multiply u_0 and u_N (length N-1 each).
/// For lead 1 these are w_{i+1} and w_0 delta_{i,N-1}.
template <typename Scalar>
std::pair<typename WeightSequence<Scalar>::Vector, typename WeightSequence<Scalar>::Vector>
boundary_columns(const WeightSequence<Scalar>& w, Index N) {
  const auto L = left_stencil_matrix(w, N);
  return {L.col(0), L.col(N)};
}

/// Boundary contribution H for a constant-coefficient Crank-Nicolson step:
/// tau / (2 h^alpha) * (K1 * left columns + K2 * right columns) applied to
/// u0_sum = U_0^n + U_0^{n+1} and uN_sum = U_N^n + U_N^{n+1}. n = N - 1.
template <typename Scalar = double>
typename WeightSequence<Scalar>::Vector boundary_vector(Scalar alpha, ShiftScheme scheme, Index n,
                                                        Scalar K1, Scalar K2, Scalar u0_sum,
                                                        Scalar uN_sum, Scalar tau, Scalar h) {
  const Index N = n + 1;
  const auto w = weights<Scalar>(alpha, scheme, N + 3);
  const auto [l0, lN] = boundary_columns(w, N);
  // The right stencil is the left one reversed, so its u_0 column is lN reversed.
  const typename WeightSequence<Scalar>::Vector c0 = K1 * l0 + K2 * lN.reverse();
  const typename WeightSequence<Scalar>::Vector cN = K1 * lN + K2 * l0.reverse();
  using std::pow;
  return (tau / (Scalar(2) * pow(h, alpha))) * (c0 * u0_sum + cN * uN_sum);
}

}  // namespace wsgd
