#pragma once

#include <Eigen/Core>
#include <unsupported/Eigen/FFT>

#include <complex>
#include <string>
#include <vector>

#include "wsgd/error.hpp"

namespace wsgd {

using Eigen::Index;

/// Square Toeplitz matrix stored by its first column and first row.
/// Entry (i, j) is t_{i-j}: first_col holds t_0..t_{n-1}, first_row t_0, t_{-1}..t_{1-n}.
template <typename Scalar_>
class ToeplitzOperator {
 public:
  using Scalar = Scalar_;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  ToeplitzOperator() = default;
  ToeplitzOperator(Vector first_col, Vector first_row)
      : col_(std::move(first_col)), row_(std::move(first_row)) {
    if (col_.size() == 0 || col_.size() != row_.size())
      throw ParameterError("Toeplitz: first column and row must be non-empty and of equal length");
    if (col_[0] != row_[0]) throw ParameterError("Toeplitz: first_col[0] != first_row[0]");
  }

  Index rows() const { return col_.size(); }
  Index cols() const { return col_.size(); }
  const Vector& first_col() const { return col_; }
  const Vector& first_row() const { return row_; }

  Scalar operator()(Index i, Index j) const { return i >= j ? col_[i - j] : row_[j - i]; }

  ToeplitzOperator transpose() const { return ToeplitzOperator(row_, col_); }

  Matrix toDense() const {
    const Index n = rows();
    Matrix m(n, n);
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i) m(i, j) = (*this)(i, j);
    return m;
  }

 private:
  Vector col_, row_;
};

namespace detail {
template <typename Scalar, typename Derived>
void check_dims(const ToeplitzOperator<Scalar>& t, const Eigen::MatrixBase<Derived>& v) {
  if (v.size() != t.cols())
    throw ParameterError("Toeplitz matvec: size " + std::to_string(v.size()) + " vs order " +
                         std::to_string(t.cols()));
}
}  // namespace detail

/// O(n^2) product.
template <typename Scalar, typename Derived>
typename ToeplitzOperator<Scalar>::Vector toeplitz_matvec_direct(const ToeplitzOperator<Scalar>& t,
                                                                 const Eigen::MatrixBase<Derived>& v) {
  detail::check_dims(t, v);
  const Index n = t.rows();
  typename ToeplitzOperator<Scalar>::Vector y(n);
  for (Index i = 0; i < n; ++i) {
    Scalar acc(0);
    for (Index j = 0; j < n; ++j) acc += t(i, j) * v[j];
    y[i] = acc;
  }
  return y;
}

/// O(n log n) product through a circulant embedding of length 2^k >= 2n-1.
template <typename Scalar, typename Derived>
typename ToeplitzOperator<Scalar>::Vector toeplitz_matvec_fft(const ToeplitzOperator<Scalar>& t,
                                                              const Eigen::MatrixBase<Derived>& v) {
  detail::check_dims(t, v);
  const Index n = t.rows();
  if (n == 1) return (t.first_col()[0] * v).eval();
  Index len = 1;
  while (len < 2 * n - 1) len <<= 1;

  std::vector<Scalar> c(len, Scalar(0)), x(len, Scalar(0));
  for (Index k = 0; k < n; ++k) c[k] = t.first_col()[k];
  for (Index k = 1; k < n; ++k) c[len - k] = t.first_row()[k];
  for (Index k = 0; k < n; ++k) x[k] = v[k];

  Eigen::FFT<Scalar> fft;
  std::vector<std::complex<Scalar>> fc, fx;
  fft.fwd(fc, c);
  fft.fwd(fx, x);
  for (Index k = 0; k < len; ++k) fc[k] *= fx[k];
  std::vector<Scalar> y;
  fft.inv(y, fc);

  typename ToeplitzOperator<Scalar>::Vector out(n);
  for (Index k = 0; k < n; ++k) out[k] = y[k];
  return out;
}

}  // namespace wsgd
