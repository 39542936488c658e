#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <string>

#include "wsgd/error.hpp"

namespace wsgd::detail {

/// PartialPivLU that refuses numerically singular matrices.
class DenseLU {
 public:
  DenseLU() = default;
  DenseLU(const Eigen::MatrixXd& a, const std::string& what) { compute(a, what); }

  void compute(const Eigen::MatrixXd& a, const std::string& what) {
    lu_.compute(a);
    const auto d = lu_.matrixLU().diagonal().cwiseAbs();
    const double scale = a.cwiseAbs().maxCoeff();
    const double tol = std::numeric_limits<double>::epsilon() * double(a.rows()) * scale;
    for (Eigen::Index i = 0; i < d.size(); ++i)
      if (!(d[i] > tol) || !std::isfinite(d[i]))
        throw SolverError(what + ": singular pivot at index " + std::to_string(i), long(i));
  }

  Eigen::MatrixXd solve(const Eigen::MatrixXd& b) const { return lu_.solve(b); }

 private:
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

}  // namespace wsgd::detail
