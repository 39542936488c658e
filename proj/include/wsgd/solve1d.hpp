#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

#include "wsgd/problems.hpp"
#include "wsgd/weights.hpp"

namespace wsgd {

/// How the source enters a time step.
enum class SourceSampling {
  Midpoint,  ///< f(x, t_{n+1/2})
  Average    ///< theta f(x, t_{n+1}) + (1 - theta) f(x, t_n)
};

struct SolverConfig1D {
  int N = 32;
  int M = 32;
  double theta = 0.5;
  ShiftScheme scheme = ShiftScheme::p1q0();
  double T = 1.0;
  SourceSampling sampling = SourceSampling::Average;

  /// Throws on hard errors; returns a warning (empty if none) for theta outside [1/2, 1].
  std::string validate() const;
};

struct Solution1D {
  Eigen::VectorXd x;
  std::vector<double> times;           ///< times of the stored levels
  std::vector<Eigen::VectorXd> levels; ///< full nodal vectors, boundary included
  SolverConfig1D config;
  std::string problem;

  const Eigen::VectorXd& final_level() const { return levels.back(); }
};

/// Dense direct solve of the steady problem with the third-order operator.
Solution1D steady_solve_3wsgd(const SteadyProblem1D& problem, int N);

/// lhs = I - theta B, rhs = I + (1 - theta) B on the interior nodes,
/// B = tau / h^alpha (D1 A + D2 A^T); left_col/right_col are the stencil columns of
/// D1 L + D2 R (no tau, no 1/h^alpha) that multiply U_0 and U_N.
struct CNSystem {
  Eigen::MatrixXd lhs, rhs;
  Eigen::VectorXd left_col, right_col;
  Eigen::VectorXd x;
  double tau = 0, h = 0, scale = 0;  ///< scale = tau / h^alpha
};

CNSystem assemble_cn_system(const Problem1D& problem, const SolverConfig1D& config);

/// Called after every step with (level index n >= 1, t_n, U^n); level 0 is reported too.
using LevelObserver = std::function<void(int, double, const Eigen::VectorXd&)>;

/// Crank-Nicolson (theta-weighted) stepping. Stores the initial and final levels, or every
/// level when store_all is set.
Solution1D cn_wsgd_run(const Problem1D& problem, const SolverConfig1D& config,
                       const LevelObserver& observer = {}, bool store_all = false);

/// Same stepping for d1(x), d2(x) coefficients. The constant path is the special case
/// d1 = K1, d2 = K2 and goes through identical arithmetic.
Solution1D cn_wsgd_run_variable(const Problem1D& problem, const SolverConfig1D& config,
                                const LevelObserver& observer = {}, bool store_all = false);

}  // namespace wsgd
