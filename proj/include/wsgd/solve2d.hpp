#pragma once

#include <Eigen/Dense>

#include <memory>
#include <string>

#include "wsgd/problems.hpp"
#include "wsgd/solve1d.hpp"
#include "wsgd/weights.hpp"

namespace wsgd {

enum class Splitting { PR, Douglas, Dyakonov, LOD, FullCN };

std::string to_string(Splitting s);
Splitting parse_splitting(const std::string& s);

struct SolverConfig2D {
  int Nx = 16, Ny = 16, M = 16;
  ShiftScheme scheme = ShiftScheme::p1q0();
  Splitting splitting = Splitting::PR;
  SourceSampling sampling = SourceSampling::Midpoint;

  void validate(const Problem2D& problem) const;
};

/// Nodal values u(x_i, y_j) stored at (j, i), row-major, so x runs fastest in memory.
using GridFunction2D = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// One-dimensional pieces of the 2D operator.
/// Dx = h^{-alpha}(K1p A + K2p A^T) of order Nx-1 and likewise Dy; Ox/Oy are the
/// full stencils of shape (n-1) x (n+1) whose first and last columns hit the boundary.
struct DirectionalOperators {
  Eigen::MatrixXd Dx, Dy;
  Eigen::MatrixXd Ox, Oy;
  double hx = 0, hy = 0;
};

DirectionalOperators build_directional_operators(const Problem2D& problem, const SolverConfig2D& config);

/// (I (x) Dx) v on the interior grid, applied row by row.
GridFunction2D apply_x(const Eigen::MatrixXd& Dx, const GridFunction2D& interior);
/// (Dy (x) I) v on the interior grid, applied column by column.
GridFunction2D apply_y(const Eigen::MatrixXd& Dy, const GridFunction2D& interior);

/// Steps one splitting scheme, caching the one-dimensional factorizations.
class Stepper2D {
 public:
  Stepper2D(const Problem2D& problem, const SolverConfig2D& config, double tau);
  ~Stepper2D();
  Stepper2D(Stepper2D&&) noexcept;
  Stepper2D& operator=(Stepper2D&&) noexcept;

  /// Advance U (full grid, boundary ring at t_n) from t_n to t_n + tau.
  GridFunction2D step(const GridFunction2D& U, double t_n) const;

  const DirectionalOperators& operators() const;
  /// (I - tau/2 D)^{-1} (I + tau/2 D) v for the x (dir = 0) or y (dir = 1) operator.
  Eigen::VectorXd propagate(int dir, const Eigen::VectorXd& v) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

GridFunction2D pr_adi_step(const GridFunction2D& U, double t_n, double tau, const Problem2D& problem,
                           const SolverConfig2D& config);
GridFunction2D douglas_adi_step(const GridFunction2D& U, double t_n, double tau,
                                const Problem2D& problem, const SolverConfig2D& config);
GridFunction2D dyakonov_adi_step(const GridFunction2D& U, double t_n, double tau,
                                 const Problem2D& problem, const SolverConfig2D& config);
GridFunction2D lod_step(const GridFunction2D& U, double t_n, double tau, const Problem2D& problem,
                        const SolverConfig2D& config);
/// Dense Kronecker assembly of the unsplit factored scheme. N <= 16, homogeneous boundary only.
GridFunction2D full_cn_kron_solve(const GridFunction2D& U, double t_n, double tau,
                                  const Problem2D& problem, const SolverConfig2D& config);

struct Solution2D {
  Eigen::VectorXd x, y;
  GridFunction2D initial, final;
  SolverConfig2D config;
  std::string problem;
};

/// Called after each step with (n, t_n, U^n).
using LevelObserver2D = std::function<void(int, double, const GridFunction2D&)>;

Solution2D solve2d_run(const Problem2D& problem, const SolverConfig2D& config,
                       const LevelObserver2D& observer = {});

}  // namespace wsgd
