#include "wsgd/solve2d.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>

#include "dense_lu.hpp"
#include "wsgd/error.hpp"
#include "wsgd/operators.hpp"

namespace wsgd {

using Eigen::Index;
using Eigen::MatrixXd;

std::string to_string(Splitting s) {
  switch (s) {
    case Splitting::PR: return "pr";
    case Splitting::Douglas: return "douglas";
    case Splitting::Dyakonov: return "dyakonov";
    case Splitting::LOD: return "lod";
    case Splitting::FullCN: return "full";
  }
  return "?";
}

Splitting parse_splitting(const std::string& s) {
  if (s == "pr") return Splitting::PR;
  if (s == "douglas") return Splitting::Douglas;
  if (s == "dyakonov") return Splitting::Dyakonov;
  if (s == "lod") return Splitting::LOD;
  if (s == "full") return Splitting::FullCN;
  throw ParameterError("unknown splitting '" + s + "' (expected pr, douglas, dyakonov, lod, full)");
}

void SolverConfig2D::validate(const Problem2D& problem) const {
  if (Nx < 4 || Ny < 4) throw ParameterError("Nx and Ny must be at least 4");
  if (M < 1) throw ParameterError("M must be at least 1");
  if (scheme.kind != ShiftKind::P1Q0 && scheme.kind != ShiftKind::P1QM1 &&
      scheme.kind != ShiftKind::Custom)
    throw ParameterError("2D stepping supports the second-order pairs only, got " + scheme.name());
  if (scheme.kind == ShiftKind::Custom && (std::abs(scheme.p) > 1 || std::abs(scheme.q) > 1))
    throw ParameterError("shifts must satisfy |p|, |q| <= 1");
  const double hx = (problem.b - problem.a) / Nx, hy = (problem.d - problem.c) / Ny;
  if (splitting != Splitting::PR && std::abs(hx - hy) > 1e-14 * std::max(hx, hy))
    throw ParameterError(to_string(splitting) + " needs equal spacing in x and y");
  if (splitting == Splitting::FullCN && (Nx > 16 || Ny > 16))
    throw ParameterError("full Kronecker solve is limited to N <= 16");
}

DirectionalOperators build_directional_operators(const Problem2D& problem, const SolverConfig2D& config) {
  DirectionalOperators d;
  d.hx = (problem.b - problem.a) / config.Nx;
  d.hy = (problem.d - problem.c) / config.Ny;
  auto full = [&](double order, double k1, double k2, int n, double h) {
    const auto w = wsgd2_weights<double>(order, config.scheme, n + 3);
    return MatrixXd((k1 * left_stencil_matrix(w, n) + k2 * right_stencil_matrix(w, n)) /
                    std::pow(h, order));
  };
  d.Ox = full(problem.alpha, problem.K1p, problem.K2p, config.Nx, d.hx);
  d.Oy = full(problem.beta, problem.K1m, problem.K2m, config.Ny, d.hy);
  d.Dx = d.Ox.middleCols(1, config.Nx - 1);
  d.Dy = d.Oy.middleCols(1, config.Ny - 1);
  return d;
}

GridFunction2D apply_x(const MatrixXd& Dx, const GridFunction2D& interior) {
  return interior * Dx.transpose();
}

GridFunction2D apply_y(const MatrixXd& Dy, const GridFunction2D& interior) { return Dy * interior; }

struct Stepper2D::Impl {
  Problem2D p;
  SolverConfig2D cfg;
  double tau, t2;
  DirectionalOperators ops;
  Eigen::VectorXd x, y;
  detail::DenseLU mx, my, py;
  int nx, ny;

  GridFunction2D grid(const std::function<double(double, double)>& g) const {
    GridFunction2D G(ny + 1, nx + 1);
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i <= nx; ++i) G(j, i) = g(x[i], y[j]);
    return G;
  }
  GridFunction2D ring(double t) const {
    GridFunction2D G = GridFunction2D::Zero(ny + 1, nx + 1);
    for (int i = 0; i <= nx; ++i) G(0, i) = p.phi(x[i], y[0], t), G(ny, i) = p.phi(x[i], y[ny], t);
    for (int j = 1; j < ny; ++j) G(j, 0) = p.phi(x[0], y[j], t), G(j, nx) = p.phi(x[nx], y[j], t);
    return G;
  }
  GridFunction2D source(double t) const {
    if (cfg.sampling == SourceSampling::Midpoint)
      return grid([&](double a, double b) { return p.f(a, b, t + 0.5 * tau); });
    return grid([&](double a, double b) { return 0.5 * (p.f(a, b, t) + p.f(a, b, t + tau)); });
  }

  // tau/2 times the x stencil on every row: (ny+1) x (nx-1).
  GridFunction2D X(const GridFunction2D& G) const { return t2 * (G * ops.Ox.transpose()); }
  // tau/2 times the y stencil on every column: (ny-1) x (nx+1).
  GridFunction2D Y(const GridFunction2D& G) const { return t2 * (ops.Oy * G); }

  GridFunction2D inner(const GridFunction2D& G) const { return G.block(1, 1, ny - 1, nx - 1); }

  // (I - tau/2 Dx) on each row.
  GridFunction2D solve_rows(const GridFunction2D& R) const {
    return mx.solve(R.transpose()).transpose();
  }
  GridFunction2D solve_cols(const detail::DenseLU& lu, const GridFunction2D& R) const {
    return lu.solve(R);
  }

  // Known V on the x-boundary columns moved to the right of (I - tau/2 Dx) V = ...
  GridFunction2D x_boundary(const GridFunction2D& V, Index row0, Index rows) const {
    return t2 * (V.col(0).segment(row0, rows) * ops.Ox.col(0).transpose() +
                 V.col(nx).segment(row0, rows) * ops.Ox.col(nx).transpose());
  }
  // Known U^{n+1} on the y-boundary rows moved to the right of (I - tau/2 Dy) U = ...
  GridFunction2D y_boundary(const GridFunction2D& P) const {
    return t2 * (ops.Oy.col(0) * P.row(0).segment(1, nx - 1) +
                 ops.Oy.col(ny) * P.row(ny).segment(1, nx - 1));
  }

  GridFunction2D finish(const GridFunction2D& Uin, const GridFunction2D& P1) const {
    GridFunction2D out = P1;
    out.block(1, 1, ny - 1, nx - 1) = Uin;
    return out;
  }

  GridFunction2D pr(const GridFunction2D& U, double t) const {
    const GridFunction2D P0 = ring(t), P1 = ring(t + tau), F = source(t);
    GridFunction2D V = GridFunction2D::Zero(ny + 1, nx + 1);
    const GridFunction2D Y0 = Y(P0), Y1 = Y(P1);
    for (int i : {0, nx})
      V.col(i).segment(1, ny - 1) =
          0.5 * (P0.col(i).segment(1, ny - 1) + Y0.col(i) + P1.col(i).segment(1, ny - 1) - Y1.col(i));
    GridFunction2D R = inner(U) + Y(U).middleCols(1, nx - 1) + t2 * inner(F) + x_boundary(V, 1, ny - 1);
    V.block(1, 1, ny - 1, nx - 1) = solve_rows(R);
    R = inner(V) + X(V).middleRows(1, ny - 1) + t2 * inner(F) + y_boundary(P1);
    return finish(solve_cols(my, R), P1);
  }

  GridFunction2D douglas(const GridFunction2D& U, double t) const {
    const GridFunction2D P0 = ring(t), P1 = ring(t + tau), F = source(t);
    GridFunction2D V = GridFunction2D::Zero(ny + 1, nx + 1);
    const GridFunction2D Y0 = Y(P0), Y1 = Y(P1);
    for (int i : {0, nx})
      V.col(i).segment(1, ny - 1) = P1.col(i).segment(1, ny - 1) - Y1.col(i) + Y0.col(i);
    const GridFunction2D YU = Y(U).middleCols(1, nx - 1);
    GridFunction2D R =
        inner(U) + X(U).middleRows(1, ny - 1) + 2.0 * YU + tau * inner(F) + x_boundary(V, 1, ny - 1);
    V.block(1, 1, ny - 1, nx - 1) = solve_rows(R);
    R = inner(V) - YU + y_boundary(P1);
    return finish(solve_cols(my, R), P1);
  }

  GridFunction2D dyakonov(const GridFunction2D& U, double t) const {
    const GridFunction2D P1 = ring(t + tau), F = source(t);
    GridFunction2D V = GridFunction2D::Zero(ny + 1, nx + 1);
    const GridFunction2D Y1 = Y(P1);
    for (int i : {0, nx}) V.col(i).segment(1, ny - 1) = P1.col(i).segment(1, ny - 1) - Y1.col(i);
    // W = (I + tau/2 dy) U on interior rows, all columns.
    const GridFunction2D W = U.middleRows(1, ny - 1) + Y(U);
    GridFunction2D R = W.middleCols(1, nx - 1) + t2 * (W * ops.Ox.transpose()) + tau * inner(F) +
                       x_boundary(V, 1, ny - 1);
    V.block(1, 1, ny - 1, nx - 1) = solve_rows(R);
    R = inner(V) + y_boundary(P1);
    return finish(solve_cols(my, R), P1);
  }

  GridFunction2D lod(const GridFunction2D& U, double t) const {
    const GridFunction2D P1 = ring(t + tau), F = source(t);
    GridFunction2D V = GridFunction2D::Zero(ny + 1, nx + 1);
    for (int j : {0, ny})
      for (int i : {0, nx}) V(j, i) = P1(j, i);
    // x-boundary columns of V from the second stage read at i = 0, N:
    // (I + tau/2 dy) V = (I - tau/2 dy) phi^{n+1} - tau/2 (I - tau/2 dy) f.
    const GridFunction2D Y1 = Y(P1), YF = Y(F);
    for (int i : {0, nx}) {
      Eigen::VectorXd r = P1.col(i).segment(1, ny - 1) - Y1.col(i) -
                          t2 * (F.col(i).segment(1, ny - 1) - YF.col(i)) -
                          t2 * (ops.Oy.col(0) * V(0, i) + ops.Oy.col(ny) * V(ny, i));
      V.col(i).segment(1, ny - 1) = py.solve(r);
    }
    // First stage on every row, boundary rows included.
    GridFunction2D R = U.middleCols(1, nx - 1) + X(U) + t2 * (F.middleCols(1, nx - 1) + X(F)) +
                       x_boundary(V, 0, ny + 1);
    V.middleCols(1, nx - 1) = solve_rows(R);
    R = inner(V) + Y(V).middleCols(1, nx - 1) + t2 * (inner(F) - YF.middleCols(1, nx - 1)) +
        y_boundary(P1);
    return finish(solve_cols(my, R), P1);
  }

  GridFunction2D full(const GridFunction2D& U, double t) const {
    const GridFunction2D P0 = ring(t), P1 = ring(t + tau);
    if (P0.cwiseAbs().maxCoeff() != 0.0 || P1.cwiseAbs().maxCoeff() != 0.0)
      throw ParameterError("full Kronecker solve supports homogeneous boundary data only");
    const Index n1 = nx - 1, n2 = ny - 1;
    const MatrixXd Kx = Eigen::kroneckerProduct(MatrixXd::Identity(n2, n2), ops.Dx);
    const MatrixXd Ky = Eigen::kroneckerProduct(ops.Dy, MatrixXd::Identity(n1, n1));
    const MatrixXd I = MatrixXd::Identity(n1 * n2, n1 * n2);
    const MatrixXd lhs = (I - t2 * Kx) * (I - t2 * Ky);
    const MatrixXd rhs = (I + t2 * Kx) * (I + t2 * Ky);
    const GridFunction2D Ui = inner(U), Fi = inner(source(t));
    const Eigen::Map<const Eigen::VectorXd> u(Ui.data(), n1 * n2), f(Fi.data(), n1 * n2);
    const Eigen::VectorXd un = detail::DenseLU(lhs, "full_cn_kron_solve").solve(rhs * u + tau * f);
    GridFunction2D out = GridFunction2D::Zero(ny + 1, nx + 1);
    out.block(1, 1, n2, n1) = Eigen::Map<const GridFunction2D>(un.data(), n2, n1);
    return out;
  }
};

Stepper2D::Stepper2D(const Problem2D& problem, const SolverConfig2D& config, double tau)
    : impl_(std::make_unique<Impl>()) {
  problem.validate();
  config.validate(problem);
  if (!(tau > 0)) throw ParameterError("time step must be positive");
  auto& m = *impl_;
  m.p = problem;
  m.cfg = config;
  m.tau = tau;
  m.t2 = 0.5 * tau;
  m.nx = config.Nx;
  m.ny = config.Ny;
  m.ops = build_directional_operators(problem, config);
  m.x.resize(m.nx + 1);
  m.y.resize(m.ny + 1);
  for (int i = 0; i <= m.nx; ++i) m.x[i] = problem.a + i * m.ops.hx;
  for (int j = 0; j <= m.ny; ++j) m.y[j] = problem.c + j * m.ops.hy;
  const MatrixXd Ix = MatrixXd::Identity(m.nx - 1, m.nx - 1);
  const MatrixXd Iy = MatrixXd::Identity(m.ny - 1, m.ny - 1);
  m.mx.compute(Ix - m.t2 * m.ops.Dx, "x sweep");
  m.my.compute(Iy - m.t2 * m.ops.Dy, "y sweep");
  if (config.splitting == Splitting::LOD) m.py.compute(Iy + m.t2 * m.ops.Dy, "LOD boundary columns");
}

Stepper2D::~Stepper2D() = default;
Stepper2D::Stepper2D(Stepper2D&&) noexcept = default;
Stepper2D& Stepper2D::operator=(Stepper2D&&) noexcept = default;

GridFunction2D Stepper2D::step(const GridFunction2D& U, double t_n) const {
  const auto& m = *impl_;
  if (U.rows() != m.ny + 1 || U.cols() != m.nx + 1)
    throw ParameterError("grid function shape does not match the configuration");
  switch (m.cfg.splitting) {
    case Splitting::PR: return m.pr(U, t_n);
    case Splitting::Douglas: return m.douglas(U, t_n);
    case Splitting::Dyakonov: return m.dyakonov(U, t_n);
    case Splitting::LOD: return m.lod(U, t_n);
    case Splitting::FullCN: return m.full(U, t_n);
  }
  throw ParameterError("unknown splitting");
}

const DirectionalOperators& Stepper2D::operators() const { return impl_->ops; }

Eigen::VectorXd Stepper2D::propagate(int dir, const Eigen::VectorXd& v) const {
  const auto& m = *impl_;
  const MatrixXd& D = dir == 0 ? m.ops.Dx : m.ops.Dy;
  if (v.size() != D.rows()) throw ParameterError("propagate: size mismatch");
  const Eigen::VectorXd r = v + m.t2 * (D * v);
  return dir == 0 ? Eigen::VectorXd(m.mx.solve(r)) : Eigen::VectorXd(m.my.solve(r));
}

namespace {
GridFunction2D one_step(Splitting s, const GridFunction2D& U, double t_n, double tau,
                        const Problem2D& problem, SolverConfig2D config) {
  config.splitting = s;
  return Stepper2D(problem, config, tau).step(U, t_n);
}
}  // namespace

GridFunction2D pr_adi_step(const GridFunction2D& U, double t_n, double tau, const Problem2D& problem,
                           const SolverConfig2D& config) {
  return one_step(Splitting::PR, U, t_n, tau, problem, config);
}
GridFunction2D douglas_adi_step(const GridFunction2D& U, double t_n, double tau,
                                const Problem2D& problem, const SolverConfig2D& config) {
  return one_step(Splitting::Douglas, U, t_n, tau, problem, config);
}
GridFunction2D dyakonov_adi_step(const GridFunction2D& U, double t_n, double tau,
                                 const Problem2D& problem, const SolverConfig2D& config) {
  return one_step(Splitting::Dyakonov, U, t_n, tau, problem, config);
}
GridFunction2D lod_step(const GridFunction2D& U, double t_n, double tau, const Problem2D& problem,
                        const SolverConfig2D& config) {
  return one_step(Splitting::LOD, U, t_n, tau, problem, config);
}
GridFunction2D full_cn_kron_solve(const GridFunction2D& U, double t_n, double tau,
                                  const Problem2D& problem, const SolverConfig2D& config) {
  return one_step(Splitting::FullCN, U, t_n, tau, problem, config);
}

Solution2D solve2d_run(const Problem2D& problem, const SolverConfig2D& config,
                       const LevelObserver2D& observer) {
  const double tau = problem.T / config.M;
  const Stepper2D stepper(problem, config, tau);
  Solution2D sol;
  sol.config = config;
  sol.problem = problem.name;
  const auto& ops = stepper.operators();
  sol.x.resize(config.Nx + 1);
  sol.y.resize(config.Ny + 1);
  for (int i = 0; i <= config.Nx; ++i) sol.x[i] = problem.a + i * ops.hx;
  for (int j = 0; j <= config.Ny; ++j) sol.y[j] = problem.c + j * ops.hy;

  GridFunction2D U(config.Ny + 1, config.Nx + 1);
  for (int j = 0; j <= config.Ny; ++j)
    for (int i = 0; i <= config.Nx; ++i) {
      const bool edge = i == 0 || j == 0 || i == config.Nx || j == config.Ny;
      U(j, i) = edge ? problem.phi(sol.x[i], sol.y[j], 0.0) : problem.u0(sol.x[i], sol.y[j]);
    }
  sol.initial = U;
  if (observer) observer(0, 0.0, U);
  for (int n = 0; n < config.M; ++n) {
    U = stepper.step(U, n * tau);
    if (observer) observer(n + 1, (n + 1) * tau, U);
  }
  sol.final = std::move(U);
  return sol;
}

}  // namespace wsgd
