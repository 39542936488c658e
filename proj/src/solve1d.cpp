#include "wsgd/solve1d.hpp"

#include <cmath>

#include "dense_lu.hpp"
#include "wsgd/error.hpp"
#include "wsgd/operators.hpp"

namespace wsgd {

std::string SolverConfig1D::validate() const {
  if (N < 4) throw ParameterError("N must be at least 4");
  if (M < 1) throw ParameterError("M must be at least 1");
  if (!(T > 0)) throw ParameterError("final time must be positive");
  if (!std::isfinite(theta)) throw ParameterError("theta must be finite");
  if (scheme.kind == ShiftKind::Grunwald || scheme.kind == ShiftKind::PQR)
    throw ParameterError("time stepping supports the second-order pairs only, got " + scheme.name());
  if (scheme.kind == ShiftKind::Custom && (std::abs(scheme.p) > 1 || std::abs(scheme.q) > 1))
    throw ParameterError("shifts must satisfy |p|, |q| <= 1");
  if (theta < 0.5 || theta > 1.0)
    return "theta = " + std::to_string(theta) + " is outside [1/2, 1]; stability is not guaranteed";
  return {};
}

Solution1D steady_solve_3wsgd(const SteadyProblem1D& problem, int N) {
  const double alpha = problem.alpha;
  if (!(alpha > 1.0) || !(alpha < 2.0)) throw ParameterError("steady solve needs 1 < alpha < 2");
  if (N < 4) throw ParameterError("N must be at least 4");
  if (!problem.source) throw ParameterError("steady problem needs a source");

  const double h = (problem.b - problem.a) / N;
  const auto w = wsgd3_weights<double>(alpha, N + 3);
  const Eigen::MatrixXd L = left_stencil_matrix(w, N) / std::pow(h, alpha);

  Eigen::VectorXd x(N + 1);
  for (int k = 0; k <= N; ++k) x[k] = problem.a + k * h;
  Eigen::VectorXd s(N - 1);
  for (int i = 1; i < N; ++i) s[i - 1] = problem.source(x[i]);

  // -(L_int u_int + L_0 u_0 + L_N u_N) = s
  const Eigen::VectorXd rhs = s + L.col(0) * problem.left + L.col(N) * problem.right;
  const detail::DenseLU lu(-L.middleCols(1, N - 1), "steady_solve_3wsgd");

  Eigen::VectorXd u(N + 1);
  u[0] = problem.left;
  u[N] = problem.right;
  u.segment(1, N - 1) = lu.solve(rhs);

  Solution1D sol;
  sol.x = x;
  sol.times = {0.0};
  sol.levels = {u};
  sol.config.N = N;
  sol.config.M = 0;
  sol.config.scheme = ShiftScheme::pqr();
  sol.problem = problem.name;
  return sol;
}

namespace {

void coefficient_rows(const Problem1D& p, const Eigen::VectorXd& x, Eigen::VectorXd& c1,
                      Eigen::VectorXd& c2) {
  const Eigen::Index n = x.size() - 2;
  c1.resize(n);
  c2.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    c1[i] = p.d1 ? p.d1(x[i + 1]) : (p.variable() ? 0.0 : p.K1);
    c2[i] = p.d2 ? p.d2(x[i + 1]) : (p.variable() ? 0.0 : p.K2);
  }
}

}  // namespace

CNSystem assemble_cn_system(const Problem1D& problem, const SolverConfig1D& config) {
  problem.validate();
  config.validate();
  const int N = config.N;
  CNSystem sys;
  sys.h = (problem.b - problem.a) / N;
  sys.tau = config.T / config.M;
  sys.scale = sys.tau / std::pow(sys.h, problem.alpha);
  sys.x.resize(N + 1);
  for (int k = 0; k <= N; ++k) sys.x[k] = problem.a + k * sys.h;

  Eigen::VectorXd c1, c2;
  coefficient_rows(problem, sys.x, c1, c2);
  for (Eigen::Index i = 0; i < c1.size(); ++i)
    if (c1[i] < 0 || c2[i] < 0) throw ParameterError("diffusion coefficients must be nonnegative");

  const auto w = wsgd2_weights<double>(problem.alpha, config.scheme, N + 3);
  const Eigen::MatrixXd L = left_stencil_matrix(w, N);
  const Eigen::MatrixXd R = right_stencil_matrix(w, N);
  const Eigen::MatrixXd op = c1.asDiagonal() * L + c2.asDiagonal() * R;  // (N-1) x (N+1)

  const Eigen::MatrixXd B = sys.scale * op.middleCols(1, N - 1);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(N - 1, N - 1);
  sys.lhs = I - config.theta * B;
  sys.rhs = I + (1.0 - config.theta) * B;
  sys.left_col = op.col(0);
  sys.right_col = op.col(N);
  return sys;
}

namespace {

Solution1D run(const Problem1D& problem, const SolverConfig1D& config, const LevelObserver& observer,
               bool store_all) {
  const CNSystem sys = assemble_cn_system(problem, config);
  const int N = config.N;
  const double th = config.theta, tau = sys.tau;
  const detail::DenseLU lu(sys.lhs, "cn_wsgd_run");

  Eigen::VectorXd u(N + 1), next(N + 1);
  for (int k = 0; k <= N; ++k) u[k] = problem.u0(sys.x[k]);
  u[0] = problem.phi_a(0.0);
  u[N] = problem.phi_b(0.0);

  Solution1D sol;
  sol.x = sys.x;
  sol.config = config;
  sol.problem = problem.name;
  sol.times.push_back(0.0);
  sol.levels.push_back(u);
  if (observer) observer(0, 0.0, u);

  Eigen::VectorXd f0(N - 1), f1(N - 1);
  auto sample = [&](double t, Eigen::VectorXd& out) {
    for (int i = 1; i < N; ++i) out[i - 1] = problem.f(sys.x[i], t);
  };
  const bool avg = config.sampling == SourceSampling::Average;
  if (avg) sample(0.0, f0);

  for (int n = 0; n < config.M; ++n) {
    const double t0 = n * tau, t1 = (n + 1) * tau;
    next[0] = problem.phi_a(t1);
    next[N] = problem.phi_b(t1);

    Eigen::VectorXd rhs = sys.rhs * u.segment(1, N - 1);
    if (avg) {
      sample(t1, f1);
      rhs += tau * (th * f1 + (1.0 - th) * f0);
      std::swap(f0, f1);
    } else {
      sample(t0 + 0.5 * tau, f1);
      rhs += tau * f1;
    }
    rhs += sys.scale * (sys.left_col * (th * next[0] + (1.0 - th) * u[0]) +
                        sys.right_col * (th * next[N] + (1.0 - th) * u[N]));

    next.segment(1, N - 1) = lu.solve(rhs);
    u.swap(next);
    if (observer) observer(n + 1, t1, u);
    if (store_all || n + 1 == config.M) {
      sol.times.push_back(t1);
      sol.levels.push_back(u);
    }
  }
  return sol;
}

}  // namespace

Solution1D cn_wsgd_run(const Problem1D& problem, const SolverConfig1D& config,
                       const LevelObserver& observer, bool store_all) {
  return run(problem, config, observer, store_all);
}

Solution1D cn_wsgd_run_variable(const Problem1D& problem, const SolverConfig1D& config,
                                const LevelObserver& observer, bool store_all) {
  if (!problem.variable())
    throw ParameterError("cn_wsgd_run_variable needs d1 and/or d2 coefficient functions");
  return run(problem, config, observer, store_all);
}

}  // namespace wsgd
