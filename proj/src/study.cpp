#include "wsgd/study.hpp"

#include <algorithm>
#include <cmath>

#include "wsgd/error.hpp"

namespace wsgd {

Study Study::defaults(ExampleId id) {
  Study s;
  s.example = id;
  switch (id) {
    case ExampleId::Ex0_Steady:
      s.alpha = 1.1;
      s.scheme = ShiftScheme::pqr();
      s.resolutions = {8, 16, 32, 64, 128, 256};
      break;
    case ExampleId::Ex1_LeftOnly:
    case ExampleId::Ex2_TwoSided:
      s.resolutions = {16, 32, 64, 128, 256, 512};
      break;
    case ExampleId::Ex3_Variable:
      s.resolutions = {16, 32, 64, 128, 256};
      break;
    case ExampleId::Ex4_TwoDim:
      s.alpha = 1.2;
      s.beta = 1.8;
      s.resolutions = {8, 16, 32, 64, 128};
      s.sampling = SourceSampling::Midpoint;
      s.max_mode = MaxNormMode::FinalTime;
      break;
  }
  return s;
}

void Study::validate() const {
  if (resolutions.empty()) throw ParameterError("resolution list is empty");
  for (size_t k = 1; k < resolutions.size(); ++k)
    if (resolutions[k] != 2 * resolutions[k - 1])
      throw ParameterError("each resolution must double the previous one");
  if (M < 0) throw ParameterError("M must be nonnegative");
  if (example == ExampleId::Ex0_Steady) {
    if (scheme.kind != ShiftKind::PQR) throw ParameterError("ex0 uses the third-order scheme (pqr)");
  } else if (scheme.kind == ShiftKind::PQR || scheme.kind == ShiftKind::Grunwald) {
    throw ParameterError("time-dependent examples need p1q0 or p1qm1");
  }
}

ErrorRecord run_resolution(const Study& s, int N) {
  ErrorRecord rec;
  rec.N = N;
  rec.M = s.M > 0 ? s.M : N;

  if (s.example == ExampleId::Ex0_Steady) {
    const auto p = make_steady_example(s.alpha);
    const auto sol = steady_solve_3wsgd(p, N);
    Eigen::VectorXd e(N - 1);
    for (int i = 1; i < N; ++i) e[i - 1] = sol.final_level()[i] - p.exact(sol.x[i]);
    rec.M = 0;
    rec.max_err = max_norm(e);
    rec.l2_err = l2_norm(e, (p.b - p.a) / N);
    return rec;
  }

  if (s.example == ExampleId::Ex4_TwoDim) {
    const auto p = make_example_2d(s.alpha, s.beta);
    SolverConfig2D cfg;
    cfg.Nx = cfg.Ny = N;
    cfg.M = rec.M;
    cfg.scheme = s.scheme;
    cfg.splitting = s.splitting;
    cfg.sampling = s.sampling;
    double running = 0;
    Solution2D sol = solve2d_run(p, cfg, [&](int n, double t, const GridFunction2D& U) {
      if (n == 0 || s.max_mode != MaxNormMode::AllLevels) return;
      double m = 0;
      for (int j = 1; j < N; ++j)
        for (int i = 1; i < N; ++i)
          m = std::max(m, std::abs(U(j, i) - p.exact(p.a + (p.b - p.a) * i / N, p.c + (p.d - p.c) * j / N, t)));
      running = std::max(running, m);
    });
    Eigen::MatrixXd e(N - 1, N - 1);
    for (int j = 1; j < N; ++j)
      for (int i = 1; i < N; ++i) e(j - 1, i - 1) = sol.final(j, i) - p.exact(sol.x[i], sol.y[j], p.T);
    rec.max_err = s.max_mode == MaxNormMode::AllLevels ? running : e.cwiseAbs().maxCoeff();
    rec.l2_err = l2_norm(e, (p.b - p.a) / N, (p.d - p.c) / N);
    return rec;
  }

  const auto p = make_example_1d(s.example, s.alpha);
  SolverConfig1D cfg;
  cfg.N = N;
  cfg.M = rec.M;
  cfg.theta = s.theta;
  cfg.scheme = s.scheme;
  cfg.T = p.T;
  cfg.sampling = s.sampling;
  double running = 0;
  auto observe = [&](int n, double t, const Eigen::VectorXd& U) {
    if (n == 0 || s.max_mode != MaxNormMode::AllLevels) return;
    const double h = (p.b - p.a) / N;
    for (int i = 1; i < N; ++i) running = std::max(running, std::abs(U[i] - p.exact(p.a + i * h, t)));
  };
  const auto sol = p.variable() ? cn_wsgd_run_variable(p, cfg, observe) : cn_wsgd_run(p, cfg, observe);
  Eigen::VectorXd e(N - 1);
  for (int i = 1; i < N; ++i) e[i - 1] = sol.final_level()[i] - p.exact(sol.x[i], p.T);
  rec.max_err = s.max_mode == MaxNormMode::AllLevels ? running : max_norm(e);
  rec.l2_err = l2_norm(e, (p.b - p.a) / N);
  return rec;
}

ConvergenceReport run_study(const Study& s, const std::function<void(const ErrorRecord&)>& progress) {
  s.validate();
  ConvergenceReport rep;
  rep.example = to_string(s.example);
  rep.alpha = s.alpha;
  rep.beta = s.example == ExampleId::Ex4_TwoDim ? s.beta : 0.0;
  rep.scheme = s.scheme.name();
  rep.splitting = s.example == ExampleId::Ex4_TwoDim ? to_string(s.splitting) : "";
  for (int N : s.resolutions) {
    rep.rows.push_back(run_resolution(s, N));
    if (progress) progress(rep.rows.back());
  }
  rep.compute_rates();
  return rep;
}

}  // namespace wsgd
