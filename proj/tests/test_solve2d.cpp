#include <doctest.h>

#include <cmath>

#include "checks.hpp"
#include "oracles.hpp"
#include "wsgd/wsgd.hpp"

using namespace wsgd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {
const Splitting kAll[] = {Splitting::PR, Splitting::Douglas, Splitting::Dyakonov, Splitting::LOD};

SolverConfig2D config(int N, Splitting sp, ShiftScheme s = ShiftScheme::p1q0()) {
  SolverConfig2D c;
  c.Nx = c.Ny = c.M = N;
  c.splitting = sp;
  c.scheme = s;
  return c;
}

GridFunction2D step_with(Splitting sp, const GridFunction2D& U, double t, double tau, const Problem2D& p,
                         const SolverConfig2D& c) {
  switch (sp) {
    case Splitting::PR: return pr_adi_step(U, t, tau, p, c);
    case Splitting::Douglas: return douglas_adi_step(U, t, tau, p, c);
    case Splitting::Dyakonov: return dyakonov_adi_step(U, t, tau, p, c);
    case Splitting::LOD: return lod_step(U, t, tau, p, c);
    case Splitting::FullCN: return full_cn_kron_solve(U, t, tau, p, c);
  }
  return U;
}

Problem2D zero_problem() {
  auto p = checks::interior_source_problem(1.4, 1.6);
  p.f = [](double, double, double) { return 0.0; };
  p.u0 = [](double, double) { return 0.0; };
  return p;
}
}  // namespace

TEST_SUITE("solve2d") {
  TEST_CASE("directional operators at alpha = beta = 2") {
    auto p = make_example_2d(2.0, 2.0);
    p.K1p = p.K2p = p.K1m = p.K2m = 0.5;
    const auto d = build_directional_operators(p, config(8, Splitting::PR));
    const MatrixXd L = oracle::laplacian_1d(7, 1.0 / 8);
    CHECK((d.Dx - L).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((d.Dy - L).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(d.Ox.rows() == 7);
    CHECK(d.Ox.cols() == 9);
  }

  TEST_CASE("x and y operators commute") {
    const auto d = build_directional_operators(make_example_2d(1.2, 1.8), config(8, Splitting::PR));
    const VectorXd r = checks::random_vector(49, 8);
    const GridFunction2D v = Eigen::Map<const GridFunction2D>(r.data(), 7, 7);
    const GridFunction2D a = apply_x(d.Dx, apply_y(d.Dy, v)), b = apply_y(d.Dy, apply_x(d.Dx, v));
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12 * a.cwiseAbs().maxCoeff());
  }

  TEST_CASE("directional application is local to its line") {
    const auto d = build_directional_operators(make_example_2d(1.3, 1.7), config(8, Splitting::PR));
    GridFunction2D v = GridFunction2D::Zero(7, 7);
    v(2, 4) = 1.0;
    const GridFunction2D ax = apply_x(d.Dx, v), ay = apply_y(d.Dy, v);
    for (int j = 0; j < 7; ++j)
      for (int i = 0; i < 7; ++i) {
        if (j != 2) CHECK(ax(j, i) == 0.0);
        if (i != 4) CHECK(ay(j, i) == 0.0);
      }
    CHECK(ax(2, 4) == doctest::Approx(d.Dx(4, 4)));
    CHECK(ay(2, 4) == doctest::Approx(d.Dy(2, 2)));
  }

  TEST_CASE("zero problem stays zero") {
    const auto p = zero_problem();
    for (Splitting sp : {Splitting::PR, Splitting::Douglas, Splitting::Dyakonov, Splitting::LOD, Splitting::FullCN}) {
      const auto c = config(8, sp);
      const GridFunction2D U = GridFunction2D::Zero(9, 9);
      CHECK(step_with(sp, U, 0.0, 0.1, p, c).cwiseAbs().maxCoeff() == 0.0);
    }
  }

  TEST_CASE("each splitting equals its Kronecker form") {
    for (auto s : {ShiftScheme::p1q0(), ShiftScheme::p1qm1()})
      for (auto [a, b] : {std::pair{1.2, 1.8}, {1.5, 1.5}, {1.9, 1.1}})
        for (Splitting sp : {Splitting::PR, Splitting::Douglas, Splitting::Dyakonov, Splitting::LOD, Splitting::FullCN}) {
          INFO(to_string(sp) << " " << s.name() << " alpha " << a << " beta " << b);
          CHECK(checks::splitting_vs_kron(sp, a, b, s) < 1e-11);
        }
  }

  TEST_CASE("heat equation limit") {
    for (Splitting sp : {Splitting::PR, Splitting::Douglas, Splitting::Dyakonov, Splitting::FullCN}) {
      INFO(to_string(sp));
      CHECK(checks::heat_adi_degeneracy(sp) < 1e-11);
    }
  }

  TEST_CASE("the three ADI variants agree at every step") {
    for (auto s : {ShiftScheme::p1q0(), ShiftScheme::p1qm1()}) {
      const auto p = make_example_2d(1.2, 1.8);
      const Stepper2D pr(p, config(16, Splitting::PR, s), 1.0 / 16);
      const Stepper2D dg(p, config(16, Splitting::Douglas, s), 1.0 / 16);
      const Stepper2D dy(p, config(16, Splitting::Dyakonov, s), 1.0 / 16);
      GridFunction2D U(17, 17);
      for (int j = 0; j <= 16; ++j)
        for (int i = 0; i <= 16; ++i) U(j, i) = p.exact(i / 16.0, j / 16.0, 0.0);
      GridFunction2D V = U, W = U;
      double worst = 0;
      for (int n = 0; n < 16; ++n) {
        U = pr.step(U, n / 16.0);
        V = dg.step(V, n / 16.0);
        W = dy.step(W, n / 16.0);
        const double m = U.cwiseAbs().maxCoeff();
        worst = std::max(worst, (U - V).cwiseAbs().maxCoeff() / m);
        worst = std::max(worst, (U - W).cwiseAbs().maxCoeff() / m);
      }
      CHECK(worst < 1e-10);
    }
  }

  TEST_CASE("nonhomogeneous boundary: discrete steady states are fixed points") {
    // Interior balancing time-independent boundary data and source through the full stencils.
    const int N = 10, n = N - 1;
    auto p = make_example_2d(1.4, 1.7);
    p.phi = [](double x, double y, double) { return 1.0 + 0.5 * x - 0.3 * y + x * y; };
    const VectorXd fr = checks::random_vector(n * n, 31);
    p.f = [=](double x, double y, double) {
      const int i = int(std::lround(x * N)), j = int(std::lround(y * N));
      return (i < 1 || j < 1 || i > n || j > n) ? 0.0 : fr[(j - 1) * n + (i - 1)];
    };
    for (Splitting sp : {Splitting::PR, Splitting::Douglas, Splitting::Dyakonov}) {
      const auto c = config(N, sp);
      const auto d = build_directional_operators(p, c);
      GridFunction2D B = GridFunction2D::Zero(N + 1, N + 1);
      for (int j = 0; j <= N; ++j)
        for (int i = 0; i <= N; ++i)
          if (i == 0 || j == 0 || i == N || j == N) B(j, i) = p.phi(i / double(N), j / double(N), 0);
      // (Ox applied along rows + Oy along columns) u = -f on the interior.
      const MatrixXd I = MatrixXd::Identity(n, n);
      const MatrixXd K = Eigen::kroneckerProduct(I, d.Dx).eval() + Eigen::kroneckerProduct(d.Dy, I).eval();
      VectorXd rhs(n * n);
      for (int j = 1; j < N; ++j)
        for (int i = 1; i < N; ++i) {
          const double bx = d.Ox(i - 1, 0) * B(j, 0) + d.Ox(i - 1, N) * B(j, N);
          const double by = d.Oy(j - 1, 0) * B(0, i) + d.Oy(j - 1, N) * B(N, i);
          rhs[(j - 1) * n + (i - 1)] = -fr[(j - 1) * n + (i - 1)] - bx - by;
        }
      const VectorXd us = K.partialPivLu().solve(rhs);
      GridFunction2D U = B;
      for (int j = 1; j < N; ++j)
        for (int i = 1; i < N; ++i) U(j, i) = us[(j - 1) * n + (i - 1)];
      const GridFunction2D V = step_with(sp, U, 0.0, 0.05, p, c);
      INFO(to_string(sp));
      CHECK((V - U).cwiseAbs().maxCoeff() < 1e-10 * U.cwiseAbs().maxCoeff());
    }
  }

  TEST_CASE("one-dimensional propagators contract") {
    for (auto [a, b] : {std::pair{1.2, 1.8}, {1.5, 1.5}, {1.9, 1.1}}) {
      const auto p = make_example_2d(a, b);
      const Stepper2D st(p, config(32, Splitting::PR), 10.0 / 32);
      double worst = 0;
      for (int t = 0; t < 100; ++t) {
        const VectorXd v = checks::random_vector(31, 100 + t);
        for (int dir : {0, 1}) worst = std::max(worst, st.propagate(dir, v).norm() / v.norm());
      }
      CHECK(worst <= 1 + 1e-10);
    }
  }

  TEST_CASE("zero-source norm is non-increasing") {
    for (auto [a, b] : {std::pair{1.2, 1.8}, {1.5, 1.5}, {1.9, 1.1}})
      for (Splitting sp : kAll)
        for (double ratio : {1.0, 10.0}) {
          INFO(to_string(sp) << " alpha " << a << " beta " << b << " ratio " << ratio);
          CHECK(checks::growth_2d(a, b, ShiftScheme::p1q0(), sp, ratio, 16, 200) <= 1 + 1e-10);
        }
  }

  TEST_CASE("published spot values") {
    const auto p = make_example_2d(1.2, 1.8);
    auto l2_at = [&](Splitting sp, int N) {
      const auto sol = solve2d_run(p, config(N, sp));
      const double h = 1.0 / N;
      MatrixXd e(N - 1, N - 1);
      for (int j = 1; j < N; ++j)
        for (int i = 1; i < N; ++i) e(j - 1, i - 1) = sol.final(j, i) - p.exact(i * h, j * h, 1.0);
      return l2_norm(e, h, h);
    };
    CHECK(l2_at(Splitting::PR, 32) == doctest::Approx(1.21460e-7).epsilon(0.02));
    CHECK(l2_at(Splitting::LOD, 32) == doctest::Approx(9.40245e-7).epsilon(0.02));
  }

  TEST_CASE("second order on the two-dimensional example") {
    for (Splitting sp : kAll)
      for (auto s : {ShiftScheme::p1q0(), ShiftScheme::p1qm1()}) {
        Study st = Study::defaults(ExampleId::Ex4_TwoDim);
        st.splitting = sp;
        st.scheme = s;
        st.resolutions = {8, 16, 32, 64};
        const auto rep = run_study(st);
        for (const auto& r : rep.rows)
          if (r.rate_l2) {
            INFO(to_string(sp) << " " << s.name() << " N " << r.N);
            CHECK(*r.rate_l2 >= 1.6);
            CHECK(*r.rate_l2 <= 2.3);
            CHECK(*r.rate_max >= 1.6);
            CHECK(*r.rate_max <= 2.3);
          }
      }
  }

  TEST_CASE("configuration errors") {
    const auto p = make_example_2d();
    auto c = config(8, Splitting::Douglas);
    c.Ny = 16;
    CHECK_THROWS_AS(c.validate(p), ParameterError);
    c.splitting = Splitting::PR;
    CHECK_NOTHROW(c.validate(p));
    c.M = 4;
    const auto sol = solve2d_run(p, c);
    CHECK(sol.final.rows() == 17);
    CHECK(sol.final.cols() == 9);

    CHECK_THROWS_AS(config(32, Splitting::FullCN).validate(p), ParameterError);
    auto q = p;
    q.phi = [](double, double, double) { return 1.0; };
    const GridFunction2D U = GridFunction2D::Constant(9, 9, 1.0);
    CHECK_THROWS_AS(full_cn_kron_solve(U, 0.0, 0.1, q, config(8, Splitting::FullCN)), ParameterError);
    CHECK_THROWS_AS(config(8, Splitting::PR, ShiftScheme::pqr()).validate(p), ParameterError);
    CHECK(parse_splitting("lod") == Splitting::LOD);
    CHECK(to_string(parse_splitting("dyakonov")) == "dyakonov");
    CHECK_THROWS_AS(parse_splitting("crank"), ParameterError);
  }
}
