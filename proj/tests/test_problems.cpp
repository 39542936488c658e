#include <doctest.h>

#include <cmath>
#include <random>
#include <variant>

#include "oracles.hpp"
#include "wsgd/error.hpp"
#include "wsgd/problems.hpp"

using namespace wsgd;

namespace {
double bump(double x) { return std::pow(x * (1 - x), 3); }

std::vector<std::pair<double, double>> points(unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  std::vector<std::pair<double, double>> p;
  for (int i = 0; i < 50; ++i) p.emplace_back(u(rng), u(rng));
  return p;
}
}  // namespace

TEST_SUITE("problems") {
  TEST_CASE("steady example residual") {
    for (double a : {1.1, 1.5, 1.9}) {
      const auto p = make_steady_example(a);
      for (auto [x, t] : points(1)) {
        (void)t;
        const double r = -oracle::rl_monomial(2 + a, a, x) - p.source(x);
        CHECK(std::abs(r) < 1e-10);
      }
      CHECK(p.exact(1.0) == 1.0);
      CHECK(p.left == 0.0);
      CHECK(p.right == 1.0);
    }
    CHECK_THROWS_AS(make_steady_example(2.0), ParameterError);
  }

  TEST_CASE("time-dependent residuals") {
    for (double a : {1.1, 1.5, 1.9}) {
      const auto e1 = make_example_1d(ExampleId::Ex1_LeftOnly, a);
      const auto e2 = make_example_1d(ExampleId::Ex2_TwoSided, a);
      const auto e3 = make_example_1d(ExampleId::Ex3_Variable, a);
      for (auto [x, t] : points(2)) {
        const double E = std::exp(-t);
        const double r1 = -E * std::pow(x, 1 + a) - E * oracle::rl_monomial(1 + a, a, x) - e1.f(x, t);
        const double dl = oracle::bump_left(a, x), dr = oracle::bump_right(a, x);
        const double r2 = -E * bump(x) - E * (dl + dr) - e2.f(x, t);
        const double r3 =
            -E * bump(x) - E * (std::pow(x, a) * dl + std::pow(1 - x, a) * dr) - e3.f(x, t);
        INFO("alpha = " << a << " x = " << x << " t = " << t);
        CHECK(std::abs(r1) < 1e-10);
        CHECK(std::abs(r2) < 1e-10);
        CHECK(std::abs(r3) < 1e-10);
      }
    }
  }

  TEST_CASE("two-dimensional residual") {
    for (auto [a, b] : {std::pair{1.2, 1.8}, {1.5, 1.5}, {1.9, 1.1}}) {
      const auto p = make_example_2d(a, b);
      std::mt19937_64 rng(3);
      std::uniform_real_distribution<double> u(0.01, 0.99);
      for (int k = 0; k < 50; ++k) {
        const double x = u(rng), y = u(rng), t = u(rng);
        const double E = std::exp(-t);
        const double ox = oracle::bump_left(a, x) + oracle::bump_right(a, x);
        const double oy = oracle::bump_left(b, y) + oracle::bump_right(b, y);
        const double r = -E * bump(x) * bump(y) - E * (ox * bump(y) + oy * bump(x)) - p.f(x, y, t);
        CHECK(std::abs(r) < 1e-10);
      }
    }
  }

  TEST_CASE("initial and boundary data match the exact solution") {
    for (auto id : {ExampleId::Ex1_LeftOnly, ExampleId::Ex2_TwoSided, ExampleId::Ex3_Variable}) {
      const auto p = make_example_1d(id, 1.5);
      for (double x = 0; x <= 1.0; x += 0.125) CHECK(p.u0(x) == doctest::Approx(p.exact(x, 0.0)).epsilon(1e-14));
      for (double t : {0.0, 0.5, 1.0}) {
        CHECK(p.phi_a(t) == doctest::Approx(p.exact(0.0, t)).epsilon(1e-14));
        CHECK(p.phi_b(t) == doctest::Approx(p.exact(1.0, t)).epsilon(1e-14));
      }
      CHECK_NOTHROW(p.validate());
    }
    const auto p = make_example_2d();
    CHECK(p.alpha == 1.2);
    CHECK(p.beta == 1.8);
    for (double s = 0; s <= 1.0; s += 0.25) {
      CHECK(p.exact(s, 0.0, 0.7) == 0.0);
      CHECK(p.exact(1.0, s, 0.7) == doctest::Approx(0.0).scale(1e-15));
    }
  }

  TEST_CASE("example dispatch") {
    CHECK(std::holds_alternative<SteadyProblem1D>(make_example(ExampleId::Ex0_Steady, 1.1)));
    CHECK(std::holds_alternative<Problem1D>(make_example(ExampleId::Ex2_TwoSided, 1.5)));
    const auto v = make_example(ExampleId::Ex4_TwoDim, std::nan(""));
    REQUIRE(std::holds_alternative<Problem2D>(v));
    CHECK(std::get<Problem2D>(v).alpha == 1.2);
    CHECK(make_example_1d(ExampleId::Ex3_Variable, 1.5).variable());
    CHECK_FALSE(make_example_1d(ExampleId::Ex2_TwoSided, 1.5).variable());
    for (auto s : {"ex0", "ex1", "ex2", "ex3", "ex4"}) CHECK(to_string(parse_example_id(s)) == s);
    CHECK_THROWS_AS(parse_example_id("ex9"), ParameterError);
    CHECK_THROWS_AS(make_example_1d(ExampleId::Ex4_TwoDim, 1.5), ParameterError);
    CHECK_THROWS_AS(make_example_1d(ExampleId::Ex1_LeftOnly, 0.9), ParameterError);
    CHECK_THROWS_AS(make_example_2d(1.5, 2.1), ParameterError);
  }

  TEST_CASE("validation") {
    auto p = make_example_1d(ExampleId::Ex1_LeftOnly, 1.5);
    p.phi_a = [](double) { return 1.0; };
    CHECK_THROWS_AS(p.validate(), ParameterError);
    p.allow_nonzero_boundary = true;
    CHECK_NOTHROW(p.validate());
    p.K1 = p.K2 = 0;
    CHECK_THROWS_AS(p.validate(), ParameterError);
    auto q = make_example_2d();
    q.K1m = q.K2m = 0;
    CHECK_THROWS_AS(q.validate(), ParameterError);
  }

  TEST_CASE("norms and rates") {
    Eigen::VectorXd v(3);
    v << 1, -3, 2;
    CHECK(max_norm(v) == 3.0);
    CHECK(l2_norm(v, 0.5) == doctest::Approx(std::sqrt(7.0)));
    Eigen::MatrixXd m = Eigen::MatrixXd::Constant(2, 2, 2.0);
    CHECK(l2_norm(m, 0.5, 0.25) == doctest::Approx(std::sqrt(2.0)));
    CHECK(convergence_rate(4e-4, 1e-4) == doctest::Approx(2.0));
    CHECK(convergence_rate(1.0, 0.125) == doctest::Approx(3.0));
    CHECK_THROWS_AS(convergence_rate(0.0, 1.0), ParameterError);
    CHECK_THROWS_AS(convergence_rate(1.0, -1.0), ParameterError);
  }
}
