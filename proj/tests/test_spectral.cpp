#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wsgd/operators.hpp"
#include "wsgd/spectral.hpp"

using namespace wsgd;

namespace {
// Symmetric-part generating function from the diagonals: sum over k of w_k cos((k-1)x).
double series(double a, const ShiftScheme& s, double x, int terms) {
  const auto g = oracle::grunwald_list(a, terms + 2);
  std::vector<double> c(terms);
  for (int k = 0; k < terms; ++k) {
    if (s.kind == ShiftKind::P1Q0)
      c[k] = a / 2 * g[k] + (k >= 1 ? (2 - a) / 2 * g[k - 1] : 0.0);
    else if (s.kind == ShiftKind::P1QM1)
      c[k] = (2 + a) / 4 * g[k] + (k >= 2 ? (2 - a) / 4 * g[k - 2] : 0.0);
    else {
      const double l1 = 5 * a / 24 + a * a / 8, l2 = 1 + a / 12 - a * a / 4, l3 = -7 * a / 24 + a * a / 8;
      c[k] = l1 * g[k] + (k >= 1 ? l2 * g[k - 1] : 0.0) + (k >= 2 ? l3 * g[k - 2] : 0.0);
    }
  }
  return oracle::series_generating_function(c, x);
}
}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("alpha = 1 identities") {
    for (double x = 0.05; x < M_PI; x += 0.1) {
      CHECK(std::abs(generating_function(1.0, ShiftScheme::p1q0(), x)) < 1e-14);
      const double s4 = std::pow(std::sin(x / 2), 4);
      CHECK(std::abs(generating_function(1.0, ShiftScheme::p1qm1(), x) + 2 * s4) < 1e-14);
    }
    CHECK(generating_function(1.5, ShiftScheme::p1q0(), 0.0) == 0.0);
    CHECK_THROWS_AS(generating_function(1.5, ShiftScheme::p1q0(), 4.0), ParameterError);
  }

  TEST_CASE("closed form matches the truncated cosine series") {
    for (double a : {1.5, 1.9})
      for (auto s : {ShiftScheme::p1q0(), ShiftScheme::p1qm1(), ShiftScheme::pqr()})
        for (double x : {0.4, M_PI / 2, 2.0, 3.0, M_PI}) {
          INFO("alpha = " << a << " " << s.name() << " x = " << x);
          CHECK(generating_function(a, s, x) == doctest::Approx(series(a, s, x, 100000)).epsilon(1e-7).scale(1e-7));
        }
  }

  TEST_CASE("nonpositive with a single zero at the origin") {
    for (double a = 1.1; a <= 2.0 + 1e-12; a += 0.1)
      for (auto s : {ShiftScheme::p1q0(), ShiftScheme::p1qm1()}) {
        const auto scan = scan_sign(a, s, 1024);
        INFO("alpha = " << a << " " << s.name() << " max " << scan.max_value);
        CHECK(scan.max_value <= 1e-14);
        CHECK_FALSE(scan.sign_change());
      }
    const auto s2 = scan_sign(1.5, ShiftScheme::p1q0(), 1024);
    CHECK(s2.argmax == 0.0);
    CHECK(s2.min_value < 0);
    CHECK_THROWS_AS(scan_sign(1.5, ShiftScheme::p1q0(), 10), ParameterError);
  }

  TEST_CASE("bounded by the alpha = 1 symbol") {
    for (auto s : {ShiftScheme::p1q0(), ShiftScheme::p1qm1()})
      for (double x = 0.05; x < M_PI; x += 0.05) {
        const double f1 = generating_function(1.0, s, x);
        for (double a = 1.05; a <= 2.0 + 1e-12; a += 0.05) {
          INFO(s.name() << " x = " << x << " alpha = " << a);
          CHECK(generating_function(a, s, x) <= f1 + 1e-14);
        }
      }
  }

  TEST_CASE("monotone in alpha away from the origin only") {
    for (auto s : {ShiftScheme::p1q0(), ShiftScheme::p1qm1()}) {
      for (double x : {M_PI / 2, 3 * M_PI / 4, M_PI}) {
        double prev = generating_function(1.0, s, x);
        for (int k = 1; k <= 20; ++k) {
          const double f = generating_function(1.0 + 0.05 * k, s, x);
          INFO(s.name() << " x = " << x << " alpha = " << 1.0 + 0.05 * k);
          CHECK(f <= prev + 1e-14);
          prev = f;
        }
      }
      // Near x = 0 the symbol behaves like -c x^alpha, which rises with alpha when x < 1.
      CHECK(generating_function(1.7, s, M_PI / 8) > generating_function(1.65, s, M_PI / 8));
      CHECK(generating_function(2.0, s, M_PI / 8) > generating_function(1.65, s, M_PI / 8));
    }
    CHECK(generating_function(2.0, ShiftScheme::p1q0(), M_PI / 4) >
          generating_function(1.95, ShiftScheme::p1q0(), M_PI / 4));
  }

  TEST_CASE("third-order symbol changes sign") {
    const auto scan = scan_sign(1.5, ShiftScheme::pqr(), 1024);
    CHECK(scan.min_value < 0);
    CHECK(scan.max_value > 0);
    CHECK(scan.sign_change());
  }

  TEST_CASE("negative definite on the alpha grid") {
    for (double a : {1.1, 1.3, 1.5, 1.7, 1.9, 2.0})
      for (auto s : {ShiftScheme::p1q0(), ShiftScheme::p1qm1()})
        for (int n : {4, 16, 64, 256}) {
          INFO("alpha = " << a << " " << s.name() << " n = " << n);
          CHECK(certify_negative_definite(assemble_wsgd_matrix(a, s, n)).negative_definite);
        }
    const auto bad = certify_negative_definite(assemble_wsgd_matrix(1.5, ShiftScheme::custom(0, -1), 16));
    CHECK_FALSE(bad.negative_definite);
    CHECK(bad.failing_minor >= 1);
  }

  TEST_CASE("Rayleigh quotients inside the symbol range") {
    for (double a : {1.1, 1.5, 1.9})
      for (auto s : {ShiftScheme::p1q0(), ShiftScheme::p1qm1()}) {
        CHECK(rayleigh_bound_check(assemble_wsgd_matrix(a, s, 64), a, s, 200));
        CHECK(rayleigh_bound_check(assemble_wsgd_matrix(a, s, 2), a, s, 200));
      }
  }
}
