#include "wsgd/problems.hpp"

#include <cmath>
#include <limits>

#include "wsgd/error.hpp"

namespace wsgd {

namespace {

bool vanishes(const std::function<double(double)>& phi, double T) {
  if (!phi) return true;
  for (double t : {0.0, 0.25 * T, 0.5 * T, T})
    if (phi(t) != 0.0) return false;
  return true;
}

void check_alpha_solver(double alpha, const char* what) {
  if (!std::isfinite(alpha) || !(alpha > 1.0) || alpha > 2.0)
    throw ParameterError(std::string(what) + " must lie in (1, 2], got " + std::to_string(alpha));
}

// Sum over the four gamma-weighted terms of x^3 (1-x)^3 = x^3 - 3x^4 + 3x^5 - x^6,
// each differentiated to order alpha; `shift` is subtracted from the exponent.
double poly_terms(double x, double alpha, double shift) {
  static constexpr int k[] = {3, 4, 5, 6};
  static constexpr double c[] = {1, -3, 3, -1};
  double s = 0;
  for (int j = 0; j < 4; ++j) {
    const double coef = c[j] * std::tgamma(k[j] + 1.0) / std::tgamma(k[j] + 1.0 - alpha);
    s += coef * (std::pow(x, k[j] - shift) + std::pow(1.0 - x, k[j] - shift));
  }
  return s;
}

double bump(double x) { return x * x * x * (1 - x) * (1 - x) * (1 - x); }

}  // namespace

void Problem1D::validate() const {
  check_alpha_solver(alpha, "alpha");
  if (!(b > a)) throw ParameterError("domain needs b > a");
  if (!f || !u0) throw ParameterError("problem needs a source and an initial value");
  if (!phi_a || !phi_b) throw ParameterError("problem needs both boundary functions");
  if (variable()) return;
  if (K1 < 0 || K2 < 0) throw ParameterError("diffusion coefficients must be nonnegative");
  if (K1 == 0 && K2 == 0) throw ParameterError("K1 and K2 cannot both vanish");
  if (allow_nonzero_boundary) return;
  if (K1 != 0 && !vanishes(phi_a, T))
    throw ParameterError("K1 != 0 requires a homogeneous left boundary (set allow_nonzero_boundary)");
  if (K2 != 0 && !vanishes(phi_b, T))
    throw ParameterError("K2 != 0 requires a homogeneous right boundary (set allow_nonzero_boundary)");
}

void Problem2D::validate() const {
  check_alpha_solver(alpha, "alpha");
  check_alpha_solver(beta, "beta");
  if (!(b > a) || !(d > c)) throw ParameterError("domain needs b > a and d > c");
  if (K1p < 0 || K2p < 0 || K1m < 0 || K2m < 0)
    throw ParameterError("diffusion coefficients must be nonnegative");
  if (K1p == 0 && K2p == 0) throw ParameterError("K1p and K2p cannot both vanish");
  if (K1m == 0 && K2m == 0) throw ParameterError("K1m and K2m cannot both vanish");
  if (!f || !u0 || !phi) throw ParameterError("problem needs f, u0 and phi");
}

SteadyProblem1D make_steady_example(double alpha) {
  check_alpha_solver(alpha, "alpha");
  if (alpha == 2.0) throw ParameterError("the steady example needs alpha < 2");
  SteadyProblem1D p;
  p.name = "ex0";
  p.alpha = alpha;
  const double c = std::tgamma(3 + alpha) / 2;
  p.source = [c](double x) { return -c * x * x; };
  p.left = 0;
  p.right = 1;
  p.exact = [alpha](double x) { return std::pow(x, 2 + alpha); };
  return p;
}

Problem1D make_example_1d(ExampleId id, double alpha) {
  check_alpha_solver(alpha, "alpha");
  Problem1D p;
  p.alpha = alpha;
  p.phi_a = [](double) { return 0.0; };
  switch (id) {
    case ExampleId::Ex1_LeftOnly: {
      p.name = "ex1";
      p.K1 = 1;
      p.K2 = 0;
      const double g = std::tgamma(2 + alpha);
      p.f = [alpha, g](double x, double t) { return -std::exp(-t) * (std::pow(x, 1 + alpha) + g * x); };
      p.u0 = [alpha](double x) { return std::pow(x, 1 + alpha); };
      p.phi_b = [](double t) { return std::exp(-t); };
      p.exact = [alpha](double x, double t) { return std::exp(-t) * std::pow(x, 1 + alpha); };
      return p;
    }
    case ExampleId::Ex2_TwoSided:
    case ExampleId::Ex3_Variable: {
      const bool var = id == ExampleId::Ex3_Variable;
      p.name = var ? "ex3" : "ex2";
      p.K1 = 1;
      p.K2 = 1;
      // The variable coefficients x^alpha, (1-x)^alpha cancel the -alpha in each exponent.
      const double shift = var ? 0.0 : alpha;
      p.f = [alpha, shift](double x, double t) {
        return -std::exp(-t) * (bump(x) + poly_terms(x, alpha, shift));
      };
      if (var) {
        p.d1 = [alpha](double x) { return std::pow(x, alpha); };
        p.d2 = [alpha](double x) { return std::pow(1 - x, alpha); };
      }
      p.u0 = bump;
      p.phi_b = [](double) { return 0.0; };
      p.exact = [](double x, double t) { return std::exp(-t) * bump(x); };
      return p;
    }
    default:
      throw ParameterError("not a one-dimensional time-dependent example: " + to_string(id));
  }
}

Problem2D make_example_2d(double alpha, double beta) {
  check_alpha_solver(alpha, "alpha");
  check_alpha_solver(beta, "beta");
  Problem2D p;
  p.name = "ex4";
  p.alpha = alpha;
  p.beta = beta;
  p.f = [alpha, beta](double x, double y, double t) {
    return -std::exp(-t) * (bump(x) * bump(y) + poly_terms(x, alpha, alpha) * bump(y) +
                            poly_terms(y, beta, beta) * bump(x));
  };
  p.u0 = [](double x, double y) { return bump(x) * bump(y); };
  p.phi = [](double, double, double) { return 0.0; };
  p.exact = [](double x, double y, double t) { return std::exp(-t) * bump(x) * bump(y); };
  return p;
}

AnyProblem make_example(ExampleId id, double alpha, double beta) {
  switch (id) {
    case ExampleId::Ex0_Steady: return make_steady_example(alpha);
    case ExampleId::Ex4_TwoDim:
      return make_example_2d(std::isnan(alpha) ? 1.2 : alpha, std::isnan(beta) ? 1.8 : beta);
    default: return make_example_1d(id, alpha);
  }
}

ExampleId parse_example_id(const std::string& s) {
  if (s == "ex0") return ExampleId::Ex0_Steady;
  if (s == "ex1") return ExampleId::Ex1_LeftOnly;
  if (s == "ex2") return ExampleId::Ex2_TwoSided;
  if (s == "ex3") return ExampleId::Ex3_Variable;
  if (s == "ex4") return ExampleId::Ex4_TwoDim;
  throw ParameterError("unknown example '" + s + "' (expected ex0..ex4)");
}

std::string to_string(ExampleId id) {
  switch (id) {
    case ExampleId::Ex0_Steady: return "ex0";
    case ExampleId::Ex1_LeftOnly: return "ex1";
    case ExampleId::Ex2_TwoSided: return "ex2";
    case ExampleId::Ex3_Variable: return "ex3";
    case ExampleId::Ex4_TwoDim: return "ex4";
  }
  return "?";
}

double max_norm(const Eigen::Ref<const Eigen::VectorXd>& v) {
  return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
}

double l2_norm(const Eigen::Ref<const Eigen::VectorXd>& v, double h) {
  return std::sqrt(h * v.squaredNorm());
}

double l2_norm(const Eigen::Ref<const Eigen::MatrixXd>& v, double hx, double hy) {
  return std::sqrt(hx * hy * v.squaredNorm());
}

double convergence_rate(double err_coarse, double err_fine) {
  if (!(err_coarse > 0) || !(err_fine > 0))
    throw ParameterError("convergence_rate needs positive errors");
  return std::log2(err_coarse / err_fine);
}

}  // namespace wsgd
