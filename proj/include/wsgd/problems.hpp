#pragma once

#include <Eigen/Core>

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <variant>

namespace wsgd {

/// -D^alpha u = s(x) on (a, b), Dirichlet data at both ends, left-sided derivative only.
struct SteadyProblem1D {
  std::string name;
  double a = 0, b = 1;
  double alpha = 1.5;
  std::function<double(double)> source;
  double left = 0, right = 0;
  std::function<double(double)> exact;  // optional
};

/// u_t = d1(x) D_left^alpha u + d2(x) D_right^alpha u + f(x, t).
/// Constant coefficients use K1/K2; setting d1 or d2 switches to the variable form.
struct Problem1D {
  std::string name;
  double a = 0, b = 1;
  double alpha = 1.5;
  double K1 = 1, K2 = 0;
  std::function<double(double)> d1, d2;
  std::function<double(double, double)> f;
  std::function<double(double)> u0;
  std::function<double(double)> phi_a, phi_b;
  std::function<double(double, double)> exact;  // optional
  double T = 1;
  /// Skip the "phi vanishes where the coefficient is nonzero" requirement.
  bool allow_nonzero_boundary = false;

  bool variable() const { return bool(d1) || bool(d2); }
  void validate() const;
};

/// u_t = K1p D_{0,x} u + K2p D_{x,1} u + K1m D_{0,y} u + K2m D_{y,1} u + f on (a,b)x(c,d).
struct Problem2D {
  std::string name;
  double a = 0, b = 1, c = 0, d = 1;
  double alpha = 1.2, beta = 1.8;
  double K1p = 1, K2p = 1, K1m = 1, K2m = 1;
  std::function<double(double, double, double)> f;
  std::function<double(double, double)> u0;
  std::function<double(double, double, double)> phi;
  std::function<double(double, double, double)> exact;  // optional
  double T = 1;

  void validate() const;
};

enum class ExampleId { Ex0_Steady, Ex1_LeftOnly, Ex2_TwoSided, Ex3_Variable, Ex4_TwoDim };

using AnyProblem = std::variant<SteadyProblem1D, Problem1D, Problem2D>;

/// The manufactured-solution examples. beta is used by Ex4 only; NaN keeps the default 1.8
/// (alpha defaults to 1.2 for Ex4 when NaN).
AnyProblem make_example(ExampleId id, double alpha, double beta = std::numeric_limits<double>::quiet_NaN());

SteadyProblem1D make_steady_example(double alpha);
Problem1D make_example_1d(ExampleId id, double alpha);
Problem2D make_example_2d(double alpha = 1.2, double beta = 1.8);

ExampleId parse_example_id(const std::string& s);
std::string to_string(ExampleId id);

double max_norm(const Eigen::Ref<const Eigen::VectorXd>& v);
/// sqrt(h sum v_i^2)
double l2_norm(const Eigen::Ref<const Eigen::VectorXd>& v, double h);
/// sqrt(hx hy sum v_ij^2)
double l2_norm(const Eigen::Ref<const Eigen::MatrixXd>& v, double hx, double hy);

/// log2(coarse / fine) for a halving refinement.
double convergence_rate(double err_coarse, double err_fine);

struct ErrorRecord {
  int N = 0, M = 0;
  double max_err = 0, l2_err = 0;
  std::optional<double> rate_max, rate_l2;
};

}  // namespace wsgd
