#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "wsgd/wsgd.hpp"

namespace wsgd::cli {

namespace {

struct Options {
  std::vector<double> alpha;
  double beta = 1.8;
  std::vector<std::string> scheme;
  std::vector<std::string> splitting;
  std::vector<int> n;
  bool n_given = false;
  int m = 0;
  double theta = 0.5;
  std::string example;
  std::string out;
  std::string format = "csv";
  int count = 10;
  int samples = 1024;
  std::string sampling;
  std::string max_norm;
};

std::string fmt(const char* f, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

ShiftScheme parse_scheme(const std::string& s) {
  if (s == "gl") return ShiftScheme::grunwald();
  if (s == "p1q0") return ShiftScheme::p1q0();
  if (s == "p1qm1") return ShiftScheme::p1qm1();
  if (s == "pqr") return ShiftScheme::pqr();
  throw ParameterError("unknown scheme '" + s + "' (expected gl, p1q0, p1qm1, pqr)");
}

SourceSampling parse_sampling(const std::string& s) {
  if (s == "midpoint") return SourceSampling::Midpoint;
  if (s == "average") return SourceSampling::Average;
  throw ParameterError("unknown sampling '" + s + "' (expected midpoint, average)");
}

MaxNormMode parse_max_norm(const std::string& s) {
  if (s == "all") return MaxNormMode::AllLevels;
  if (s == "final") return MaxNormMode::FinalTime;
  throw ParameterError("unknown max-norm mode '" + s + "' (expected all, final)");
}

double first(const std::vector<double>& v, double fallback) { return v.empty() ? fallback : v.front(); }

/// Writes to --out when given, otherwise to the console stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& console) : os_(&console) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
    os_ = file_.get();
  }
  std::ostream& operator*() { return *os_; }
  bool to_file() const { return bool(file_); }
  void close() {
    if (file_) {
      file_->close();
      if (!*file_) throw std::runtime_error("failed writing output file");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

int cmd_coeffs(const Options& o, std::ostream& out) {
  const auto scheme = parse_scheme(o.scheme.empty() ? "p1q0" : o.scheme.front());
  if (o.count < 1) throw ParameterError("--count must be positive");
  const double alpha = first(o.alpha, 1.5);
  WeightSequence<double> w;
  switch (scheme.kind) {
    case ShiftKind::Grunwald: w = grunwald_coefficients(alpha, o.count); break;
    case ShiftKind::PQR: w = wsgd3_weights(alpha, o.count); break;
    default: w = wsgd2_weights(alpha, scheme, o.count); break;
  }
  Sink sink(o.out, out);
  *sink << "k,w\n";
  for (Index k = 0; k < w.size(); ++k) *sink << k << ',' << fmt("%.17g", w[k]) << '\n';
  sink.close();
  return 0;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const auto scheme = parse_scheme(o.scheme.empty() ? "p1q0" : o.scheme.front());
  const double alpha = first(o.alpha, 1.5);
  if (!(alpha > 0) || alpha > 2) throw ParameterError("alpha must lie in (0, 2]");
  const auto scan = scan_sign(alpha, scheme, o.samples);
  Sink sink(o.out, out);
  *sink << "x,f\n";
  for (int k = 0; k < o.samples; ++k) {
    const double x = k == o.samples - 1 ? EIGEN_PI : EIGEN_PI * k / (o.samples - 1);
    *sink << fmt("%.17g", x) << ',' << fmt("%.17g", generating_function(alpha, scheme, x)) << '\n';
  }
  sink.close();
  out << "# min " << fmt("%.6e", scan.min_value) << " at x=" << fmt("%.6f", scan.argmin) << ", max "
      << fmt("%.6e", scan.max_value) << " at x=" << fmt("%.6f", scan.argmax)
      << ", sign change: " << (scan.sign_change() ? "yes" : "no") << '\n';
  return 0;
}

int cmd_solve1d(const Options& o, std::ostream& out, std::ostream& err) {
  const auto id = parse_example_id(o.example.empty() ? "ex1" : o.example);
  const int N = o.n.empty() ? 32 : o.n.front();
  const double alpha = first(o.alpha, 1.5);
  Sink sink(o.out, out);
  if (id == ExampleId::Ex0_Steady) {
    const auto p = make_steady_example(alpha);
    const auto sol = steady_solve_3wsgd(p, N);
    Eigen::VectorXd e(N - 1);
    *sink << "x,u,exact\n";
    for (int k = 0; k <= N; ++k) {
      const double ex = p.exact(sol.x[k]);
      *sink << fmt("%.17g", sol.x[k]) << ',' << fmt("%.17g", sol.final_level()[k]) << ',' << fmt("%.17g", ex) << '\n';
      if (k > 0 && k < N) e[k - 1] = sol.final_level()[k] - ex;
    }
    sink.close();
    out << "# max_err " << fmt("%.5E", max_norm(e)) << ", l2_err " << fmt("%.5E", l2_norm(e, 1.0 / N)) << '\n';
    return 0;
  }
  if (id == ExampleId::Ex4_TwoDim) throw ParameterError("ex4 is two-dimensional; use solve2d");
  const auto p = make_example_1d(id, alpha);
  SolverConfig1D cfg;
  cfg.N = N;
  cfg.M = o.m > 0 ? o.m : N;
  cfg.theta = o.theta;
  cfg.scheme = parse_scheme(o.scheme.empty() ? "p1q0" : o.scheme.front());
  cfg.sampling = o.sampling.empty() ? SourceSampling::Average : parse_sampling(o.sampling);
  if (auto warn = cfg.validate(); !warn.empty()) err << "warning: " << warn << '\n';
  const auto sol = cn_wsgd_run(p, cfg);
  Eigen::VectorXd e(N - 1);
  *sink << "x,u,exact\n";
  for (int k = 0; k <= N; ++k) {
    const double ex = p.exact(sol.x[k], p.T);
    *sink << fmt("%.17g", sol.x[k]) << ',' << fmt("%.17g", sol.final_level()[k]) << ',' << fmt("%.17g", ex) << '\n';
    if (k > 0 && k < N) e[k - 1] = sol.final_level()[k] - ex;
  }
  sink.close();
  out << "# t=" << p.T << " max_err " << fmt("%.5E", max_norm(e)) << ", l2_err "
      << fmt("%.5E", l2_norm(e, (p.b - p.a) / N)) << '\n';
  return 0;
}

int cmd_solve2d(const Options& o, std::ostream& out) {
  if (!o.example.empty() && o.example != "ex4") throw ParameterError("solve2d runs ex4 only");
  const int N = o.n.empty() ? 16 : o.n.front();
  const auto p = make_example_2d(first(o.alpha, 1.2), o.beta);
  SolverConfig2D cfg;
  cfg.Nx = cfg.Ny = N;
  cfg.M = o.m > 0 ? o.m : N;
  cfg.scheme = parse_scheme(o.scheme.empty() ? "p1q0" : o.scheme.front());
  cfg.splitting = parse_splitting(o.splitting.empty() ? "pr" : o.splitting.front());
  cfg.sampling = o.sampling.empty() ? SourceSampling::Midpoint : parse_sampling(o.sampling);
  const auto sol = solve2d_run(p, cfg);
  Eigen::MatrixXd e(N - 1, N - 1);
  Sink sink(o.out, out);
  *sink << "x,y,u,exact\n";
  for (int j = 0; j <= N; ++j)
    for (int i = 0; i <= N; ++i) {
      const double ex = p.exact(sol.x[i], sol.y[j], p.T);
      *sink << fmt("%.17g", sol.x[i]) << ',' << fmt("%.17g", sol.y[j]) << ','
            << fmt("%.17g", sol.final(j, i)) << ',' << fmt("%.17g", ex) << '\n';
      if (i > 0 && j > 0 && i < N && j < N) e(j - 1, i - 1) = sol.final(j, i) - ex;
    }
  sink.close();
  out << "# t=" << p.T << " max_err " << fmt("%.5E", e.cwiseAbs().maxCoeff()) << ", l2_err "
      << fmt("%.5E", l2_norm(e, 1.0 / N, 1.0 / N)) << '\n';
  return 0;
}

int cmd_converge(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.example.empty()) throw ParameterError("converge needs --example");
  const auto id = parse_example_id(o.example);
  Study base = Study::defaults(id);
  if (o.n_given && o.n.empty()) throw ParameterError("--n was given an empty resolution list");
  if (!o.n.empty()) base.resolutions = o.n;
  base.M = o.m;
  base.theta = o.theta;
  base.beta = o.beta;
  if (!o.sampling.empty()) base.sampling = parse_sampling(o.sampling);
  if (!o.max_norm.empty()) base.max_mode = parse_max_norm(o.max_norm);
  if (o.format != "csv" && o.format != "md") throw ParameterError("--format must be csv or md");

  std::vector<double> alphas = o.alpha;
  if (alphas.empty()) {
    if (id == ExampleId::Ex0_Steady) alphas = {1.1, 1.9};
    else if (id == ExampleId::Ex4_TwoDim) alphas = {1.2};
    else alphas = {1.1, 1.5, 1.9};
  }
  std::vector<std::string> schemes = o.scheme;
  if (schemes.empty()) schemes = id == ExampleId::Ex0_Steady ? std::vector<std::string>{"pqr"}
                                                              : std::vector<std::string>{"p1q0", "p1qm1"};
  std::vector<std::string> splittings = o.splitting;
  if (id != ExampleId::Ex4_TwoDim) splittings = {"pr"};
  else if (splittings.empty()) splittings = {"lod", "pr", "douglas", "dyakonov"};

  // Validate everything before any work starts.
  std::vector<Study> studies;
  for (const auto& sp : splittings)
    for (double a : alphas)
      for (const auto& sc : schemes) {
        Study s = base;
        s.alpha = a;
        s.scheme = parse_scheme(sc);
        s.splitting = parse_splitting(sp);
        s.validate();
        studies.push_back(s);
      }

  std::vector<ConvergenceReport> reports;
  for (const auto& s : studies) {
    try {
      reports.push_back(run_study(s, [&](const ErrorRecord& r) {
        err << "[converge] " << to_string(s.example) << " alpha=" << s.alpha << " " << s.scheme.name()
            << (s.example == ExampleId::Ex4_TwoDim ? " " + to_string(s.splitting) : "") << " N=" << r.N
            << " done\n";
      }));
    } catch (const SolverError& e) {
      throw SolverError(std::string(e.what()) + " (example " + to_string(s.example) + ", alpha " +
                            std::to_string(s.alpha) + ", scheme " + s.scheme.name() + ")",
                        e.index());
    }
  }

  Sink sink(o.out, out);
  if (o.format == "csv") write_csv(*sink, reports);
  else
    for (const auto& r : reports) write_markdown(*sink, r);
  sink.close();
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted and shifted Grunwald difference solvers for space-fractional diffusion"};
  app.name("wsgd");
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key = value file; command-line flags win");

  Options o;
  app.add_option("--alpha", o.alpha, "Fractional order(s) in the x direction")->delimiter(',');
  app.add_option("--beta", o.beta, "Fractional order in y (ex4)");
  app.add_option("--scheme", o.scheme, "gl, p1q0, p1qm1 or pqr")->delimiter(',');
  app.add_option("--splitting", o.splitting, "pr, douglas, dyakonov, lod or full")->delimiter(',');
  app.add_option("--n", o.n, "Spatial intervals (a doubling list for converge)")->delimiter(',');
  app.add_option("--m", o.m, "Time steps (default: M = N)");
  app.add_option("--theta", o.theta, "Time weighting, 0.5 is Crank-Nicolson");
  app.add_option("--example", o.example, "ex0 .. ex4");
  app.add_option("--out", o.out, "Output path (default: stdout)");
  app.add_option("--format", o.format, "csv or md");
  app.add_option("--count", o.count, "Number of weights for coeffs");
  app.add_option("--samples", o.samples, "Samples on [0, pi] for spectrum");
  app.add_option("--sampling", o.sampling, "Source sampling per step: midpoint or average");
  app.add_option("--max-norm", o.max_norm, "Max-norm error over all time levels or the final one");

  auto* coeffs = app.add_subcommand("coeffs", "Print weight sequences");
  auto* spectrum = app.add_subcommand("spectrum", "Sample the generating function on [0, pi]");
  auto* solve1d = app.add_subcommand("solve1d", "Run one 1D solve and dump the final level");
  auto* solve2d = app.add_subcommand("solve2d", "Run one 2D solve and dump the final level");
  auto* converge = app.add_subcommand("converge", "Refinement study with error and rate columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  o.n_given = app.count("--n") > 0;
  try {
    if (coeffs->parsed()) return cmd_coeffs(o, out);
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (solve1d->parsed()) return cmd_solve1d(o, out, err);
    if (solve2d->parsed()) return cmd_solve2d(o, out);
    if (converge->parsed()) return cmd_converge(o, out, err);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace wsgd::cli
