#include "wsgd/report.hpp"

#include <cstdio>
#include <sstream>

#include "wsgd/error.hpp"

namespace wsgd {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string opt(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double to_double(const std::string& s) {
  size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw ParameterError("malformed number in CSV: '" + s + "'");
  return v;
}

}  // namespace

void ConvergenceReport::compute_rates() {
  for (size_t k = 0; k < rows.size(); ++k) {
    auto& r = rows[k];
    r.rate_max.reset();
    r.rate_l2.reset();
    if (k == 0) continue;
    const auto& c = rows[k - 1];
    if (c.max_err > 0 && r.max_err > 0) r.rate_max = convergence_rate(c.max_err, r.max_err);
    if (c.l2_err > 0 && r.l2_err > 0) r.rate_l2 = convergence_rate(c.l2_err, r.l2_err);
  }
}

std::string csv_header() { return "example,alpha,beta,scheme,splitting,N,M,max_err,rate_max,l2_err,rate_l2"; }

void write_csv(std::ostream& os, const std::vector<ConvergenceReport>& reports, bool header) {
  if (header) os << csv_header() << '\n';
  for (const auto& rep : reports)
    for (const auto& r : rep.rows)
      os << rep.example << ',' << num(rep.alpha) << ',' << num(rep.beta) << ',' << rep.scheme << ','
         << rep.splitting << ',' << r.N << ',' << r.M << ',' << num(r.max_err) << ','
         << opt(r.rate_max) << ',' << num(r.l2_err) << ',' << opt(r.rate_l2) << '\n';
}

std::vector<ConvergenceReport> read_csv(std::istream& is) {
  std::vector<ConvergenceReport> out;
  std::string line;
  if (!std::getline(is, line) || line != csv_header())
    throw ParameterError("CSV report: missing or unexpected header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto c = split(line);
    if (c.size() != 11) throw ParameterError("CSV report: expected 11 fields, got " + std::to_string(c.size()));
    const double alpha = to_double(c[1]), beta = to_double(c[2]);
    if (out.empty() || out.back().example != c[0] || out.back().alpha != alpha ||
        out.back().beta != beta || out.back().scheme != c[3] || out.back().splitting != c[4]) {
      ConvergenceReport rep;
      rep.example = c[0];
      rep.alpha = alpha;
      rep.beta = beta;
      rep.scheme = c[3];
      rep.splitting = c[4];
      out.push_back(std::move(rep));
    }
    ErrorRecord r;
    r.N = std::stoi(c[5]);
    r.M = std::stoi(c[6]);
    r.max_err = to_double(c[7]);
    if (!c[8].empty()) r.rate_max = to_double(c[8]);
    r.l2_err = to_double(c[9]);
    if (!c[10].empty()) r.rate_l2 = to_double(c[10]);
    out.back().rows.push_back(r);
  }
  return out;
}

void write_markdown(std::ostream& os, const ConvergenceReport& rep) {
  char buf[160];
  auto brief = [&](double v) {
    std::snprintf(buf, sizeof buf, "%g", v);
    return std::string(buf);
  };
  os << "### " << rep.example << ", alpha = " << brief(rep.alpha);
  if (rep.example == "ex4") os << ", beta = " << brief(rep.beta);
  os << ", scheme = " << rep.scheme;
  if (!rep.splitting.empty()) os << ", splitting = " << rep.splitting;
  os << "\n\n| N | max err | rate | L2 err | rate |\n|---:|---:|---:|---:|---:|\n";
  for (const auto& r : rep.rows) {
    auto rate = [](const std::optional<double>& v) {
      char b[16];
      if (!v) return std::string("-");
      std::snprintf(b, sizeof b, "%.2f", *v);
      return std::string(b);
    };
    std::snprintf(buf, sizeof buf, "| %d | %.5E | %s | %.5E | %s |\n", r.N, r.max_err,
                  rate(r.rate_max).c_str(), r.l2_err, rate(r.rate_l2).c_str());
    os << buf;
  }
  os << '\n';
}

}  // namespace wsgd
