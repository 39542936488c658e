#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "wsgd/problems.hpp"

namespace wsgd {

/// One convergence table: a refinement sweep for a fixed example/order/scheme.
struct ConvergenceReport {
  std::string example;
  double alpha = 0, beta = 0;
  std::string scheme, splitting;
  std::vector<ErrorRecord> rows;

  /// Fill rate_max/rate_l2 from consecutive rows.
  void compute_rates();
};

/// Header line shared by every CSV report.
std::string csv_header();
/// Rows at full double precision; several reports may be concatenated under one header.
void write_csv(std::ostream& os, const std::vector<ConvergenceReport>& reports, bool header = true);
std::vector<ConvergenceReport> read_csv(std::istream& is);

/// The table layout N | max err | rate | L2 err | rate, errors as %.5E.
void write_markdown(std::ostream& os, const ConvergenceReport& report);

}  // namespace wsgd
