#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wsgd/problems.hpp"
#include "wsgd/report.hpp"
#include "wsgd/solve1d.hpp"
#include "wsgd/solve2d.hpp"

namespace wsgd {

/// Which time levels the max-norm error is taken over.
enum class MaxNormMode {
  AllLevels,  ///< max over n = 1..M of the interior max error
  FinalTime   ///< interior max error at t = T only
};

/// A refinement sweep for one example and one parameter combination, with M = N.
struct Study {
  ExampleId example = ExampleId::Ex1_LeftOnly;
  double alpha = 1.5;
  double beta = 1.8;  ///< Ex4 only
  ShiftScheme scheme = ShiftScheme::p1q0();
  Splitting splitting = Splitting::PR;  ///< Ex4 only
  std::vector<int> resolutions;
  double theta = 0.5;
  SourceSampling sampling = SourceSampling::Average;
  MaxNormMode max_mode = MaxNormMode::AllLevels;
  int M = 0;  ///< 0 means M = N

  /// The defaults that regenerate the published tables for this example.
  static Study defaults(ExampleId id);
  void validate() const;
};

/// Errors against the exact solution for a single resolution.
ErrorRecord run_resolution(const Study& study, int N);

/// All resolutions, in order, with rates. `progress` is called once per resolution.
ConvergenceReport run_study(const Study& study,
                            const std::function<void(const ErrorRecord&)>& progress = {});

}  // namespace wsgd
