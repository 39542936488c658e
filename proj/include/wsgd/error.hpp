#pragma once

#include <stdexcept>
#include <string>

namespace wsgd {

/// Invalid input: out-of-range order, bad shift tuple, mismatched sizes.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A linear solve broke down. `index()` is the offending pivot (0-based), or -1.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what, long index = -1)
      : std::runtime_error(what), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

}  // namespace wsgd
