#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace selfdist {

// Bad arguments, malformed files, violated preconditions. CLI exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runtime numeric failures: infeasible samplers, failed residual checks,
// non-finite intermediate values. CLI exit code 3.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A covering certificate could not be issued: some mass lies outside every
// homothet. Carries the first offending atom. CLI exit code 4.
struct certificate_error : std::runtime_error {
  std::vector<double> offending_atom;
  double offending_weight;

  certificate_error(const std::string& msg, std::vector<double> atom, double weight)
      : std::runtime_error(msg), offending_atom(std::move(atom)), offending_weight(weight) {}
};

}  // namespace selfdist
