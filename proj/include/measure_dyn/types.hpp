#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace measure_dyn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Invalid configuration or construction input (CLI exit code 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure at run time: excessive leakage, instability, negative
/// densities beyond tolerance (CLI exit code 2).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller handed an object in an invalid state (e.g. an unnormalized row
/// where a normalized one is required).
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace measure_dyn
