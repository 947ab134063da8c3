#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>

namespace gdpm {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Hybrid absolute/relative comparison used throughout: |a-b| <= atol + rtol*max(|a|,|b|).
inline bool approx_equal(double a, double b, double atol = 1e-12, double rtol = 1e-9) {
  return std::abs(a - b) <= atol + rtol * std::max(std::abs(a), std::abs(b));
}

/// Raised when an algorithm hits a numerically meaningless state (degenerate
/// iterate, zero gradient where an estimate is required, inexact eigenvalue).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gdpm
