#pragma once

#include <vector>

#include "gdpm/linops.hpp"
#include "gdpm/solver.hpp"

namespace gdpm {

/// State of a momentum-descent run: positions and gradients at iterations
/// k and k-1.  At k = 0 both pairs coincide (x^{(-1)} = x^{(0)}).
struct GdmState {
  Vector x_prev, x_curr;
  Vector g_prev, g_curr;
  int k = 0;
  double alpha = 0.0;
  double beta = 0.0;
};

/// Thrown when a step produces non-finite values; carries the last finite state.
class DivergenceError : public NumericalError {
 public:
  DivergenceError(const std::string& msg, GdmState last)
      : NumericalError(msg), last_finite(std::move(last)) {}
  GdmState last_finite;
};

/// Initial state at x0. One matvec.
GdmState gdm_init(const QuadraticProblem& p, Vector x0, double alpha, double beta);

/// x+ = x - alpha*g + beta*(x - x_prev); the new gradient is evaluated
/// directly at the new point.  One matvec.
GdmState gdm_step(const QuadraticProblem& p, const GdmState& st);

/// Per-iteration step-size rule.
class StepSchedule {
 public:
  enum class Kind { Fixed, TwoOverLambda1, SpectralCycle };

  static StepSchedule fixed(double alpha);
  static StepSchedule two_over_lambda1();

  /// One step of size 1/lambda for each listed eigenvalue, cycling.  The list
  /// must be descending: retiring the largest eigenvalue first keeps the
  /// surviving gradient components contracting.
  static StepSchedule spectral_cycle(std::vector<double> eigs_descending);

  Kind kind() const { return kind_; }
  double step(int k, const QuadraticProblem& p) const;

 private:
  Kind kind_ = Kind::Fixed;
  double alpha_ = 0.0;
  std::vector<double> eigs_;
};

/// Gradient descent with momentum at a fixed or scheduled step size.
RunResult run_gdm(const QuadraticProblem& p, const Vector& x0, const SolverConfig& cfg);
RunResult run_gdm(const QuadraticProblem& p, const Vector& x0, const SolverConfig& cfg,
                  const StepSchedule& schedule);

/// One preliminary step of size 1/lambda1 from x_minus1.  The returned point
/// has no gradient component along the top eigenvector, which is what makes
/// the aggressive fixed step 2/lambda1 safe on positive definite problems.
/// Requires p.lambda1; throws std::invalid_argument telling the caller to
/// estimate it first otherwise.
Vector smart_init(const QuadraticProblem& p, const Vector& x_minus1);

/// smart_init followed by fixed-step descent at 2/lambda1.  Intended for
/// positive definite problems; with negative eigenvalues present the iterates
/// blow up along those directions, which is reported (stop Diverged or
/// Unbounded plus a divergence-report note), never hidden.
RunResult two_over_lambda1_run(const QuadraticProblem& p, const Vector& x_minus1,
                               const SolverConfig& cfg);

}  // namespace gdpm
