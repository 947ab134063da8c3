#pragma once

#include <optional>
#include <utility>

#include "gdpm/gdm.hpp"
#include "gdpm/linops.hpp"
#include "gdpm/solver.hpp"

namespace gdpm {

/// Leftmost eigen-pair estimate extracted from a gradient-descent run.
/// The estimate reported at iteration k is built from the gradient pair
/// (g^{(k-1)}, g^{(k)}): nu1 is the Rayleigh estimate of the dominant
/// eigenvalue of the shifted map, lambda_n = (1 + beta - nu1)/alpha, the
/// direction is the normalized gradient g^{(k)}, and delta is the
/// eigen-residual ||A g - lambda_n g|| on the unnormalized g^{(k)}.
struct EigEstimate {
  double nu1 = 0.0;
  double lambda_n = 0.0;
  Vector direction;
  std::optional<double> delta;
  std::optional<double> delta_rel;
};

enum class Curvature { PositiveDefiniteSoFar, SingularDetected, IndefiniteDetected };

const char* to_string(Curvature c);

/// Evidence-so-far classification, not a proof: a nu1 above 1 + beta shows a
/// negative eigenvalue exists; nu1 at 1 + beta shows a zero one.
struct CurvatureVerdict {
  Curvature kind = Curvature::PositiveDefiniteSoFar;
  std::optional<EigEstimate> evidence;
};

/// Rayleigh quotient g_a'g_b / g_a'g_a (with g_b the shifted map applied to
/// g_a).  Throws NumericalError("converged before estimate") when g_a = 0.
double rayleigh_nu(const Vector& g_a, const Vector& g_b);

CurvatureVerdict classify(const EigEstimate& est, double beta, double tol_class);

/// One descent step plus the eigen-estimate it yields.  Uses one matvec for
/// the shifted product (which also advances the gradient via the recurrence
/// g+ = u - beta*g_prev), plus one more for delta when cfg.want_delta.
std::pair<GdmState, EigEstimate> gdeig_step(const QuadraticProblem& p, const GdmState& st,
                                            const SolverConfig& cfg);

struct GdeigResult {
  RunResult run;
  std::optional<EigEstimate> final_estimate;
  std::optional<CurvatureVerdict> verdict;

  // Max relative gap between the gradient recurrence and a direct gradient
  // evaluation, sampled every cfg.resync_every iterations.
  double recurrence_drift = 0.0;

  // Captured vectors by iteration index (only with record_iterates/gradients).
  const Vector& iterate(int k) const { return run.iterates.at(static_cast<std::size_t>(k)); }
  const Vector& gradient(int k) const { return run.gradients.at(static_cast<std::size_t>(k)); }
};

/// Fixed-step descent with per-iteration eigen-estimates.  Inside the loop
/// delta costs no extra matvec: A g^{(k)} is recovered from the next shifted
/// product as ((1+beta) g - u)/alpha, so each trace row's delta is filled one
/// iteration later (the final row pays one closing matvec).
///
/// Like any power iteration, the leftmost pair is only reachable when the
/// initial gradient carries a component along it; a start inside the
/// complementary invariant subspace converges to whichever mode dominates
/// there (a zero initial gradient stops at once with a "stationary start"
/// note and no estimates).
GdeigResult run_gdeig(const QuadraticProblem& p, const Vector& x0, const SolverConfig& cfg);

}  // namespace gdpm
