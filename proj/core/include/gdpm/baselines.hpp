#pragma once

#include "gdpm/linops.hpp"
#include "gdpm/solver.hpp"

namespace gdpm {

/// Steepest descent with the exact 1-D step alpha_k = g'g / g'Ag.  When
/// g'Ag <= 0 the restriction of f to the ray is unbounded below; the solver
/// then takes a capped step (cfg.neg_curv_cap, or 10/lambda1 when lambda1 is
/// known) and labels the record neg-curvature.
RunResult exact_step_gd(const QuadraticProblem& p, const Vector& x0, const SolverConfig& cfg);

/// Constant-momentum accelerated gradient for strongly convex quadratics:
/// step 1/lambda1, extrapolation (sqrt(kappa)-1)/(sqrt(kappa)+1) with
/// kappa = lambda1/lambda_n.  Refuses lambda_n <= 0.
RunResult accelerated_gd(const QuadraticProblem& p, const Vector& x0, double lambda1,
                         double lambda_n, const SolverConfig& cfg);

}  // namespace gdpm
