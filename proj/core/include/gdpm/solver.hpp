#pragma once

#include <string>
#include <vector>

#include "gdpm/trace.hpp"
#include "gdpm/types.hpp"

namespace gdpm {

enum class StopReason {
  Converged,             // ||g|| reached the gradient tolerance
  EigResidualConverged,  // delta_rel reached eig_tol
  Unbounded,             // f fell below f_floor (indefinite descent)
  MaxIterations,
  Diverged,              // non-finite values or sustained gradient growth
  StationaryPoint,       // exactly zero gradient
};

const char* to_string(StopReason r);

struct SolverConfig {
  double alpha = 0.0;
  double beta = 0.0;
  int max_iter = 20000;

  // Stop at ||g|| <= g_tol_rel * max(1, ||g0||); g_tol_abs > 0 overrides.
  double g_tol_rel = 1e-8;
  double g_tol_abs = 0.0;

  // Unbounded-descent floor for indefinite problems.
  double f_floor = -1e12;

  // Diverged when ||g|| grows by div_factor over div_window consecutive iterations.
  double div_factor = 1e6;
  int div_window = 20;

  // Stop when delta_rel <= eig_tol (0 disables the eigen-residual stop).
  double eig_tol = 0.0;

  // Curvature classification tolerance; 0 means 1e-8*(1+beta).
  double tol_class = 0.0;

  // Recurrence-based loops recompute g from x this often (drift monitoring).
  int resync_every = 50;

  // Compute the delta residual per iteration (gdeig).
  bool want_delta = true;

  // Step cap along negative-curvature rays in exact-step descent; 0 -> auto.
  double neg_curv_cap = 0.0;

  bool record_gradients = false;
  bool record_iterates = false;

  double resolved_g_tol(double g0_norm) const {
    return g_tol_abs > 0.0 ? g_tol_abs : g_tol_rel * std::max(1.0, g0_norm);
  }
  double resolved_tol_class() const {
    return tol_class > 0.0 ? tol_class : 1e-8 * (1.0 + beta);
  }
};

struct RunResult {
  Trace trace;
  StopReason stop = StopReason::MaxIterations;
  Vector x_final;
  Vector g_final;
  long matvecs = 0;
  std::string note;

  // Captured per-iteration vectors when the config asks for them.
  std::vector<Vector> gradients;
  std::vector<Vector> iterates;

  int iterations() const { return trace.empty() ? 0 : trace.back().k; }
  double final_f() const { return trace.empty() ? 0.0 : trace.back().f; }
  double final_gnorm() const {
    return trace.empty() ? 0.0 : std::sqrt(trace.back().gnorm_sq);
  }
};

}  // namespace gdpm
