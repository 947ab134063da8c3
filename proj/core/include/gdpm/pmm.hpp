#pragma once

#include "gdpm/linops.hpp"

namespace gdpm {

/// Power-method-with-momentum state.  w_curr is unit norm; w_prev is the
/// previous unit iterate, and the zero vector at k = 0.
struct PmmState {
  Vector w_prev, w_curr;
  double nu_est = 0.0;
  int k = 0;
  double beta = 0.0;
};

/// Flips v so its largest-magnitude entry is positive, making direction
/// comparisons well-defined.
Vector canonical_sign(Vector v);

PmmState pmm_init(const Vector& w0, double beta);

/// w = M w_k - beta*w_{k-1}; nu = w'w_k / ||w_k||^2; w_{k+1} = w/||w||.
/// One matvec.  Throws NumericalError("degenerate iterate") when w vanishes
/// (w_k in the kernel of M with beta = 0).
PmmState pmm_step(const SymmetricOperator& m, const PmmState& st);

struct PmmResult {
  double nu = 0.0;
  Vector w;  // unit, canonical sign
  int iters = 0;
};

/// Runs the power method with momentum until the Rayleigh estimate settles
/// (|nu_{k+1} - nu_k| <= tol*max(1,|nu_k|)), the eigen-residual
/// ||M w - nu w|| drops to tol, or max_iter.
PmmResult run_pmm(const SymmetricOperator& m, const Vector& w0, double beta, double tol,
                  int max_iter);

/// The momentum value (nu2/2)^2 that is optimal for a dominant pair
/// (nu1, nu2); exposed explicitly because nu2 is rarely known a priori.
inline double optimal_pmm_momentum(double nu2) { return 0.25 * nu2 * nu2; }

}  // namespace gdpm
