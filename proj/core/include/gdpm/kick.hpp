#pragma once

#include <utility>

#include "gdpm/gdeig.hpp"

namespace gdpm {

enum class KickMode {
  EscapeSaddle,      // long step of size |1/lambda_n|
  TowardStationary,  // signed step 1/lambda_n (heads to the saddle when lambda_n < 0)
};

struct KickConfig {
  int s = 9;  // fixed-step iterations between kick attempts (kick every s+1 steps)
  KickMode mode = KickMode::EscapeSaddle;

  // Inner steps of size 2/lambda1, except the first step of every inner loop
  // which must stay at 1/lambda1 to retire the top eigen-component that the
  // previous kick reintroduced.
  bool use_two_over_lambda1 = false;
};

/// The two candidate points of a kick attempt: the long step x_tilde and the
/// fixed step x_hat.  Requires lambda_n_est != 0 (throws otherwise; the
/// caller's safeguard normally prevents this).
std::pair<Vector, Vector> choose_kick_candidates(const Vector& x, const Vector& g, double alpha,
                                                 double lambda_n_est, KickMode mode);

/// s fixed momentum steps, then one kick attempt: the long step is taken only
/// when its function value beats the fixed step's (ties keep the fixed step).
/// In TowardStationary mode acceptance compares gradient norms instead, since
/// stepping toward a saddle raises f by construction.  Momentum resets after
/// every kick attempt.  Trace rows mark phases and the candidate f values;
/// matvec cost is s+2 per outer loop.
GdeigResult run_kick(const QuadraticProblem& p, const Vector& x0, const KickConfig& kc,
                     const SolverConfig& cfg);

}  // namespace gdpm
