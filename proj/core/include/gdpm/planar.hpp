#pragma once

#include <string>
#include <vector>

#include "gdpm/linops.hpp"

namespace gdpm {

/// Full output of the 2-D solver: a stationary (or least-squares) point, a
/// complete eigen-decomposition, and the nature of the stationary point.
struct PlanarResult {
  enum class Nature { Minimizer, SaddlePoint, Maximizer, DegenerateRank1 };
  enum class PointKind {
    Stationary,    // g = 0 at the returned point
    LeastSquares,  // rank-deficient A with b outside its range: the returned
                   // point solves the normal equations; f itself is unbounded
                   // below along the kernel direction
  };

  Vector stationary_point;
  PointKind point_kind = PointKind::Stationary;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  Vector v1, v2;  // unit, orthogonal
  Nature nature = Nature::Minimizer;
  int steps_used = 0;
  std::vector<std::string> notes;  // e.g. "repeated eigenvalue", "missing component"

  bool has_note(const std::string& s) const;
};

const char* to_string(PlanarResult::Nature n);

/// Case I: lambda1 is the exact top eigenvalue.  One step of size 1/lambda1
/// exposes v2 (either from the iterate or from the gradient), a second step
/// of size 1/lambda2 lands on the stationary point.  The rank-deficient
/// lambda2 = 0 case returns after the first step; the isotropic A = lambda1*I
/// case is resolved through the dense eigensolver and flagged.
/// Throws NumericalError("lambda1 inexact") when the two-step gradient does
/// not vanish.
PlanarResult planar_solve_known_l1(const QuadraticProblem& p, const Vector& x0);

/// Case II: only an overestimate c*lambda1 (c >= 1) is known.  Fixed-step
/// descent at 1/(c*lambda1) runs until the Rayleigh estimate stalls, the
/// stalled value yields (lambda2, v2), and the Case I finish applies with
/// Rayleigh-refined eigenvalues.  A stall at the implied top eigenvalue means
/// the initial gradient had no component along v2; the result is flagged
/// "missing component" and the recovered pairs are swapped into order.
PlanarResult planar_solve_overestimate(const QuadraticProblem& p, const Vector& x0,
                                       double c_lambda1, double stall_tol, int max_iter);

}  // namespace gdpm
