#pragma once

#include <utility>

#include "gdpm/linops.hpp"

namespace gdpm {

/// The two locally quadratic saddle benchmarks with closed-form descent
/// dynamics, used as analytic ground truth for the generic solvers.

/// f(x) = x1^2/2 - sigma*x2^2/2, i.e. A = diag(1, -sigma), b = 0.
QuadraticProblem paternain_problem(double sigma);

/// f(x) = x1^2 - x2^2 on the neighbourhood [-1,1]^2: A = diag(2, -2), b = 0.
QuadraticProblem du_problem();

/// Exact iterate and gradient after k >= 1 fixed steps of size 1 on
/// paternain_problem: x_k = (0, (1+sigma)^k x2), g_k = (0, -sigma(1+sigma)^k x2).
std::pair<Vector, Vector> paternain_closed_form(double sigma, const Vector& x0, int k);

/// Exact iterate and gradient after k >= 0 fixed steps of size 1/4 on
/// du_problem: x_k = ((1/2)^k x1, (3/2)^k x2), g_k = A x_k.
std::pair<Vector, Vector> du_closed_form(const Vector& x0, int k);

/// The eigenvalue estimate reported after k >= 1 steps of the same run (the
/// estimate at k uses the gradient pair from steps k-1 and k):
///   ((1/2)^{2k-1} x1^2 + (3/2)^{2k-1} x2^2) / ((1/2)^{2k-2} x1^2 + (3/2)^{2k-2} x2^2),
/// which tends to 3/2 whenever x2 != 0.
double du_nu_closed_form(const Vector& x0, int k);

/// Width 2*(3/2)^{-exp(1/eps)} of the thin initialization band; underflows to
/// exactly 0 for small eps, which is the documented behaviour.
double initialization_band_width(double epsilon);

}  // namespace gdpm
