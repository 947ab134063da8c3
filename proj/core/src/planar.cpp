#include "gdpm/planar.hpp"

#include <algorithm>
#include <cmath>

#include "gdpm/gdeig.hpp"
#include "gdpm/jacobi_eig.hpp"

namespace gdpm {

bool PlanarResult::has_note(const std::string& s) const {
  return std::find(notes.begin(), notes.end(), s) != notes.end();
}

const char* to_string(PlanarResult::Nature n) {
  switch (n) {
    case PlanarResult::Nature::Minimizer: return "minimizer";
    case PlanarResult::Nature::SaddlePoint: return "saddle-point";
    case PlanarResult::Nature::Maximizer: return "maximizer";
    case PlanarResult::Nature::DegenerateRank1: return "degenerate-rank-1";
  }
  return "minimizer";
}

namespace {

Vector rot90(const Vector& v) {
  Vector r(2);
  r << -v[1], v[0];
  return r;
}

PlanarResult::Nature nature_from_signs(double l1, double l2) {
  if (l1 > 0.0 && l2 > 0.0) return PlanarResult::Nature::Minimizer;
  if (l1 < 0.0 && l2 < 0.0) return PlanarResult::Nature::Maximizer;
  return PlanarResult::Nature::SaddlePoint;
}

void require_planar(const QuadraticProblem& p) {
  if (p.dim() != 2) throw std::invalid_argument("planar solver requires n = 2");
}

/// Rank-deficient finish: lambda2 = 0, x1 already minimizes (exactly when b
/// is in range(A), in the least-squares sense otherwise, with ||g1|| = |v2'b|).
PlanarResult degenerate_rank1(const QuadraticProblem& p, const Vector& x1, const Vector& g1,
                              double l1, double l2, const Vector& v2,
                              std::vector<std::string> notes) {
  PlanarResult r;
  r.stationary_point = x1;
  r.lambda1 = l1;
  r.lambda2 = l2;
  r.v2 = v2;
  r.v1 = rot90(v2);
  r.nature = PlanarResult::Nature::DegenerateRank1;
  r.steps_used = 1;
  r.notes = std::move(notes);
  double res_scale = std::abs(l1) * (x1.norm() + 1.0) + p.b.norm();
  r.point_kind = g1.norm() <= 1e-9 * std::max(res_scale, 1.0)
                     ? PlanarResult::PointKind::Stationary
                     : PlanarResult::PointKind::LeastSquares;
  return r;
}

PlanarResult two_step_finish(const QuadraticProblem& p, const Vector& x0, const Vector& x1,
                             const Vector& g1, double l1, double l2, const Vector& v2,
                             std::vector<std::string> notes) {
  Vector x2 = x1 - (1.0 / l2) * g1;
  Vector g2 = eval_g(p, x2);
  // The 1/lambda2 step amplifies rounding by the condition of the pair, so
  // the wrong-lambda1 detector scales with |l1/l2|.
  double scale = (std::abs(l1) * x0.norm() + p.b.norm()) * std::max(1.0, std::abs(l1 / l2));
  if (g2.norm() > 1e-9 * std::max(scale, 1.0))
    throw NumericalError("planar solver: lambda1 inexact (residual after two steps)");

  PlanarResult r;
  r.stationary_point = std::move(x2);
  r.point_kind = PlanarResult::PointKind::Stationary;
  r.lambda1 = l1;
  r.lambda2 = l2;
  r.v2 = v2;
  r.v1 = rot90(v2);
  r.nature = nature_from_signs(l1, l2);
  r.steps_used = 2;
  r.notes = std::move(notes);
  return r;
}

}  // namespace

PlanarResult planar_solve_known_l1(const QuadraticProblem& p, const Vector& x0) {
  require_planar(p);
  if (!p.lambda1 || *p.lambda1 == 0.0)
    throw std::invalid_argument("planar_solve_known_l1 requires a known nonzero lambda1");
  const double l1 = *p.lambda1;
  const Vector& b = p.b;

  Vector g0 = eval_g(p, x0);
  Vector x1 = x0 - (1.0 / l1) * g0;
  Vector g1 = eval_g(p, x1);

  const double zero_scale = 1e-12 * (x1.norm() + b.norm() / std::abs(l1) + 1e-300);

  // Route 1: x1 - b/lambda1 is colinear with v2.
  Vector w = x1 - b / l1;
  Vector v2;
  bool have_v2 = false;
  std::vector<std::string> notes;
  if (w.norm() > zero_scale) {
    v2 = w.normalized();
    have_v2 = true;
  } else {
    // Route 2: g1 + Hb, H = I - A/lambda1.
    Vector hb = b - (1.0 / l1) * p.op.apply(b);
    Vector w2 = g1 + hb;
    if (w2.norm() > zero_scale + 1e-12 * hb.norm()) {
      v2 = w2.normalized();
      have_v2 = true;
    }
  }

  if (have_v2) {
    double l2 = v2.dot(p.op.apply(v2));
    if (std::abs(l2) <= 1e-8 * std::abs(l1))
      return degenerate_rank1(p, x1, g1, l1, l2, v2, std::move(notes));
    return two_step_finish(p, x0, x1, g1, l1, l2, v2, std::move(notes));
  }

  // Both recovery routes vanished: repeated eigenvalue, rank-one with aligned
  // data, or an x0 with no v2 component.  The dense eigensolver settles it.
  EigDecomposition eig = dense_eig_oracle(p.op);
  double lo = eig.eigenvalues[0], hi = eig.eigenvalues[1];
  if (std::abs(hi - lo) <= 1e-10 * std::max({std::abs(hi), std::abs(lo), 1e-300})) {
    // Isotropic A: x1 = b/lambda1 is already the stationary point.
    PlanarResult r;
    r.stationary_point = x1;
    r.point_kind = PlanarResult::PointKind::Stationary;
    r.lambda1 = l1;
    r.lambda2 = lo;
    r.v1 = eig.eigenvectors.col(1);
    r.v2 = eig.eigenvectors.col(0);
    r.nature = l1 > 0.0 ? PlanarResult::Nature::Minimizer : PlanarResult::Nature::Maximizer;
    r.steps_used = 1;
    r.notes = {"repeated eigenvalue"};
    return r;
  }
  if (std::abs(hi - l1) > 1e-9 * std::max(1.0, std::abs(l1)))
    throw NumericalError("planar solver: lambda1 inexact (not the top eigenvalue)");
  notes.push_back("oracle fallback");
  v2 = eig.eigenvectors.col(0);
  double l2 = lo;
  if (std::abs(l2) <= 1e-8 * std::abs(l1))
    return degenerate_rank1(p, x1, g1, l1, l2, v2, std::move(notes));
  return two_step_finish(p, x0, x1, g1, l1, l2, v2, std::move(notes));
}

PlanarResult planar_solve_overestimate(const QuadraticProblem& p, const Vector& x0,
                                       double c_lambda1, double stall_tol, int max_iter) {
  require_planar(p);
  if (!(c_lambda1 > 0.0))
    throw std::invalid_argument("planar_solve_overestimate: c*lambda1 must be positive");
  if (max_iter < 2) throw std::invalid_argument("planar_solve_overestimate: max_iter must be >= 2");
  const double alpha = 1.0 / c_lambda1;
  const Vector& b = p.b;

  Vector x = x0;
  Vector g = eval_g(p, x0);
  double nu_prev = 0.0;
  bool have_prev = false;
  bool stalled = false;
  int steps = 0;

  for (int k = 0; k < max_iter; ++k) {
    if (g.norm() == 0.0) break;
    Vector u = apply_shifted({p.op, alpha, 0.0}, g);
    double nu = rayleigh_nu(g, u);
    x = x - alpha * g;
    g = u;  // gradient recurrence, beta = 0
    ++steps;
    if (have_prev && std::abs(nu - nu_prev) <= stall_tol * std::max(1.0, std::abs(nu_prev))) {
      stalled = true;
      break;
    }
    nu_prev = nu;
    have_prev = true;
  }

  std::vector<std::string> notes;
  Vector v2e;
  if (stalled && g.norm() > 0.0) {
    v2e = g.normalized();
  } else if (g.norm() == 0.0) {
    // Landed exactly on the stationary point; recover directions from the
    // dense solver and report what was found.
    EigDecomposition eig = dense_eig_oracle(p.op);
    v2e = eig.eigenvectors.col(0);
    notes.push_back("stationary before stall");
  } else {
    throw NumericalError("planar_solve_overestimate: no stall within max_iter (last nu = " +
                         std::to_string(nu_prev) + ", implied lambda = " +
                         std::to_string((1.0 - nu_prev) * c_lambda1) + ")");
  }

  // Rayleigh-refined eigen-pairs from the stalled direction.
  double l2r = v2e.dot(p.op.apply(v2e));
  Vector v1e = rot90(v2e);
  double l1r = v1e.dot(p.op.apply(v1e));
  if (l2r > l1r) {
    // The stalled direction was the top eigenvector: g0 had no v2 component.
    std::swap(l1r, l2r);
    std::swap(v1e, v2e);
    notes.push_back("missing component");
  }

  PlanarResult r;
  r.lambda1 = l1r;
  r.lambda2 = l2r;
  r.v1 = v1e;
  r.v2 = v2e;
  r.steps_used = steps;
  r.notes = std::move(notes);

  if (std::abs(l2r) <= 1e-8 * std::max(std::abs(l1r), 1e-300)) {
    Vector point = (v1e.dot(b) / l1r) * v1e;
    Vector gp = eval_g(p, point);
    r.stationary_point = std::move(point);
    r.nature = PlanarResult::Nature::DegenerateRank1;
    r.point_kind = gp.norm() <= 1e-9 * std::max(1.0, std::abs(l1r) + b.norm())
                       ? PlanarResult::PointKind::Stationary
                       : PlanarResult::PointKind::LeastSquares;
    r.steps_used = steps;
    return r;
  }

  r.stationary_point = (v1e.dot(b) / l1r) * v1e + (v2e.dot(b) / l2r) * v2e;
  r.point_kind = PlanarResult::PointKind::Stationary;
  r.nature = nature_from_signs(l1r, l2r);
  return r;
}

}  // namespace gdpm
