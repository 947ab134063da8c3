#include "gdpm/baselines.hpp"

#include "run_support.hpp"

namespace gdpm {

RunResult exact_step_gd(const QuadraticProblem& p, const Vector& x0, const SolverConfig& cfg) {
  if (cfg.max_iter < 1) throw std::invalid_argument("exact_step_gd: max_iter must be >= 1");

  RunResult res;
  Vector x = x0;
  Vector g = eval_g(p, x0);
  long matvecs = 1;
  int k = 0;
  const double g_tol = cfg.resolved_g_tol(g.norm());
  detail::GrowthWindow window(cfg.div_factor, cfg.div_window);

  auto emit = [&](Phase phase, double alpha_used) {
    IterationRecord row;
    row.k = k;
    row.f = f_from_gradient(x, g, p.b);
    row.gnorm_sq = g.squaredNorm();
    row.alpha_used = alpha_used;
    row.phase = phase;
    row.matvecs_cum = matvecs;
    res.trace.push_back(row);
    if (cfg.record_gradients) res.gradients.push_back(g);
    if (cfg.record_iterates) res.iterates.push_back(x);
  };

  emit(Phase::Inner, 0.0);
  window.push(g.norm());

  while (true) {
    double gnorm = g.norm();
    double f = f_from_gradient(x, g, p.b);
    if (gnorm == 0.0) {
      res.stop = StopReason::StationaryPoint;
      break;
    }
    if (gnorm <= g_tol) {
      res.stop = StopReason::Converged;
      break;
    }
    if (f <= cfg.f_floor) {
      res.stop = StopReason::Unbounded;
      res.note = "unbounded descent: f fell below the configured floor";
      break;
    }
    if (k >= cfg.max_iter) {
      res.stop = StopReason::MaxIterations;
      break;
    }

    Vector ag = p.op.apply(g);
    ++matvecs;
    double gag = g.dot(ag);
    double gg = g.squaredNorm();
    double a;
    Phase phase;
    if (gag > 0.0) {
      a = gg / gag;
      phase = Phase::Inner;
    } else {
      // Unbounded ray; declared cap.
      a = cfg.neg_curv_cap > 0.0 ? cfg.neg_curv_cap
          : p.lambda1 && *p.lambda1 > 0.0
              ? 10.0 / *p.lambda1
              : 10.0 * gg / std::max(std::abs(gag), 1e-300);
      phase = Phase::NegCurvature;
    }

    Vector x_next = x - a * g;
    Vector g_next = g - a * ag;
    if ((k + 1) % cfg.resync_every == 0) {
      g_next = eval_g(p, x_next);
      ++matvecs;
    }
    if (!detail::all_finite(x_next) || !detail::all_finite(g_next) ||
        !std::isfinite(f_from_gradient(x_next, g_next, p.b))) {
      res.stop = StopReason::Diverged;
      res.note = "non-finite values produced; trace holds the last finite state";
      break;
    }
    x = std::move(x_next);
    g = std::move(g_next);
    ++k;
    emit(phase, a);
    if (window.push(g.norm())) {
      res.stop = StopReason::Diverged;
      res.note = "gradient norm grew beyond the divergence window threshold";
      break;
    }
  }

  res.x_final = std::move(x);
  res.g_final = std::move(g);
  res.matvecs = matvecs;
  return res;
}

RunResult accelerated_gd(const QuadraticProblem& p, const Vector& x0, double lambda1,
                         double lambda_n, const SolverConfig& cfg) {
  if (cfg.max_iter < 1) throw std::invalid_argument("accelerated_gd: max_iter must be >= 1");
  if (!(lambda_n > 0.0))
    throw std::invalid_argument(
        "accelerated_gd requires lambda_n > 0 (a strongly convex objective)");
  if (!(lambda1 >= lambda_n))
    throw std::invalid_argument("accelerated_gd: lambda1 must be >= lambda_n");

  const double kappa = lambda1 / lambda_n;
  const double momentum = (std::sqrt(kappa) - 1.0) / (std::sqrt(kappa) + 1.0);
  const double a = 1.0 / lambda1;

  RunResult res;
  Vector x = x0;
  Vector g_x = eval_g(p, x0);  // gradient at x
  Vector g_y = g_x;            // gradient at the extrapolated point y (y = x initially)
  Vector y = x0;
  long matvecs = 1;
  int k = 0;
  const double g_tol = cfg.resolved_g_tol(g_x.norm());

  auto emit = [&]() {
    IterationRecord row;
    row.k = k;
    row.f = f_from_gradient(x, g_x, p.b);
    row.gnorm_sq = g_x.squaredNorm();
    row.alpha_used = k == 0 ? 0.0 : a;
    row.phase = Phase::Inner;
    row.matvecs_cum = matvecs;
    res.trace.push_back(row);
    if (cfg.record_gradients) res.gradients.push_back(g_x);
    if (cfg.record_iterates) res.iterates.push_back(x);
  };

  emit();

  while (true) {
    double gnorm = g_x.norm();
    if (gnorm == 0.0) {
      res.stop = StopReason::StationaryPoint;
      break;
    }
    if (gnorm <= g_tol) {
      res.stop = StopReason::Converged;
      break;
    }
    if (k >= cfg.max_iter) {
      res.stop = StopReason::MaxIterations;
      break;
    }

    Vector agy = p.op.apply(g_y);
    ++matvecs;
    Vector x_next = y - a * g_y;
    Vector g_xnext = g_y - a * agy;
    Vector y_next = x_next + momentum * (x_next - x);
    Vector g_ynext = (1.0 + momentum) * g_xnext - momentum * g_x;
    if ((k + 1) % cfg.resync_every == 0) {
      g_xnext = eval_g(p, x_next);
      g_ynext = eval_g(p, y_next);
      matvecs += 2;
    }
    if (!detail::all_finite(x_next) || !detail::all_finite(g_xnext) ||
        !std::isfinite(f_from_gradient(x_next, g_xnext, p.b))) {
      res.stop = StopReason::Diverged;
      res.note = "non-finite values produced; trace holds the last finite state";
      break;
    }
    x = std::move(x_next);
    y = std::move(y_next);
    g_x = std::move(g_xnext);
    g_y = std::move(g_ynext);
    ++k;
    emit();
  }

  res.x_final = std::move(x);
  res.g_final = std::move(g_x);
  res.matvecs = matvecs;
  return res;
}

}  // namespace gdpm
