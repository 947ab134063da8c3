#include "gdpm/kick.hpp"

#include "gdpm/pmm.hpp"
#include "run_support.hpp"

namespace gdpm {

std::pair<Vector, Vector> choose_kick_candidates(const Vector& x, const Vector& g, double alpha,
                                                 double lambda_n_est, KickMode mode) {
  if (lambda_n_est == 0.0)
    throw std::invalid_argument("choose_kick_candidates: lambda_n estimate is zero");
  double t = 1.0 / lambda_n_est;
  if (mode == KickMode::EscapeSaddle) t = std::abs(t);
  Vector x_tilde = x - t * g;
  Vector x_hat = x - alpha * g;
  return {std::move(x_tilde), std::move(x_hat)};
}

GdeigResult run_kick(const QuadraticProblem& p, const Vector& x0, const KickConfig& kc,
                     const SolverConfig& cfg) {
  if (kc.s < 1) throw std::invalid_argument("run_kick: s must be >= 1");
  if (cfg.max_iter < 1) throw std::invalid_argument("run_kick: max_iter must be >= 1");

  double alpha_main = cfg.alpha;
  double alpha_first = cfg.alpha;
  if (kc.use_two_over_lambda1) {
    if (!p.lambda1 || !(*p.lambda1 > 0.0))
      throw std::invalid_argument("run_kick: use_two_over_lambda1 requires a known lambda1");
    alpha_main = 2.0 / *p.lambda1;
    alpha_first = 1.0 / *p.lambda1;
  }
  if (!(alpha_main > 0.0)) throw std::invalid_argument("run_kick: alpha must be positive");
  const double beta = cfg.beta;
  const double alpha_pair = kc.s >= 2 ? alpha_main : alpha_first;
  const double tol_class = cfg.resolved_tol_class();

  GdeigResult out;
  RunResult& res = out.run;

  Vector x = x0;
  Vector g = eval_g(p, x0);
  long matvecs = 1;
  int k = 0;
  const double g_tol = cfg.resolved_g_tol(g.norm());
  detail::GrowthWindow window(cfg.div_factor, cfg.div_window);
  int best_rank = -1;
  bool done = false;

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
    return res.trace.size() - 1;
  };

  // Returns true when the run should stop at the current state.
  auto should_stop = [&]() {
    double gnorm = g.norm();
    double f = f_from_gradient(x, g, p.b);
    if (gnorm == 0.0) {
      res.stop = StopReason::StationaryPoint;
      return true;
    }
    if (gnorm <= g_tol) {
      res.stop = StopReason::Converged;
      return true;
    }
    if (f <= cfg.f_floor) {
      res.stop = StopReason::Unbounded;
      res.note = "unbounded descent: f fell below the configured floor";
      return true;
    }
    if (k >= cfg.max_iter) {
      res.stop = StopReason::MaxIterations;
      return true;
    }
    return false;
  };

  emit(Phase::Inner, 0.0);
  window.push(g.norm());

  while (!done) {
    Vector x_prev = x;  // momentum restarts every outer loop
    Vector g_before_last = g;

    for (int ell = 1; ell <= kc.s; ++ell) {
      if (should_stop()) {
        done = true;
        break;
      }
      double a = ell == 1 ? alpha_first : alpha_main;
      Vector x_next = x - a * g + beta * (x - x_prev);
      Vector g_next = eval_g(p, x_next);
      ++matvecs;
      if (!detail::all_finite(x_next) || !detail::all_finite(g_next) ||
          !std::isfinite(f_from_gradient(x_next, g_next, p.b))) {
        res.stop = StopReason::Diverged;
        res.note = "non-finite values produced; trace holds the last finite state";
        done = true;
        break;
      }
      x_prev = std::move(x);
      x = std::move(x_next);
      g_before_last = std::move(g);
      g = std::move(g_next);
      ++k;
      emit(Phase::Inner, a);
      if (window.push(g.norm())) {
        res.stop = StopReason::Diverged;
        res.note = "gradient norm grew beyond the divergence window threshold";
        done = true;
        break;
      }
    }
    if (done) break;
    if (should_stop()) break;

    // Estimate from the last inner gradient pair, then the kick attempt.
    double nu = rayleigh_nu(g_before_last, g);
    double lambda_n = (1.0 + beta - nu) / alpha_pair;

    EigEstimate est;
    est.nu1 = nu;
    est.lambda_n = lambda_n;
    est.direction = canonical_sign(Vector(g / g.norm()));

    Phase phase = Phase::Inner;
    double step_used = alpha_main;
    std::optional<double> f_tilde, f_hat;
    Vector x_new;
    if (lambda_n != 0.0) {
      double t = 1.0 / lambda_n;
      if (kc.mode == KickMode::EscapeSaddle) t = std::abs(t);
      Vector ag = p.op.apply(g);
      ++matvecs;
      double gg = g.squaredNorm();
      double gag = g.dot(ag);
      double fx = f_from_gradient(x, g, p.b);
      f_tilde = fx - t * gg + 0.5 * t * t * gag;
      f_hat = fx - alpha_main * gg + 0.5 * alpha_main * alpha_main * gag;
      bool accepted;
      if (kc.mode == KickMode::EscapeSaddle) {
        accepted = *f_tilde < *f_hat;
      } else {
        // Toward a stationary point the yardstick is stationarity, not
        // descent: g(x - t g) = g - t Ag comes free from the same product.
        accepted = (g - t * ag).norm() < (g - alpha_main * ag).norm();
      }
      step_used = accepted ? t : alpha_main;
      phase = accepted ? Phase::KickAccepted : Phase::KickRejected;
      x_new = x - step_used * g;

      double d = (ag - lambda_n * g).norm();
      est.delta = d;
      est.delta_rel = d / g.norm();
    } else {
      // Singular safeguard: a zero estimate means no kick this outer loop.
      x_new = x - alpha_main * g;
    }

    Vector g_new = eval_g(p, x_new);
    ++matvecs;
    if (!detail::all_finite(x_new) || !detail::all_finite(g_new) ||
        !std::isfinite(f_from_gradient(x_new, g_new, p.b))) {
      res.stop = StopReason::Diverged;
      res.note = "non-finite values produced; trace holds the last finite state";
      break;
    }
    x = std::move(x_new);
    g = std::move(g_new);
    ++k;
    auto idx = emit(phase, step_used);
    if (lambda_n != 0.0) {
      auto& row = res.trace[idx];
      row.nu1 = nu;
      row.lambda_n = lambda_n;
      row.delta = est.delta;
      row.delta_rel = est.delta_rel;
      row.f_kick_cand = f_tilde;
      row.f_fixed_cand = f_hat;
      if (phase == Phase::KickAccepted || phase == Phase::KickRejected)
        row.f = phase == Phase::KickAccepted ? *f_tilde : *f_hat;

      out.final_estimate = est;
      CurvatureVerdict v = classify(est, beta, tol_class);
      int r = v.kind == Curvature::IndefiniteDetected  ? 2
              : v.kind == Curvature::SingularDetected ? 1
                                                      : 0;
      if (r > best_rank) {
        best_rank = r;
        out.verdict = v;
      }
    }
    if (window.push(g.norm())) {
      res.stop = StopReason::Diverged;
      res.note = "gradient norm grew beyond the divergence window threshold";
      break;
    }
  }

  res.x_final = std::move(x);
  res.g_final = std::move(g);
  res.matvecs = matvecs;
  return out;
}

}  // namespace gdpm
