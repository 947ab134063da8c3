#include "gdpm/gdeig.hpp"

#include "gdpm/pmm.hpp"
#include "run_support.hpp"

namespace gdpm {

const char* to_string(Curvature c) {
  switch (c) {
    case Curvature::PositiveDefiniteSoFar: return "positive-definite-so-far";
    case Curvature::SingularDetected: return "singular-detected";
    case Curvature::IndefiniteDetected: return "indefinite-detected";
  }
  return "positive-definite-so-far";
}

double rayleigh_nu(const Vector& g_a, const Vector& g_b) {
  double na2 = g_a.squaredNorm();
  if (na2 == 0.0) throw NumericalError("rayleigh_nu: converged before estimate");
  return g_a.dot(g_b) / na2;
}

CurvatureVerdict classify(const EigEstimate& est, double beta, double tol_class) {
  CurvatureVerdict v;
  v.evidence = est;
  if (est.nu1 > 1.0 + beta + tol_class)
    v.kind = Curvature::IndefiniteDetected;
  else if (std::abs(est.nu1 - (1.0 + beta)) <= tol_class)
    v.kind = Curvature::SingularDetected;
  else
    v.kind = Curvature::PositiveDefiniteSoFar;
  return v;
}

namespace {

Vector unit_or_zero(const Vector& v) {
  double n = v.norm();
  return n > 0.0 ? Vector(v / n) : Vector(Vector::Zero(v.size()));
}

int rank_of(Curvature c) {
  switch (c) {
    case Curvature::IndefiniteDetected: return 2;
    case Curvature::SingularDetected: return 1;
    case Curvature::PositiveDefiniteSoFar: return 0;
  }
  return 0;
}

}  // namespace

std::pair<GdmState, EigEstimate> gdeig_step(const QuadraticProblem& p, const GdmState& st,
                                            const SolverConfig& cfg) {
  if (st.g_curr.norm() == 0.0) throw NumericalError("gdeig_step: stationary point reached");
  const double alpha = st.alpha, beta = st.beta;

  GdmState next;
  next.alpha = alpha;
  next.beta = beta;
  next.k = st.k + 1;
  next.x_prev = st.x_curr;
  next.x_curr = st.x_curr - alpha * st.g_curr + beta * (st.x_curr - st.x_prev);

  Vector u = apply_shifted({p.op, alpha, beta}, st.g_curr);
  EigEstimate est;
  est.nu1 = rayleigh_nu(st.g_curr, u);
  est.lambda_n = (1.0 + beta - est.nu1) / alpha;
  next.g_prev = st.g_curr;
  next.g_curr = u - beta * st.g_prev;
  est.direction = canonical_sign(unit_or_zero(next.g_curr));

  if (cfg.want_delta) {
    Vector ag = p.op.apply(next.g_curr);
    double d = (ag - est.lambda_n * next.g_curr).norm();
    double gn = next.g_curr.norm();
    est.delta = d;
    est.delta_rel = gn > 0.0 ? d / gn : 0.0;
  }
  if (!detail::all_finite(next.x_curr) || !detail::all_finite(next.g_curr))
    throw DivergenceError("gdeig_step: non-finite values produced", st);
  return {std::move(next), std::move(est)};
}

GdeigResult run_gdeig(const QuadraticProblem& p, const Vector& x0, const SolverConfig& cfg) {
  if (cfg.max_iter < 1) throw std::invalid_argument("run_gdeig: max_iter must be >= 1");
  if (!(cfg.alpha > 0.0)) throw std::invalid_argument("run_gdeig: alpha must be positive");
  const double alpha = cfg.alpha, beta = cfg.beta;
  const double tol_class = cfg.resolved_tol_class();

  GdeigResult out;
  RunResult& res = out.run;

  Vector x = x0;
  Vector x_prev = x0;
  Vector g = eval_g(p, x0);
  Vector g_prev = g;
  long matvecs = 1;
  int k = 0;
  const double g_tol = cfg.resolved_g_tol(g.norm());
  detail::GrowthWindow window(cfg.div_factor, cfg.div_window);
  int best_rank = -1;

  {
    IterationRecord row;
    row.k = 0;
    row.f = f_from_gradient(x, g, p.b);
    row.gnorm_sq = g.squaredNorm();
    row.alpha_used = 0.0;
    row.matvecs_cum = matvecs;
    res.trace.push_back(row);
    window.push(g.norm());
    if (cfg.record_gradients) res.gradients.push_back(g);
    if (cfg.record_iterates) res.iterates.push_back(x);
  }

  while (true) {
    double gnorm = g.norm();
    double f = f_from_gradient(x, g, p.b);
    if (gnorm == 0.0) {
      res.stop = StopReason::StationaryPoint;
      if (k == 0) res.note = "stationary start: no estimates available";
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
    if (cfg.eig_tol > 0.0 && k >= 1) {
      const auto& dr = res.trace[static_cast<std::size_t>(k) - 1].delta_rel;
      if (dr && *dr <= cfg.eig_tol) {
        res.stop = StopReason::EigResidualConverged;
        break;
      }
    }
    if (k >= cfg.max_iter) {
      res.stop = StopReason::MaxIterations;
      break;
    }

    Vector u = apply_shifted({p.op, alpha, beta}, g);
    ++matvecs;

    // A g^{(k)} comes free from u, which completes the previous row's delta.
    if (cfg.want_delta && k >= 1) {
      auto& row = res.trace[static_cast<std::size_t>(k)];
      if (row.lambda_n && !row.delta) {
        Vector ag = ((1.0 + beta) * g - u) / alpha;
        double d = (ag - *row.lambda_n * g).norm();
        row.delta = d;
        row.delta_rel = gnorm > 0.0 ? d / gnorm : 0.0;
      }
    }

    double nu = rayleigh_nu(g, u);
    double lambda_n = (1.0 + beta - nu) / alpha;
    Vector x_next = x - alpha * g + beta * (x - x_prev);
    Vector g_next = u - beta * g_prev;

    if ((k + 1) % cfg.resync_every == 0) {
      Vector g_direct = eval_g(p, x_next);
      ++matvecs;
      double gap = (g_next - g_direct).norm() / std::max(1.0, g_direct.norm());
      out.recurrence_drift = std::max(out.recurrence_drift, gap);
      g_next = std::move(g_direct);
    }

    if (!detail::all_finite(x_next) || !detail::all_finite(g_next) ||
        !std::isfinite(f_from_gradient(x_next, g_next, p.b))) {
      res.stop = StopReason::Diverged;
      res.note = "non-finite values produced; trace holds the last finite state";
      break;
    }

    x_prev = std::move(x);
    x = std::move(x_next);
    g_prev = std::move(g);
    g = std::move(g_next);
    ++k;

    IterationRecord row;
    row.k = k;
    row.f = f_from_gradient(x, g, p.b);
    row.gnorm_sq = g.squaredNorm();
    row.nu1 = nu;
    row.lambda_n = lambda_n;
    row.alpha_used = alpha;
    row.matvecs_cum = matvecs;
    res.trace.push_back(row);
    if (cfg.record_gradients) res.gradients.push_back(g);
    if (cfg.record_iterates) res.iterates.push_back(x);

    EigEstimate est;
    est.nu1 = nu;
    est.lambda_n = lambda_n;
    est.direction = canonical_sign(unit_or_zero(g));
    out.final_estimate = est;

    CurvatureVerdict v = classify(est, beta, tol_class);
    if (rank_of(v.kind) > best_rank) {
      best_rank = rank_of(v.kind);
      out.verdict = v;
    }

    if (window.push(g.norm())) {
      res.stop = StopReason::Diverged;
      res.note = "gradient norm grew beyond the divergence window threshold";
      break;
    }
  }

  // Close out the last emitted estimate's residual.
  if (cfg.want_delta && k >= 1 && detail::all_finite(g)) {
    auto& row = res.trace[static_cast<std::size_t>(k)];
    if (row.lambda_n && !row.delta) {
      Vector ag = p.op.apply(g);
      ++matvecs;
      double d = (ag - *row.lambda_n * g).norm();
      double gn = g.norm();
      row.delta = d;
      row.delta_rel = gn > 0.0 ? d / gn : 0.0;
    }
    if (out.final_estimate && row.delta) {
      out.final_estimate->delta = row.delta;
      out.final_estimate->delta_rel = row.delta_rel;
    }
  }

  res.x_final = std::move(x);
  res.g_final = std::move(g);
  res.matvecs = matvecs;
  return out;
}

}  // namespace gdpm
