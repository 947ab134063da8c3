#include "gdpm/gdm.hpp"

#include <sstream>

#include "run_support.hpp"

namespace gdpm {

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::Converged: return "converged";
    case StopReason::EigResidualConverged: return "eig-residual-converged";
    case StopReason::Unbounded: return "unbounded";
    case StopReason::MaxIterations: return "max-iterations";
    case StopReason::Diverged: return "diverged";
    case StopReason::StationaryPoint: return "stationary-point";
  }
  return "max-iterations";
}

GdmState gdm_init(const QuadraticProblem& p, Vector x0, double alpha, double beta) {
  Vector g = eval_g(p, x0);
  GdmState st;
  st.x_prev = x0;
  st.x_curr = std::move(x0);
  st.g_prev = g;
  st.g_curr = std::move(g);
  st.k = 0;
  st.alpha = alpha;
  st.beta = beta;
  return st;
}

GdmState gdm_step(const QuadraticProblem& p, const GdmState& st) {
  GdmState next;
  next.alpha = st.alpha;
  next.beta = st.beta;
  next.k = st.k + 1;
  next.x_prev = st.x_curr;
  next.x_curr = st.x_curr - st.alpha * st.g_curr + st.beta * (st.x_curr - st.x_prev);
  next.g_prev = st.g_curr;
  next.g_curr = eval_g(p, next.x_curr);
  if (!detail::all_finite(next.x_curr) || !detail::all_finite(next.g_curr))
    throw DivergenceError("gdm_step: non-finite values produced", st);
  return next;
}

StepSchedule StepSchedule::fixed(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("StepSchedule::fixed: alpha must be positive");
  StepSchedule s;
  s.kind_ = Kind::Fixed;
  s.alpha_ = alpha;
  return s;
}

StepSchedule StepSchedule::two_over_lambda1() {
  StepSchedule s;
  s.kind_ = Kind::TwoOverLambda1;
  return s;
}

StepSchedule StepSchedule::spectral_cycle(std::vector<double> eigs_descending) {
  if (eigs_descending.empty())
    throw std::invalid_argument("spectral_cycle: eigenvalue list must be nonempty");
  for (double e : eigs_descending)
    if (e == 0.0) throw std::invalid_argument("spectral_cycle: eigenvalues must be nonzero");
  StepSchedule s;
  s.kind_ = Kind::SpectralCycle;
  s.eigs_ = std::move(eigs_descending);
  return s;
}

double StepSchedule::step(int k, const QuadraticProblem& p) const {
  switch (kind_) {
    case Kind::Fixed:
      return alpha_;
    case Kind::TwoOverLambda1:
      if (!p.lambda1 || !(*p.lambda1 > 0.0))
        throw std::invalid_argument("two_over_lambda1 schedule requires a known positive lambda1");
      return 2.0 / *p.lambda1;
    case Kind::SpectralCycle:
      return 1.0 / eigs_[static_cast<std::size_t>(k) % eigs_.size()];
  }
  return alpha_;
}

namespace {

/// Shared fixed-point loop: continues a run whose trace already holds rows up
/// to st.k.  The caller provides the gradient tolerance resolved from the
/// initial gradient of the whole run.
RunResult run_loop(const QuadraticProblem& p, GdmState st, const SolverConfig& cfg,
                   const StepSchedule& schedule, Trace prefix, long matvecs, double g_tol,
                   RunResult result) {
  detail::GrowthWindow window(cfg.div_factor, cfg.div_window);
  result.trace = std::move(prefix);
  for (const auto& row : result.trace) window.push(std::sqrt(row.gnorm_sq));

  while (true) {
    double gnorm = st.g_curr.norm();
    double f = f_from_gradient(st.x_curr, st.g_curr, p.b);
    if (gnorm == 0.0) {
      result.stop = StopReason::StationaryPoint;
      break;
    }
    if (gnorm <= g_tol) {
      result.stop = StopReason::Converged;
      break;
    }
    if (f <= cfg.f_floor) {
      result.stop = StopReason::Unbounded;
      result.note = "unbounded descent: f fell below the configured floor";
      break;
    }
    if (st.k >= cfg.max_iter) {
      result.stop = StopReason::MaxIterations;
      break;
    }

    double a = schedule.step(st.k, p);
    Vector x_next = st.x_curr - a * st.g_curr + cfg.beta * (st.x_curr - st.x_prev);
    Vector g_next = eval_g(p, x_next);
    ++matvecs;
    if (!detail::all_finite(x_next) || !detail::all_finite(g_next) ||
        !std::isfinite(f_from_gradient(x_next, g_next, p.b))) {
      result.stop = StopReason::Diverged;
      result.note = "non-finite values produced; trace holds the last finite state";
      break;
    }

    st.x_prev = std::move(st.x_curr);
    st.x_curr = std::move(x_next);
    st.g_prev = std::move(st.g_curr);
    st.g_curr = std::move(g_next);
    ++st.k;

    IterationRecord row;
    row.k = st.k;
    row.f = f_from_gradient(st.x_curr, st.g_curr, p.b);
    row.gnorm_sq = st.g_curr.squaredNorm();
    row.alpha_used = a;
    row.phase = Phase::Inner;
    row.matvecs_cum = matvecs;
    result.trace.push_back(row);
    if (cfg.record_gradients) result.gradients.push_back(st.g_curr);
    if (cfg.record_iterates) result.iterates.push_back(st.x_curr);

    if (window.push(st.g_curr.norm())) {
      result.stop = StopReason::Diverged;
      std::ostringstream msg;
      msg << "gradient norm grew by more than " << cfg.div_factor << "x over "
          << cfg.div_window << " iterations";
      result.note = msg.str();
      break;
    }
  }

  result.x_final = std::move(st.x_curr);
  result.g_final = std::move(st.g_curr);
  result.matvecs = matvecs;
  return result;
}

IterationRecord initial_row(const QuadraticProblem& p, const GdmState& st, long matvecs,
                            Phase phase, double alpha_used) {
  IterationRecord row;
  row.k = st.k;
  row.f = f_from_gradient(st.x_curr, st.g_curr, p.b);
  row.gnorm_sq = st.g_curr.squaredNorm();
  row.alpha_used = alpha_used;
  row.phase = phase;
  row.matvecs_cum = matvecs;
  return row;
}

}  // namespace

RunResult run_gdm(const QuadraticProblem& p, const Vector& x0, const SolverConfig& cfg) {
  return run_gdm(p, x0, cfg, StepSchedule::fixed(cfg.alpha));
}

RunResult run_gdm(const QuadraticProblem& p, const Vector& x0, const SolverConfig& cfg,
                  const StepSchedule& schedule) {
  if (cfg.max_iter < 1) throw std::invalid_argument("run_gdm: max_iter must be >= 1");
  GdmState st = gdm_init(p, x0, cfg.alpha, cfg.beta);
  long matvecs = 1;
  double g_tol = cfg.resolved_g_tol(st.g_curr.norm());

  RunResult result;
  Trace prefix{initial_row(p, st, matvecs, Phase::Inner, 0.0)};
  if (cfg.record_gradients) result.gradients.push_back(st.g_curr);
  if (cfg.record_iterates) result.iterates.push_back(st.x_curr);
  return run_loop(p, std::move(st), cfg, schedule, std::move(prefix), matvecs, g_tol,
                  std::move(result));
}

Vector smart_init(const QuadraticProblem& p, const Vector& x_minus1) {
  if (!p.lambda1 || !(*p.lambda1 > 0.0))
    throw std::invalid_argument(
        "smart_init: lambda1 unknown; estimate the largest eigenvalue first "
        "(e.g. with run_pmm on the operator)");
  return x_minus1 - (1.0 / *p.lambda1) * eval_g(p, x_minus1);
}

RunResult two_over_lambda1_run(const QuadraticProblem& p, const Vector& x_minus1,
                               const SolverConfig& cfg) {
  if (!p.lambda1 || !(*p.lambda1 > 0.0))
    throw std::invalid_argument("two_over_lambda1_run requires a known positive lambda1");
  const double l1 = *p.lambda1;

  GdmState st = gdm_init(p, x_minus1, 2.0 / l1, cfg.beta);
  long matvecs = 1;
  double g_tol = cfg.resolved_g_tol(st.g_curr.norm());

  RunResult result;
  Trace prefix{initial_row(p, st, matvecs, Phase::Inner, 0.0)};
  if (cfg.record_gradients) result.gradients.push_back(st.g_curr);
  if (cfg.record_iterates) result.iterates.push_back(st.x_curr);

  // Smart-init step, size 1/lambda1 (unless already stationary).
  if (st.g_curr.norm() > 0.0 && st.g_curr.norm() > g_tol) {
    Vector x0 = st.x_curr - (1.0 / l1) * st.g_curr;
    Vector g0 = eval_g(p, x0);
    ++matvecs;
    st.x_prev = x0;  // momentum restarts at the smart-initialized point
    st.x_curr = std::move(x0);
    st.g_prev = g0;
    st.g_curr = std::move(g0);
    st.k = 1;
    IterationRecord row = initial_row(p, st, matvecs, Phase::SmartInit, 1.0 / l1);
    prefix.push_back(row);
    if (cfg.record_gradients) result.gradients.push_back(st.g_curr);
    if (cfg.record_iterates) result.iterates.push_back(st.x_curr);
  }

  result = run_loop(p, std::move(st), cfg, StepSchedule::fixed(2.0 / l1), std::move(prefix),
                    matvecs, g_tol, std::move(result));
  if (result.stop == StopReason::Diverged || result.stop == StopReason::Unbounded) {
    std::ostringstream msg;
    msg << "divergence report: 2/lambda1 descent failed (" << to_string(result.stop)
        << "); final f = " << result.final_f() << ", final ||g|| = " << result.final_gnorm()
        << " after " << result.iterations() << " iterations. " << result.note;
    result.note = msg.str();
  }
  return result;
}

}  // namespace gdpm
