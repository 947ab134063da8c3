#include "experiments.hpp"

#include <filesystem>
#include <fstream>
#include <limits>

#include "gdpm/gdpm.hpp"

namespace gdpm::cli {

namespace fs = std::filesystem;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::ofstream open_csv(const fs::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open file for writing: " + path.string());
  return f;
}

int first_negative_f(const Trace& t) {
  for (const auto& r : t)
    if (r.f < 0.0) return r.k;
  return -1;
}

int iters_to_f_error(const Trace& t, double f_star, double tol_abs) {
  for (const auto& r : t)
    if (r.f - f_star <= tol_abs) return r.k;
  return -1;
}

/// Per-iteration means across runs for shaded-band plots, plus eigenvalue
/// and eigenvector error curves.
struct EigRecoveryAccum {
  std::vector<int> active;
  std::vector<double> f_sum, lam_err_sum, align_err_sum;

  void ensure(std::size_t rows) {
    if (active.size() < rows) {
      active.resize(rows, 0);
      f_sum.resize(rows, 0.0);
      lam_err_sum.resize(rows, 0.0);
      align_err_sum.resize(rows, 0.0);
    }
  }
};

void eig_recovery(const ExperimentParams& prm) {
  const int runs = prm.runs > 0 ? prm.runs : 100;
  const int n = prm.n > 0 ? prm.n : 200;
  const int iters = prm.iters > 0 ? prm.iters : 1000;

  EigRecoveryAccum acc;
  for (int r = 0; r < runs; ++r) {
    SpectrumSpec spec;
    spec.n = n;
    spec.law = IndefiniteLaw{};
    spec.seed = prm.seed + static_cast<std::uint64_t>(r);
    auto gen = gen_problem(spec, RhsKind::Zero);
    Vector x0 = gen_initial_point(n, spec.seed, PointLaw::StandardGaussian);

    SolverConfig cfg;
    cfg.alpha = 1.0 / *gen.problem.lambda1;
    cfg.max_iter = iters;
    cfg.g_tol_abs = 1e-300;
    cfg.f_floor = -kInf;
    cfg.div_window = 0;  // escape growth is the point; only overflow truncates
    cfg.record_gradients = true;
    auto res = run_gdeig(gen.problem, x0, cfg);
    write_csv_file(res.run.trace, fs::path(prm.out_dir) / ("run_" + std::to_string(r) + ".csv"));

    const double lam_n = gen.eigenvalues[0];
    const Vector v_n = gen.eigenvectors.col(0);
    acc.ensure(res.run.trace.size());
    for (std::size_t i = 0; i < res.run.trace.size(); ++i) {
      const auto& row = res.run.trace[i];
      acc.active[i] += 1;
      acc.f_sum[i] += row.f;
      if (row.lambda_n) acc.lam_err_sum[i] += std::abs(*row.lambda_n - lam_n) / std::abs(lam_n);
      const Vector& g = res.run.gradients[i];
      double gn = g.norm();
      double c = gn > 0.0 ? std::abs(v_n.dot(g)) / gn : 1.0;
      acc.align_err_sum[i] += std::sqrt(std::max(0.0, 1.0 - c * c));
    }
  }

  auto agg = open_csv(fs::path(prm.out_dir) / "aggregate.csv");
  agg << "k,runs_active,mean_f,mean_lambda_err_rel,mean_align_err\n";
  for (std::size_t i = 0; i < acc.active.size(); ++i) {
    double cnt = acc.active[i];
    agg << i << ',' << acc.active[i] << ',' << shortest_decimal(acc.f_sum[i] / cnt) << ','
        << shortest_decimal(acc.lam_err_sum[i] / cnt) << ','
        << shortest_decimal(acc.align_err_sum[i] / cnt) << "\n";
  }
}

void kick_scan(const ExperimentParams& prm) {
  const int n = prm.n > 0 ? prm.n : 200;
  const int iters = prm.iters > 0 ? prm.iters : 2000;
  std::vector<int> sweeps = prm.s_list.empty() ? std::vector<int>{10, 20, 40, 100, 200}
                                               : prm.s_list;

  // One representative indefinite instance.  With --trap (default) the
  // negative eigenvalues are weak and the start point is nearly orthogonal to
  // them, which produces the trapped-then-escape shape the sweep is about.
  SpectrumSpec spec;
  spec.n = n;
  spec.seed = prm.seed;
  if (prm.trap)
    spec.law = IndefiniteLaw{std::max(2, n / 40), -0.05, -0.01, 0.1, 1.0};
  else
    spec.law = IndefiniteLaw{};
  auto gen = gen_problem(spec, RhsKind::Zero);
  Vector x0 = gen_initial_point(n, prm.seed, PointLaw::StandardGaussian);
  if (prm.trap) {
    for (Index i = 0; i < gen.eigenvalues.size(); ++i)
      if (gen.eigenvalues[i] < 0.0)
        x0 -= 0.99 * gen.eigenvectors.col(i).dot(x0) * gen.eigenvectors.col(i);
  }

  SolverConfig cfg;
  cfg.alpha = 1.0 / *gen.problem.lambda1;
  cfg.max_iter = iters;
  cfg.g_tol_abs = 1e-300;
  cfg.f_floor = -kInf;
  cfg.div_window = 0;  // escape growth is the point; only overflow truncates

  auto summary = open_csv(fs::path(prm.out_dir) / "summary.csv");
  summary << "run,escape_iter,final_lambda_est,lambda_err_rel\n";
  const double lam_n = gen.eigenvalues[0];
  auto write_row = [&](const std::string& name, const Trace& t,
                       const std::optional<EigEstimate>& est) {
    write_csv_file(t, fs::path(prm.out_dir) / (name + ".csv"));
    summary << name << ',' << first_negative_f(t) << ',';
    if (est) {
      summary << shortest_decimal(est->lambda_n) << ','
              << shortest_decimal(std::abs(est->lambda_n - lam_n) / std::abs(lam_n));
    } else {
      summary << ',';
    }
    summary << "\n";
  };

  auto gd = run_gdeig(gen.problem, x0, cfg);
  write_row("gd_fixed", gd.run.trace, gd.final_estimate);
  for (int s_plus_1 : sweeps) {
    KickConfig kc;
    kc.s = s_plus_1 - 1;
    auto res = run_kick(gen.problem, x0, kc, cfg);
    write_row("kick_" + std::to_string(s_plus_1), res.run.trace, res.final_estimate);
  }
  auto exact = exact_step_gd(gen.problem, x0, cfg);
  write_row("exact_step", exact.trace, std::nullopt);
}

// PD spectrum with a gap below the top eigenvalue (lambda_1 = 1 exactly, the
// rest uniform in [0.01, 0.75]).  The 2/lambda1 step leaves modes near
// lambda_1 with a contraction factor |1 - 2*lambda/lambda_1| close to 1, so a
// spectrum filled up to the top edge would mask the step-size effect the
// study is about.
SpectrumSpec gapped_pd(Index n, std::uint64_t seed, int zero_count) {
  auto rng = SplitMix64::stream(seed, 21);
  std::vector<double> eigs = {1.0};
  for (Index i = 0; i < n - 1 - zero_count; ++i) eigs.push_back(rng.uniform(0.01, 0.75));
  for (int i = 0; i < zero_count; ++i) eigs.push_back(0.0);
  SpectrumSpec spec;
  spec.n = n;
  spec.law = ExplicitLaw{std::move(eigs)};
  spec.seed = seed;
  return spec;
}

void step_size(const ExperimentParams& prm) {
  const int n = prm.n > 0 ? prm.n : 1000;
  const int iters = prm.iters > 0 ? prm.iters : 20000;

  auto gen = gen_problem(gapped_pd(n, prm.seed, 0), RhsKind::FromSolution);
  const double l1 = *gen.problem.lambda1;
  const double ln = gen.eigenvalues[0];
  Vector x_minus1 = gen_initial_point(n, prm.seed, PointLaw::StandardGaussian);
  Vector x0 = smart_init(gen.problem, x_minus1);
  const double f_star = eval_f(gen.problem, *gen.x_star);
  const double f_tol = 1e-10 * (eval_f(gen.problem, x0) - f_star);

  auto summary = open_csv(fs::path(prm.out_dir) / "summary.csv");
  summary << "alpha_label,beta,stop,iters,iters_to_ftol,final_f_err\n";

  const std::pair<const char*, double> alphas[] = {
      {"1_over_lambda1", 1.0 / l1}, {"2_over_lambda1", 2.0 / l1}, {"2_over_l1_plus_ln", 2.0 / (l1 + ln)}};
  for (auto [label, alpha] : alphas) {
    for (double beta : {0.0, 0.5, 0.8}) {
      SolverConfig cfg;
      cfg.alpha = alpha;
      cfg.beta = beta;
      cfg.max_iter = iters;
      auto res = run_gdm(gen.problem, x0, cfg);
      std::string name = std::string("step_") + label + "_beta" +
                         shortest_decimal(beta);
      write_csv_file(res.trace, fs::path(prm.out_dir) / (name + ".csv"));
      summary << label << ',' << shortest_decimal(beta) << ',' << to_string(res.stop) << ','
              << res.iterations() << ',' << iters_to_f_error(res.trace, f_star, f_tol) << ','
              << shortest_decimal(res.final_f() - f_star) << "\n";
    }
  }
}

void kick_bench(const ExperimentParams& prm) {
  const int n = prm.n > 0 ? prm.n : 1000;
  const int iters = prm.iters > 0 ? prm.iters : 20000;
  std::vector<int> sweeps = prm.s_list.empty() ? std::vector<int>{20, 100} : prm.s_list;

  auto summary = open_csv(fs::path(prm.out_dir) / "summary.csv");
  summary << "matrix,run,stop,iters,iters_to_ftol\n";

  for (const char* kind : {"pd", "psd"}) {
    // Same gapped spectrum as the step-size study; the psd variant plants
    // n/20 exact zeros (50 at the default n = 1000).
    auto spec = gapped_pd(n, prm.seed, std::string(kind) == "psd" ? n / 20 : 0);
    auto gen = gen_problem(spec, RhsKind::FromSolution);
    const double l1 = *gen.problem.lambda1;
    Vector x_minus1 = gen_initial_point(n, prm.seed + 1, PointLaw::StandardGaussian);
    Vector x0 = smart_init(gen.problem, x_minus1);
    const double f_star = eval_f(gen.problem, *gen.x_star);
    const double f_tol = 1e-10 * (eval_f(gen.problem, x0) - f_star);

    SolverConfig cfg;
    cfg.alpha = 2.0 / l1;
    cfg.max_iter = iters;

    auto put = [&](const std::string& name, const Trace& t, StopReason stop) {
      write_csv_file(t, fs::path(prm.out_dir) / (std::string(kind) + "_" + name + ".csv"));
      summary << kind << ',' << name << ',' << to_string(stop) << ',' << t.back().k << ','
              << iters_to_f_error(t, f_star, f_tol) << "\n";
    };

    auto gd = run_gdm(gen.problem, x0, cfg);
    put("gd_2_over_lambda1", gd.trace, gd.stop);
    for (int s_plus_1 : sweeps) {
      KickConfig kc;
      kc.s = s_plus_1 - 1;
      kc.use_two_over_lambda1 = true;
      auto res = run_kick(gen.problem, x0, kc, cfg);
      put("kick_" + std::to_string(s_plus_1), res.run.trace, res.run.stop);
    }
    if (std::string(kind) == "pd") {
      // The accelerated baseline needs strong convexity, so the psd matrix
      // runs without it.
      auto agm = accelerated_gd(gen.problem, x0, l1, gen.eigenvalues[0], cfg);
      put("agm", agm.trace, agm.stop);
    }
  }
}

}  // namespace

void run_experiment(const std::string& name, const ExperimentParams& params) {
  fs::create_directories(params.out_dir);
  if (name == "eig-recovery")
    eig_recovery(params);
  else if (name == "kick-scan")
    kick_scan(params);
  else if (name == "step-size")
    step_size(params);
  else if (name == "kick-bench")
    kick_bench(params);
  else
    throw std::invalid_argument("unknown experiment: " + name +
                                " (expected eig-recovery, kick-scan, step-size or kick-bench)");
}

}  // namespace gdpm::cli
