#include "cli_app.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "experiments.hpp"
#include "gdpm/gdpm.hpp"

namespace gdpm::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiverged = 2;
constexpr int kExitBadInput = 3;

std::vector<double> parse_number_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty entry in number list '" + s + "'");
    double v = 0.0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed number '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty number list");
  return out;
}

bool looks_like_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

struct ProblemBundle {
  QuadraticProblem problem;
  std::optional<Vector> eigenvalues;  // ground truth when generated
  std::optional<Matrix> eigenvectors;
  std::optional<Vector> x_star;
};

/// Spectrum spec grammar:
///   explicit:v1,v2,...          exact eigenvalues, coordinate basis (diagonal A)
///   pd:n[,lo,hi]                uniform positive spectrum, random basis
///   indef:n[,neg][,nlo,nhi,plo,phi]  indefinite spectrum, random basis
///   psd:n,zeros[,lo,hi]         positive semidefinite, random basis
ProblemBundle build_generated(const std::string& spec_str, std::uint64_t seed, RhsKind rhs) {
  auto colon = spec_str.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("malformed --gen spec '" + spec_str + "'");
  std::string kind = spec_str.substr(0, colon);
  std::vector<double> args = parse_number_list(spec_str.substr(colon + 1));

  if (kind == "explicit") {
    // Coordinate basis (A = diag(lambda_1, ..., lambda_n), descending) so that
    // literal --x0 components refer to eigen-directions.
    std::vector<double> eigs = args;
    std::sort(eigs.begin(), eigs.end());
    if (std::abs(eigs.front()) > std::abs(eigs.back()))
      throw std::invalid_argument("explicit spectrum violates |lambda_n| <= |lambda_1|");
    const Index n = static_cast<Index>(eigs.size());
    Vector asc(n), d(n);
    Matrix vecs = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
      asc[i] = eigs[static_cast<std::size_t>(i)];
      d[i] = eigs[static_cast<std::size_t>(n - 1 - i)];
      vecs(n - 1 - i, i) = 1.0;  // column i is the eigenvector of asc[i]
    }
    ProblemBundle out;
    out.eigenvalues = asc;
    out.eigenvectors = vecs;
    SymmetricOperator op = SymmetricOperator::diagonal(d);
    Vector b = Vector::Zero(d.size());
    if (rhs == RhsKind::FromSolution) {
      Vector xs = gen_initial_point(d.size(), seed ^ 0x9E37u, PointLaw::StandardGaussian);
      b = op.apply(xs);
      out.x_star = xs;
    }
    out.problem = QuadraticProblem{std::move(op), std::move(b), asc[asc.size() - 1]};
    return out;
  }

  SpectrumSpec spec;
  spec.seed = seed;
  if (args.empty()) throw std::invalid_argument("spec '" + spec_str + "' needs a dimension");
  spec.n = static_cast<Index>(args[0]);
  if (kind == "pd") {
    UniformPdLaw law;
    if (args.size() >= 3) {
      law.lo = args[1];
      law.hi = args[2];
    }
    spec.law = law;
  } else if (kind == "indef") {
    IndefiniteLaw law;
    if (args.size() >= 2) law.neg_count = static_cast<int>(args[1]);
    if (args.size() >= 6) {
      law.neg_lo = args[2];
      law.neg_hi = args[3];
      law.pos_lo = args[4];
      law.pos_hi = args[5];
    }
    spec.law = law;
  } else if (kind == "psd") {
    if (args.size() < 2) throw std::invalid_argument("psd spec needs n,zero_count");
    PsdLaw law;
    law.zero_count = static_cast<int>(args[1]);
    if (args.size() >= 4) {
      law.pos_lo = args[2];
      law.pos_hi = args[3];
    }
    spec.law = law;
  } else {
    throw std::invalid_argument("unknown spectrum kind '" + kind + "'");
  }
  auto gen = gen_problem(spec, rhs);
  ProblemBundle out;
  out.problem = std::move(gen.problem);
  out.eigenvalues = std::move(gen.eigenvalues);
  out.eigenvectors = std::move(gen.eigenvectors);
  out.x_star = std::move(gen.x_star);
  return out;
}

Vector resolve_x0(const std::string& x0_str, Index n, std::uint64_t seed) {
  if (x0_str.empty()) return gen_initial_point(n, seed, PointLaw::StandardGaussian);
  if (looks_like_integer(x0_str))
    return gen_initial_point(n, static_cast<std::uint64_t>(std::stoull(x0_str)),
                             PointLaw::StandardGaussian);
  if (x0_str.find(',') != std::string::npos) {
    auto vals = parse_number_list(x0_str);
    if (static_cast<Index>(vals.size()) != n)
      throw std::invalid_argument("--x0 literal has dimension " + std::to_string(vals.size()) +
                                  " but the problem has dimension " + std::to_string(n));
    Vector v(n);
    for (Index i = 0; i < n; ++i) v[i] = vals[static_cast<std::size_t>(i)];
    return v;
  }
  Vector v = read_vector_text_file(x0_str);
  if (v.size() != n) throw std::invalid_argument("--x0 file dimension mismatch");
  return v;
}

void print_planar(const PlanarResult& r) {
  std::cout << "planar result\n";
  std::cout << "  stationary point: (" << shortest_decimal(r.stationary_point[0]) << ", "
            << shortest_decimal(r.stationary_point[1]) << ")"
            << (r.point_kind == PlanarResult::PointKind::LeastSquares ? " [least-squares]" : "")
            << "\n";
  std::cout << "  lambda1 = " << shortest_decimal(r.lambda1) << ", v1 = ("
            << shortest_decimal(r.v1[0]) << ", " << shortest_decimal(r.v1[1]) << ")\n";
  std::cout << "  lambda2 = " << shortest_decimal(r.lambda2) << ", v2 = ("
            << shortest_decimal(r.v2[0]) << ", " << shortest_decimal(r.v2[1]) << ")\n";
  std::cout << "  nature: " << to_string(r.nature) << ", steps used: " << r.steps_used << "\n";
  for (const auto& note : r.notes) std::cout << "  note: " << note << "\n";
  // machine-readable block
  std::cout << "x1=" << shortest_decimal(r.stationary_point[0]) << "\n";
  std::cout << "x2=" << shortest_decimal(r.stationary_point[1]) << "\n";
  std::cout << "point_kind="
            << (r.point_kind == PlanarResult::PointKind::LeastSquares ? "least-squares"
                                                                      : "stationary")
            << "\n";
  std::cout << "lambda1=" << shortest_decimal(r.lambda1) << "\n";
  std::cout << "lambda2=" << shortest_decimal(r.lambda2) << "\n";
  std::cout << "v1=" << shortest_decimal(r.v1[0]) << "," << shortest_decimal(r.v1[1]) << "\n";
  std::cout << "v2=" << shortest_decimal(r.v2[0]) << "," << shortest_decimal(r.v2[1]) << "\n";
  std::cout << "nature=" << to_string(r.nature) << "\n";
  std::cout << "steps=" << r.steps_used << "\n";
}

struct SolveOptions {
  std::string matrix_file, gen_spec;
  std::string b_source = "zero";
  std::string x0_str;
  std::string alg = "gdeig";
  double alpha = 0.0;
  double beta = 0.0;
  int s = 9;
  int max_iter = 20000;
  double gtol = 0.0;
  double lambda1 = 0.0;
  double lambda_n = 0.0;
  double c_lambda1 = 0.0;
  std::string mode = "escape";
  bool two_over_lambda1 = false;
  std::string trace_file, vec_out;
  std::uint64_t seed = 1;
};

int cmd_solve(const SolveOptions& opt) {
  if (opt.matrix_file.empty() == opt.gen_spec.empty())
    throw std::invalid_argument("exactly one of --matrix or --gen is required");

  RhsKind rhs = RhsKind::Zero;
  bool b_from_file = false;
  if (opt.b_source == "from-solution")
    rhs = RhsKind::FromSolution;
  else if (opt.b_source != "zero")
    b_from_file = true;

  ProblemBundle bundle;
  if (!opt.gen_spec.empty()) {
    bundle = build_generated(opt.gen_spec, opt.seed, rhs);
  } else {
    Matrix a = read_matrix_market_file(opt.matrix_file);
    SymmetricOperator op = SymmetricOperator::from_dense(std::move(a));
    Vector b = Vector::Zero(op.dim());
    if (rhs == RhsKind::FromSolution) {
      Vector xs = gen_initial_point(op.dim(), opt.seed ^ 0x9E37u, PointLaw::StandardGaussian);
      b = op.apply(xs);
      bundle.x_star = xs;
    }
    bundle.problem = QuadraticProblem{std::move(op), std::move(b), std::nullopt};
  }
  QuadraticProblem& p = bundle.problem;
  if (b_from_file) {
    p.b = read_vector_text_file(opt.b_source);
    if (p.b.size() != p.dim()) throw std::invalid_argument("--b file dimension mismatch");
  }
  if (opt.lambda1 != 0.0) p.lambda1 = opt.lambda1;

  Vector x0 = resolve_x0(opt.x0_str, p.dim(), opt.seed);

  SolverConfig cfg;
  cfg.beta = opt.beta;
  cfg.max_iter = opt.max_iter;
  if (opt.gtol > 0.0) cfg.g_tol_abs = opt.gtol;
  cfg.alpha = opt.alpha;
  if (cfg.alpha <= 0.0) {
    if (p.lambda1 && *p.lambda1 > 0.0)
      cfg.alpha = 1.0 / *p.lambda1;
    else if (opt.alg != "exact" && opt.alg != "planar")
      throw std::invalid_argument("supply --alpha (or --lambda1 / --gen for a default 1/lambda1)");
  }

  if (opt.alg == "planar") {
    if (p.dim() != 2) throw std::invalid_argument("planar requires n=2");
    PlanarResult r = opt.c_lambda1 > 0.0
                         ? planar_solve_overestimate(p, x0, opt.c_lambda1, 1e-10, opt.max_iter)
                         : planar_solve_known_l1(p, x0);
    print_planar(r);
    return kExitOk;
  }

  RunResult run;
  std::optional<EigEstimate> estimate;
  std::optional<CurvatureVerdict> verdict;
  if (opt.alg == "gd" || opt.alg == "gdm") {
    SolverConfig c = cfg;
    if (opt.alg == "gd") c.beta = 0.0;
    run = run_gdm(p, x0, c);
  } else if (opt.alg == "gdeig") {
    auto res = run_gdeig(p, x0, cfg);
    run = std::move(res.run);
    estimate = res.final_estimate;
    verdict = res.verdict;
  } else if (opt.alg == "kick") {
    KickConfig kc;
    kc.s = opt.s;
    kc.mode = opt.mode == "toward" ? KickMode::TowardStationary : KickMode::EscapeSaddle;
    kc.use_two_over_lambda1 = opt.two_over_lambda1;
    auto res = run_kick(p, x0, kc, cfg);
    run = std::move(res.run);
    estimate = res.final_estimate;
    verdict = res.verdict;
  } else if (opt.alg == "exact") {
    run = exact_step_gd(p, x0, cfg);
  } else if (opt.alg == "agm") {
    double l1 = p.lambda1 ? *p.lambda1 : 0.0;
    double ln = opt.lambda_n;
    if (ln == 0.0 && bundle.eigenvalues) ln = (*bundle.eigenvalues)[0];
    if (ln <= 0.0)
      throw std::invalid_argument(
          "agm needs a strongly convex objective: the smallest eigenvalue must be positive "
          "(supply --lambda-n or generate a pd problem)");
    if (l1 <= 0.0) throw std::invalid_argument("agm needs --lambda1 or a generated problem");
    run = accelerated_gd(p, x0, l1, ln, cfg);
  } else {
    throw std::invalid_argument("unknown --alg '" + opt.alg + "'");
  }

  if (!opt.trace_file.empty()) write_csv_file(run.trace, opt.trace_file);
  if (!opt.vec_out.empty()) {
    std::ofstream f(opt.vec_out);
    if (!f) throw std::runtime_error("cannot open " + opt.vec_out);
    f << "# x_final\n";
    write_vector_text(f, run.x_final);
    if (estimate) {
      f << "# direction\n";
      write_vector_text(f, estimate->direction);
    }
  }

  std::cout << "algorithm:   " << opt.alg << "\n";
  std::cout << "dimension:   " << p.dim() << "\n";
  std::cout << "stop:        " << to_string(run.stop) << "\n";
  std::cout << "iterations:  " << run.iterations() << "\n";
  std::cout << "matvecs:     " << run.matvecs << "\n";
  std::cout << "final f:     " << shortest_decimal(run.final_f()) << "\n";
  std::cout << "final |g|:   " << shortest_decimal(run.final_gnorm()) << "\n";
  if (estimate) {
    std::cout << "nu1:         " << shortest_decimal(estimate->nu1) << "\n";
    std::cout << "lambda_n:    " << shortest_decimal(estimate->lambda_n) << "\n";
    if (estimate->delta) std::cout << "delta:       " << shortest_decimal(*estimate->delta) << "\n";
    if (estimate->delta_rel)
      std::cout << "delta_rel:   " << shortest_decimal(*estimate->delta_rel) << "\n";
  }
  if (verdict) std::cout << "verdict:     " << to_string(verdict->kind) << "\n";
  if (bundle.x_star)
    std::cout << "x_err:       " << shortest_decimal((run.x_final - *bundle.x_star).norm())
              << "\n";
  if (!run.note.empty()) std::cout << "note:        " << run.note << "\n";

  return run.stop == StopReason::Diverged ? kExitDiverged : kExitOk;
}

struct GenOptions {
  std::string spec;
  std::string out_prefix = "problem";
  std::string b_source = "zero";
  std::uint64_t seed = 1;
};

int cmd_gen(const GenOptions& opt) {
  RhsKind rhs = opt.b_source == "from-solution" ? RhsKind::FromSolution : RhsKind::Zero;
  ProblemBundle bundle = build_generated(opt.spec, opt.seed, rhs);
  const QuadraticProblem& p = bundle.problem;

  write_matrix_market_file(opt.out_prefix + ".mtx", p.op.densify());
  write_vector_text_file(opt.out_prefix + ".b.txt", p.b);
  if (bundle.x_star) write_vector_text_file(opt.out_prefix + ".xstar.txt", *bundle.x_star);

  std::ofstream truth(opt.out_prefix + ".truth.txt");
  if (!truth) throw std::runtime_error("cannot open " + opt.out_prefix + ".truth.txt");
  truth << "# ground truth sidecar\n";
  truth << "spec=" << opt.spec << "\n";
  truth << "seed=" << opt.seed << "\n";
  truth << "n=" << p.dim() << "\n";
  truth << "rhs=" << opt.b_source << "\n";
  truth << "lambda1=" << shortest_decimal(*p.lambda1) << "\n";
  truth << "eigenvalues_ascending=";
  for (Index i = 0; i < bundle.eigenvalues->size(); ++i) {
    if (i) truth << ",";
    truth << shortest_decimal((*bundle.eigenvalues)[i]);
  }
  truth << "\n";
  std::cout << "wrote " << opt.out_prefix << ".mtx, .b.txt, .truth.txt\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"gdpm: quadratic optimization by gradient descent with built-in eigen-estimates"};
  app.require_subcommand(1);
  app.footer("exit codes: 0 normal termination, 2 divergence/numerical failure, 3 bad input");

  SolveOptions so;
  auto* solve = app.add_subcommand("solve", "run one solver on one problem");
  solve->add_option("--matrix", so.matrix_file, "Matrix Market file with symmetric A");
  solve->add_option("--gen", so.gen_spec,
                    "spectrum spec: explicit:v1,v2,... (diagonal, coordinate basis) | "
                    "pd:n[,lo,hi] | indef:n[,neg[,nlo,nhi,plo,phi]] | psd:n,zeros[,lo,hi]");
  solve->add_option("--b", so.b_source, "zero | from-solution | FILE (default zero)");
  solve->add_option("--x0", so.x0_str, "SEED | FILE | comma-separated literal (default --seed)");
  solve->add_option("--alg", so.alg, "gd | gdm | gdeig | kick | exact | agm | planar (default gdeig)")
      ->check(CLI::IsMember({"gd", "gdm", "gdeig", "kick", "exact", "agm", "planar"}));
  solve->add_option("--alpha", so.alpha, "step size (default 1/lambda1 when known)");
  solve->add_option("--beta", so.beta, "momentum in [0,1] (default 0)");
  solve->add_option("--s", so.s, "kick: fixed steps between kick attempts (default 9)");
  solve->add_option("--max-iter", so.max_iter, "iteration cap (default 20000)");
  solve->add_option("--gtol", so.gtol, "absolute gradient-norm tolerance");
  solve->add_option("--lambda1", so.lambda1, "known largest eigenvalue");
  solve->add_option("--lambda-n", so.lambda_n, "known smallest eigenvalue (agm)");
  solve->add_option("--c-lambda1", so.c_lambda1, "planar: overestimate c*lambda1 (case II)");
  solve->add_option("--mode", so.mode, "kick: escape | toward (default escape)")
      ->check(CLI::IsMember({"escape", "toward"}));
  solve->add_flag("--two-over-lambda1", so.two_over_lambda1,
                  "kick: inner steps 2/lambda1 with the 1/lambda1 lead step");
  solve->add_option("--trace", so.trace_file, "write the per-iteration trace CSV here");
  solve->add_option("--vec-out", so.vec_out, "write final x (and direction) as text");
  solve->add_option("--seed", so.seed, "seed for generated problems and points (default 1)");

  GenOptions go;
  auto* gen = app.add_subcommand("gen", "generate a problem and write it to files");
  gen->add_option("--spec", go.spec, "spectrum spec (see solve --gen)")->required();
  gen->add_option("--out", go.out_prefix, "output path prefix (default ./problem)");
  gen->add_option("--b", go.b_source, "zero | from-solution (default zero)")
      ->check(CLI::IsMember({"zero", "from-solution"}));
  gen->add_option("--seed", go.seed, "generator seed (default 1)");

  ExperimentParams ep;
  std::string exp_name;
  std::string s_list_str;
  auto* exp = app.add_subcommand("experiment", "run a canned experiment suite");
  exp->add_option("name", exp_name, "eig-recovery | kick-scan | step-size | kick-bench")
      ->required();
  exp->add_option("--out", ep.out_dir, "output directory (default experiment-out)");
  exp->add_option("--seed", ep.seed, "base seed (default 1)");
  exp->add_option("--runs", ep.runs, "number of random instances (eig-recovery)");
  exp->add_option("--n", ep.n, "problem dimension override");
  exp->add_option("--iters", ep.iters, "iteration budget override");
  exp->add_option("--s-list", s_list_str, "comma-separated kick periods, e.g. 10,20,40");
  exp->add_flag("!--no-trap", ep.trap,
                "kick-scan: disable the engineered trapped start near the saddle");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 convention
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (solve->parsed()) return cmd_solve(so);
    if (gen->parsed()) return cmd_gen(go);
    if (exp->parsed()) {
      if (!s_list_str.empty())
        for (double v : parse_number_list(s_list_str)) ep.s_list.push_back(static_cast<int>(v));
      run_experiment(exp_name, ep);
      std::cout << "experiment '" << exp_name << "' written to " << ep.out_dir << "\n";
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitDiverged;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace gdpm::cli
