#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gdpm::cli {

struct ExperimentParams {
  std::string out_dir = "experiment-out";
  std::uint64_t seed = 1;
  int runs = 0;   // 0 means the experiment's default
  int n = 0;      // 0 means the experiment's default
  int iters = 0;  // 0 means the experiment's default
  std::vector<int> s_list;  // kick sweeps; empty means the default
  bool trap = true;         // kick-scan: engineer a trapped start near the saddle
};

/// Runs one of {eig-recovery, kick-scan, step-size, kick-bench}; writes one
/// trace CSV per run plus an aggregate/summary CSV under params.out_dir.
/// Deterministic for a fixed seed.  Throws std::invalid_argument for an
/// unknown name.
void run_experiment(const std::string& name, const ExperimentParams& params);

}  // namespace gdpm::cli
