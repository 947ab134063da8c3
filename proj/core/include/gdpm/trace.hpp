#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gdpm/types.hpp"

namespace gdpm {

enum class Phase { Inner, KickAccepted, KickRejected, SmartInit, NegCurvature };

const char* to_string(Phase p);
Phase phase_from_string(const std::string& s);

/// One row of the per-iteration trace shared by every solver.  Optional
/// fields stay empty for solvers that do not produce them.
struct IterationRecord {
  int k = 0;
  double f = 0.0;
  double gnorm_sq = 0.0;
  std::optional<double> nu1;
  std::optional<double> lambda_n;
  std::optional<double> delta;      // ||A g - lambda_n g|| with the unnormalized gradient
  std::optional<double> delta_rel;  // delta / ||g||
  double alpha_used = 0.0;
  Phase phase = Phase::Inner;
  long matvecs_cum = 0;
  std::optional<double> f_kick_cand;   // f(x - |1/lambda_n| g) at a kick attempt
  std::optional<double> f_fixed_cand;  // f(x - alpha g) at a kick attempt
};

using Trace = std::vector<IterationRecord>;

/// CSV with a fixed column order, shortest round-trip decimals, UTF-8, LF.
/// Empty cells for absent optional fields.
void write_csv(const Trace& trace, std::ostream& out);
void write_csv_file(const Trace& trace, const std::string& path);

/// Parses what write_csv produced; round-trips records exactly.
Trace read_csv(std::istream& in);
Trace read_csv_file(const std::string& path);

/// Shortest round-trip decimal form of v (the CSV number format).
std::string shortest_decimal(double v);

}  // namespace gdpm
