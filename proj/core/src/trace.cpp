#include "gdpm/trace.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace gdpm {

const char* to_string(Phase p) {
  switch (p) {
    case Phase::Inner: return "inner";
    case Phase::KickAccepted: return "kick-accepted";
    case Phase::KickRejected: return "kick-rejected";
    case Phase::SmartInit: return "smart-init";
    case Phase::NegCurvature: return "neg-curvature";
  }
  return "inner";
}

Phase phase_from_string(const std::string& s) {
  if (s == "inner") return Phase::Inner;
  if (s == "kick-accepted") return Phase::KickAccepted;
  if (s == "kick-rejected") return Phase::KickRejected;
  if (s == "smart-init") return Phase::SmartInit;
  if (s == "neg-curvature") return Phase::NegCurvature;
  throw std::runtime_error("trace csv: unknown phase '" + s + "'");
}

namespace {

constexpr const char* kHeader =
    "k,f,gnorm_sq,nu1,lambda_n,delta,delta_rel,alpha_used,phase,matvecs_cum,"
    "f_kick_cand,f_fixed_cand";

void append_real(std::string& out, double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

void append_opt(std::string& out, const std::optional<double>& v) {
  if (v) append_real(out, *v);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  return cells;
}

double parse_real(const std::string& s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::runtime_error("trace csv: malformed number '" + s + "'");
  return v;
}

std::optional<double> parse_opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_real(s);
}

}  // namespace

void write_csv(const Trace& trace, std::ostream& out) {
  out << kHeader << "\n";
  std::string line;
  for (const auto& r : trace) {
    line.clear();
    line += std::to_string(r.k);
    line += ',';
    append_real(line, r.f);
    line += ',';
    append_real(line, r.gnorm_sq);
    line += ',';
    append_opt(line, r.nu1);
    line += ',';
    append_opt(line, r.lambda_n);
    line += ',';
    append_opt(line, r.delta);
    line += ',';
    append_opt(line, r.delta_rel);
    line += ',';
    append_real(line, r.alpha_used);
    line += ',';
    line += to_string(r.phase);
    line += ',';
    line += std::to_string(r.matvecs_cum);
    line += ',';
    append_opt(line, r.f_kick_cand);
    line += ',';
    append_opt(line, r.f_fixed_cand);
    out << line << "\n";
  }
  if (!out) throw std::runtime_error("trace csv: write failure");
}

void write_csv_file(const Trace& trace, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open file for writing: " + path);
  write_csv(trace, f);
}

Trace read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("trace csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) throw std::runtime_error("trace csv: unexpected header");
  Trace trace;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split_csv(line);
    if (cells.size() != 12) throw std::runtime_error("trace csv: wrong column count");
    IterationRecord r;
    r.k = static_cast<int>(parse_real(cells[0]));
    r.f = parse_real(cells[1]);
    r.gnorm_sq = parse_real(cells[2]);
    r.nu1 = parse_opt(cells[3]);
    r.lambda_n = parse_opt(cells[4]);
    r.delta = parse_opt(cells[5]);
    r.delta_rel = parse_opt(cells[6]);
    r.alpha_used = parse_real(cells[7]);
    r.phase = phase_from_string(cells[8]);
    r.matvecs_cum = static_cast<long>(parse_real(cells[9]));
    r.f_kick_cand = parse_opt(cells[10]);
    r.f_fixed_cand = parse_opt(cells[11]);
    trace.push_back(std::move(r));
  }
  return trace;
}

Trace read_csv_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  return read_csv(f);
}

std::string shortest_decimal(double v) {
  std::string s;
  append_real(s, v);
  return s;
}

}  // namespace gdpm
