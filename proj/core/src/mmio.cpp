#include "gdpm/mmio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace gdpm {

namespace {

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

[[noreturn]] void bad(const std::string& msg) {
  throw std::runtime_error("matrix market: " + msg);
}

std::string shortest(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '%' || line[i] == '#') continue;
    return true;
  }
  return false;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  return f;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open file for writing: " + path);
  return f;
}

}  // namespace

Matrix read_matrix_market(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) bad("empty input");
  std::istringstream hs(header);
  std::string banner, object, format, field, symmetry;
  hs >> banner >> object >> format >> field >> symmetry;
  if (to_lower(banner) != "%%matrixmarket" || to_lower(object) != "matrix")
    bad("missing %%MatrixMarket matrix banner");
  format = to_lower(format);
  field = to_lower(field);
  symmetry = to_lower(symmetry);
  if (field != "real" && field != "integer") bad("only real-valued matrices are supported");
  bool symmetric = symmetry == "symmetric";
  if (!symmetric && symmetry != "general") bad("unsupported symmetry qualifier: " + symmetry);

  std::string line;
  if (!next_data_line(in, line)) bad("missing size line");
  std::istringstream sz(line);

  if (format == "coordinate") {
    long rows = 0, cols = 0, nnz = 0;
    sz >> rows >> cols >> nnz;
    if (!sz || rows <= 0 || cols <= 0 || nnz < 0) bad("malformed size line");
    if (rows != cols) bad("matrix must be square");
    Matrix a = Matrix::Zero(rows, cols);
    for (long e = 0; e < nnz; ++e) {
      if (!next_data_line(in, line)) bad("unexpected end of entries");
      std::istringstream es(line);
      long i = 0, j = 0;
      double v = 0.0;
      es >> i >> j >> v;
      if (!es || i < 1 || j < 1 || i > rows || j > cols) bad("malformed entry line");
      a(i - 1, j - 1) = v;
      if (symmetric) a(j - 1, i - 1) = v;
    }
    return a;
  }
  if (format == "array") {
    long rows = 0, cols = 0;
    sz >> rows >> cols;
    if (!sz || rows <= 0 || cols <= 0) bad("malformed size line");
    if (rows != cols) bad("matrix must be square");
    Matrix a = Matrix::Zero(rows, cols);
    auto read_value = [&](double& v) {
      if (!next_data_line(in, line)) bad("unexpected end of values");
      std::istringstream vs(line);
      vs >> v;
      if (!vs) bad("malformed value line");
    };
    // Column-major; symmetric array format stores the lower triangle only.
    for (long j = 0; j < cols; ++j) {
      for (long i = symmetric ? j : 0; i < rows; ++i) {
        double v = 0.0;
        read_value(v);
        a(i, j) = v;
        if (symmetric) a(j, i) = v;
      }
    }
    return a;
  }
  bad("unsupported format: " + format);
}

Matrix read_matrix_market_file(const std::string& path) {
  auto f = open_in(path);
  return read_matrix_market(f);
}

void write_matrix_market(std::ostream& out, const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("write_matrix_market: matrix must be square");
  out << "%%MatrixMarket matrix array real symmetric\n";
  out << a.rows() << " " << a.cols() << "\n";
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = j; i < a.rows(); ++i) out << shortest(a(i, j)) << "\n";
  if (!out) throw std::runtime_error("matrix market: write failure");
}

void write_matrix_market_file(const std::string& path, const Matrix& a) {
  auto f = open_out(path);
  write_matrix_market(f, a);
}

Vector read_vector_text(std::istream& in) {
  std::vector<double> vals;
  std::string line;
  while (next_data_line(in, line)) {
    std::istringstream vs(line);
    double v = 0.0;
    while (vs >> v) vals.push_back(v);
  }
  Vector out(static_cast<Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) out[static_cast<Index>(i)] = vals[i];
  return out;
}

Vector read_vector_text_file(const std::string& path) {
  auto f = open_in(path);
  return read_vector_text(f);
}

void write_vector_text(std::ostream& out, const Vector& v) {
  for (Index i = 0; i < v.size(); ++i) out << shortest(v[i]) << "\n";
  if (!out) throw std::runtime_error("vector: write failure");
}

void write_vector_text_file(const std::string& path, const Vector& v) {
  auto f = open_out(path);
  write_vector_text(f, v);
}

}  // namespace gdpm
