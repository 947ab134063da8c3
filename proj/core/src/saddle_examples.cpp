#include "gdpm/saddle_examples.hpp"

#include <cmath>

namespace gdpm {

QuadraticProblem paternain_problem(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("paternain_problem: sigma must be positive");
  Vector d(2);
  d << 1.0, -sigma;
  return {SymmetricOperator::diagonal(d), Vector::Zero(2), 1.0};
}

QuadraticProblem du_problem() {
  Vector d(2);
  d << 2.0, -2.0;
  return {SymmetricOperator::diagonal(d), Vector::Zero(2), 2.0};
}

std::pair<Vector, Vector> paternain_closed_form(double sigma, const Vector& x0, int k) {
  if (x0.size() != 2) throw std::invalid_argument("paternain_closed_form: x0 must have size 2");
  if (k < 1) throw std::invalid_argument("paternain_closed_form: k must be >= 1");
  double growth = std::pow(1.0 + sigma, k) * x0[1];
  Vector x(2), g(2);
  x << 0.0, growth;
  g << 0.0, -sigma * growth;
  return {x, g};
}

std::pair<Vector, Vector> du_closed_form(const Vector& x0, int k) {
  if (x0.size() != 2) throw std::invalid_argument("du_closed_form: x0 must have size 2");
  if (k < 0) throw std::invalid_argument("du_closed_form: k must be >= 0");
  Vector x(2), g(2);
  x << std::pow(0.5, k) * x0[0], std::pow(1.5, k) * x0[1];
  g << 2.0 * x[0], -2.0 * x[1];
  return {x, g};
}

double du_nu_closed_form(const Vector& x0, int k) {
  if (x0.size() != 2) throw std::invalid_argument("du_nu_closed_form: x0 must have size 2");
  if (x0[0] == 0.0 && x0[1] == 0.0)
    throw std::invalid_argument("du_nu_closed_form: x0 must be nonzero");
  if (k < 1) throw std::invalid_argument("du_nu_closed_form: k must be >= 1");
  double a = x0[0] * x0[0], b = x0[1] * x0[1];
  double num = std::pow(0.5, 2 * k - 1) * a + std::pow(1.5, 2 * k - 1) * b;
  double den = std::pow(0.5, 2 * k - 2) * a + std::pow(1.5, 2 * k - 2) * b;
  return num / den;
}

double initialization_band_width(double epsilon) {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("initialization_band_width: epsilon must be positive");
  return 2.0 * std::pow(1.5, -std::exp(1.0 / epsilon));
}

}  // namespace gdpm
