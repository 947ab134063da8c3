#include "gdpm/linops.hpp"

#include <utility>

namespace gdpm {

namespace {
void check_dim(Index expected, Index got, const char* what) {
  if (expected != got) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (operator dim " +
                                std::to_string(expected) + ", vector dim " +
                                std::to_string(got) + ")");
  }
}
}  // namespace

SymmetricOperator SymmetricOperator::from_dense(Matrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("from_dense: matrix must be square");
  auto shared = std::make_shared<const Matrix>(std::move(a));
  Index n = shared->rows();
  MatVec mv = [shared](const Vector& v) -> Vector { return (*shared) * v; };
  return SymmetricOperator(n, std::move(mv), shared);
}

SymmetricOperator SymmetricOperator::from_matvec(Index n, MatVec mv) {
  if (n <= 0) throw std::invalid_argument("from_matvec: dimension must be positive");
  return SymmetricOperator(n, std::move(mv), nullptr);
}

SymmetricOperator SymmetricOperator::diagonal(Vector d) {
  Index n = d.size();
  if (n <= 0) throw std::invalid_argument("diagonal: dimension must be positive");
  if (n <= kDenseLimit) {
    Matrix a = Matrix::Zero(n, n);
    a.diagonal() = d;
    return from_dense(std::move(a));
  }
  auto shared = std::make_shared<const Vector>(std::move(d));
  MatVec mv = [shared](const Vector& v) -> Vector { return shared->cwiseProduct(v); };
  return SymmetricOperator(n, std::move(mv), nullptr);
}

Vector SymmetricOperator::apply(const Vector& v) const {
  if (!matvec_) throw std::logic_error("SymmetricOperator: empty operator");
  check_dim(n_, v.size(), "SymmetricOperator::apply");
  return matvec_(v);
}

const Matrix& SymmetricOperator::dense() const {
  if (!dense_) throw std::logic_error("SymmetricOperator: no dense backing");
  return *dense_;
}

Matrix SymmetricOperator::densify() const {
  if (dense_) return *dense_;
  Matrix a(n_, n_);
  Vector e = Vector::Zero(n_);
  for (Index j = 0; j < n_; ++j) {
    e[j] = 1.0;
    a.col(j) = matvec_(e);
    e[j] = 0.0;
  }
  return a;
}

double eval_f(const QuadraticProblem& p, const Vector& x) {
  check_dim(p.dim(), x.size(), "eval_f");
  Vector ax = p.op.apply(x);
  return 0.5 * x.dot(ax) - p.b.dot(x);
}

Vector eval_g(const QuadraticProblem& p, const Vector& x) {
  check_dim(p.dim(), x.size(), "eval_g");
  return p.op.apply(x) - p.b;
}

double f_from_gradient(const Vector& x, const Vector& g, const Vector& b) {
  return 0.5 * x.dot(g - b);
}

Vector ShiftedOperator::apply(const Vector& v) const { return apply_shifted(*this, v); }

SymmetricOperator ShiftedOperator::as_operator() const {
  if (base.has_dense()) {
    Matrix m = -alpha * base.dense();
    m.diagonal().array() += 1.0 + beta;
    return SymmetricOperator::from_dense(std::move(m));
  }
  ShiftedOperator self = *this;
  return SymmetricOperator::from_matvec(
      base.dim(), [self](const Vector& v) -> Vector { return self.apply(v); });
}

Vector apply_shifted(const ShiftedOperator& h, const Vector& v) {
  check_dim(h.base.dim(), v.size(), "apply_shifted");
  Vector u = h.base.apply(v);
  return (1.0 + h.beta) * v - h.alpha * u;
}

std::vector<double> shifted_spectrum(const std::vector<double>& eigs_ascending,
                                     double alpha, double beta) {
  std::vector<double> nu(eigs_ascending.size());
  for (std::size_t i = 0; i < eigs_ascending.size(); ++i)
    nu[i] = 1.0 + beta - alpha * eigs_ascending[i];
  return nu;
}

}  // namespace gdpm
