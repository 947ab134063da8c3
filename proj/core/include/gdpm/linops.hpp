#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "gdpm/types.hpp"

namespace gdpm {

/// Symmetric linear operator accessed only through matrix-vector products.
/// Immutable after construction; copies are cheap (the dense backing, when
/// present, is shared).  Dense backing is kept for n <= 2000 so that the
/// independent eigensolver can be used for verification; larger operators
/// keep only the matvec closure.
class SymmetricOperator {
 public:
  using MatVec = std::function<Vector(const Vector&)>;

  static constexpr Index kDenseLimit = 2000;

  /// Empty operator of dimension 0; any use other than assignment throws.
  SymmetricOperator() = default;

  /// Wraps a dense symmetric matrix.  The matrix is stored as given.
  static SymmetricOperator from_dense(Matrix a);

  /// Wraps a raw matvec oracle of dimension n, with no dense backing.
  static SymmetricOperator from_matvec(Index n, MatVec mv);

  /// diag(d); dense backing is stored when d.size() <= kDenseLimit.
  static SymmetricOperator diagonal(Vector d);

  Index dim() const { return n_; }

  /// One matvec.  Throws std::invalid_argument on dimension mismatch.
  Vector apply(const Vector& v) const;

  bool has_dense() const { return dense_ != nullptr; }

  /// Dense backing; throws if absent.
  const Matrix& dense() const;

  /// Dense form, built from n matvecs on basis vectors when no backing exists.
  Matrix densify() const;

 private:
  SymmetricOperator(Index n, MatVec mv, std::shared_ptr<const Matrix> dense)
      : n_(n), matvec_(std::move(mv)), dense_(std::move(dense)) {}

  Index n_ = 0;
  MatVec matvec_;
  std::shared_ptr<const Matrix> dense_;
};

/// min_x f(x) = x'Ax/2 - b'x over a symmetric operator A; g(x) = Ax - b.
struct QuadraticProblem {
  SymmetricOperator op;
  Vector b;
  std::optional<double> lambda1;  // known largest eigenvalue (the Lipschitz constant)

  Index dim() const { return op.dim(); }
};

/// f(x) using exactly one matvec.
double eval_f(const QuadraticProblem& p, const Vector& x);

/// g(x) = Ax - b using exactly one matvec.
Vector eval_g(const QuadraticProblem& p, const Vector& x);

/// f recovered from an already-computed gradient: f = x'(g - b)/2.  No matvec.
double f_from_gradient(const Vector& x, const Vector& g, const Vector& b);

/// The iteration map (1+beta)I - alpha*A, applied matrix-free; beta = 0 gives
/// I - alpha*A.  Neither matrix is ever formed.
struct ShiftedOperator {
  SymmetricOperator base;
  double alpha = 0.0;
  double beta = 0.0;

  Vector apply(const Vector& v) const;

  /// View as a SymmetricOperator (dense backing derived from the base's).
  SymmetricOperator as_operator() const;
};

/// u <- Av followed by (1+beta)v - alpha*u.  One matvec.
Vector apply_shifted(const ShiftedOperator& h, const Vector& v);

/// Spectrum of (1+beta)I - alpha*A from the spectrum of A.
/// Input ascending (lambda_n <= ... <= lambda_1), output descending
/// (nu_1 >= ... >= nu_n) with nu_i = 1 + beta - alpha*lambda_{n-i+1}.
/// Note the eigenvector order reverses: nu_i pairs with the eigenvector of
/// lambda_{n-i+1}, so the dominant direction of the shifted map is the
/// leftmost eigenvector of A.
std::vector<double> shifted_spectrum(const std::vector<double>& eigs_ascending,
                                     double alpha, double beta);

}  // namespace gdpm
