#include "gdpm/jacobi_eig.hpp"

#include <algorithm>
#include <numeric>

namespace gdpm {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

EigDecomposition jacobi_eigensolve(Matrix a) {
  const Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("jacobi_eigensolve: matrix must be square");
  Matrix v = Matrix::Identity(n, n);

  if (n == 1) return {Vector::Constant(1, a(0, 0)), v};

  const double norm_f = std::max(a.norm(), 1e-300);
  const double stop = 1e-15 * norm_f;
  const int max_sweeps = 64;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = off_diagonal_norm(a);
    if (off <= stop) break;
    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (std::abs(apq) <= 1e-18 * norm_f) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        // Rotation angle zeroing a(p,q) (Golub & Van Loan 8.4).
        double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;

        for (Index k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Index k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (Index k = 0; k < n; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(),
            [&a](Index i, Index j) { return a(i, i) < a(j, j); });

  EigDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Index i = 0; i < n; ++i) {
    out.eigenvalues[i] = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]);
    out.eigenvectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

EigDecomposition dense_eig_oracle(const SymmetricOperator& op) {
  if (op.dim() > SymmetricOperator::kDenseLimit)
    throw std::invalid_argument("dense_eig_oracle: dimension exceeds the dense limit");
  Matrix a = op.densify();
  double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);
  if (asym > 1e-12 * scale)
    throw NumericalError("dense_eig_oracle: non-symmetric backing detected");
  a = 0.5 * (a + a.transpose()).eval();
  return jacobi_eigensolve(std::move(a));
}

}  // namespace gdpm
