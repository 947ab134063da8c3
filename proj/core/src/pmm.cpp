#include "gdpm/pmm.hpp"

namespace gdpm {

Vector canonical_sign(Vector v) {
  Index imax = 0;
  double best = -1.0;
  for (Index i = 0; i < v.size(); ++i) {
    double a = std::abs(v[i]);
    if (a > best) {
      best = a;
      imax = i;
    }
  }
  if (v.size() > 0 && v[imax] < 0.0) v = -v;
  return v;
}

PmmState pmm_init(const Vector& w0, double beta) {
  double n = w0.norm();
  if (!(n > 0.0)) throw std::invalid_argument("pmm_init: w0 must be nonzero");
  PmmState st;
  st.w_prev = Vector::Zero(w0.size());
  st.w_curr = w0 / n;
  st.k = 0;
  st.beta = beta;
  return st;
}

PmmState pmm_step(const SymmetricOperator& m, const PmmState& st) {
  Vector w = m.apply(st.w_curr) - st.beta * st.w_prev;
  double nu = w.dot(st.w_curr) / st.w_curr.squaredNorm();
  double n = w.norm();
  if (n == 0.0) throw NumericalError("pmm_step: degenerate iterate");
  PmmState next;
  next.w_prev = st.w_curr;
  next.w_curr = w / n;
  next.nu_est = nu;
  next.k = st.k + 1;
  next.beta = st.beta;
  return next;
}

PmmResult run_pmm(const SymmetricOperator& m, const Vector& w0, double beta, double tol,
                  int max_iter) {
  double n0 = w0.norm();
  if (!(n0 > 0.0)) throw std::invalid_argument("run_pmm: w0 must be nonzero");

  Vector w_prev = Vector::Zero(w0.size());
  Vector w_curr = w0 / n0;
  double nu_prev = 0.0;
  bool have_prev = false;

  for (int k = 1; k <= max_iter; ++k) {
    Vector w = m.apply(w_curr) - beta * w_prev;
    double nu = w.dot(w_curr);
    double residual = (w + beta * w_prev - nu * w_curr).norm();  // ||M w_k - nu w_k||
    double n = w.norm();
    if (n == 0.0) throw NumericalError("run_pmm: degenerate iterate");
    w_prev = w_curr;
    w_curr = w / n;
    if (residual <= tol) return {nu, canonical_sign(w_curr), k};
    if (have_prev && std::abs(nu - nu_prev) <= tol * std::max(1.0, std::abs(nu_prev)))
      return {nu, canonical_sign(w_curr), k};
    nu_prev = nu;
    have_prev = true;
  }
  return {nu_prev, canonical_sign(w_curr), max_iter};
}

}  // namespace gdpm
