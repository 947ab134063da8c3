#include "gdpm/probgen.hpp"

#include <algorithm>

#include "gdpm/rng.hpp"

namespace gdpm {

namespace {

// Sub-stream tags under one user seed.
constexpr std::uint64_t kTagEigs = 1;
constexpr std::uint64_t kTagBasis = 2;
constexpr std::uint64_t kTagXStar = 3;
constexpr std::uint64_t kTagInitPoint = 4;

std::vector<double> draw_spectrum(const SpectrumSpec& spec, SplitMix64& rng) {
  const Index n = spec.n;
  std::vector<double> eigs;
  eigs.reserve(static_cast<std::size_t>(n));

  if (const auto* pd = std::get_if<UniformPdLaw>(&spec.law)) {
    if (!(pd->lo > 0.0) || !(pd->hi >= pd->lo))
      throw std::invalid_argument("gen_problem: UniformPd requires 0 < lo <= hi");
    for (Index i = 0; i < n; ++i) eigs.push_back(rng.uniform(pd->lo, pd->hi));
  } else if (const auto* ind = std::get_if<IndefiniteLaw>(&spec.law)) {
    int nneg = ind->neg_count > 0 ? ind->neg_count : static_cast<int>(n / 5);
    if (nneg < 1 || nneg >= n)
      throw std::invalid_argument("gen_problem: Indefinite needs 1 <= neg_count < n");
    if (!(ind->neg_lo <= ind->neg_hi) || !(ind->neg_hi < 0.0) || !(ind->pos_lo > 0.0))
      throw std::invalid_argument("gen_problem: Indefinite ranges must satisfy neg < 0 < pos");
    std::vector<double> pos, neg;
    for (Index i = 0; i < n - nneg; ++i) pos.push_back(rng.uniform(ind->pos_lo, ind->pos_hi));
    for (int i = 0; i < nneg; ++i) neg.push_back(rng.uniform(ind->neg_lo, ind->neg_hi));
    double pmax = *std::max_element(pos.begin(), pos.end());
    for (double& v : pos) v /= pmax;  // lambda_1 = 1 exactly
    double nmin = *std::min_element(neg.begin(), neg.end());
    if (-nmin > 1.0)
      for (double& v : neg) v /= -nmin;  // clip so |lambda_n| <= lambda_1
    eigs.insert(eigs.end(), pos.begin(), pos.end());
    eigs.insert(eigs.end(), neg.begin(), neg.end());
  } else if (const auto* psd = std::get_if<PsdLaw>(&spec.law)) {
    if (psd->zero_count < 0 || psd->zero_count >= n)
      throw std::invalid_argument("gen_problem: Psd needs 0 <= zero_count < n");
    if (!(psd->pos_lo > 0.0))
      throw std::invalid_argument("gen_problem: Psd requires pos_lo > 0");
    for (int i = 0; i < psd->zero_count; ++i) eigs.push_back(0.0);
    for (Index i = 0; i < n - psd->zero_count; ++i)
      eigs.push_back(rng.uniform(psd->pos_lo, psd->pos_hi));
  } else {
    const auto& ex = std::get<ExplicitLaw>(spec.law);
    if (static_cast<Index>(ex.values.size()) != n)
      throw std::invalid_argument("gen_problem: Explicit list size must equal n");
    eigs = ex.values;
  }

  std::sort(eigs.begin(), eigs.end());
  if (std::abs(eigs.front()) > std::abs(eigs.back()) + 1e-15 * std::abs(eigs.front()))
    throw std::invalid_argument("gen_problem: spectrum violates |lambda_n| <= |lambda_1|");
  return eigs;
}

/// Modified Gram-Schmidt with one re-orthogonalization pass per column.
Matrix orthonormalize(Matrix m) {
  const Index n = m.cols();
  for (Index j = 0; j < n; ++j) {
    auto col = m.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (Index i = 0; i < j; ++i) col -= m.col(i).dot(col) * m.col(i);
    double norm = col.norm();
    if (norm < 1e-12)
      throw NumericalError("orthonormalize: rank-deficient random basis (retry another seed)");
    col /= norm;
  }
  return m;
}

}  // namespace

GeneratedProblem gen_problem(const SpectrumSpec& spec, RhsKind rhs) {
  if (spec.n < 2) throw std::invalid_argument("gen_problem: n must be >= 2");

  auto eig_rng = SplitMix64::stream(spec.seed, kTagEigs);
  std::vector<double> eigs = draw_spectrum(spec, eig_rng);

  auto basis_rng = SplitMix64::stream(spec.seed, kTagBasis);
  Matrix gauss(spec.n, spec.n);
  for (Index j = 0; j < spec.n; ++j)
    for (Index i = 0; i < spec.n; ++i) gauss(i, j) = basis_rng.gaussian();
  Matrix q = orthonormalize(std::move(gauss));

  Vector lam(spec.n);
  for (Index i = 0; i < spec.n; ++i) lam[i] = eigs[static_cast<std::size_t>(i)];

  Matrix a = q * lam.asDiagonal() * q.transpose();
  a = (0.5 * (a + a.transpose())).eval();

  GeneratedProblem out;
  out.eigenvalues = lam;
  out.eigenvectors = q;

  SymmetricOperator op = spec.n <= SymmetricOperator::kDenseLimit
                             ? SymmetricOperator::from_dense(std::move(a))
                             : SymmetricOperator::from_matvec(
                                   spec.n, [q, lam](const Vector& v) -> Vector {
                                     return q * (lam.asDiagonal() * (q.transpose() * v));
                                   });

  Vector b = Vector::Zero(spec.n);
  if (rhs == RhsKind::FromSolution) {
    auto xs_rng = SplitMix64::stream(spec.seed, kTagXStar);
    Vector x_star = xs_rng.gaussian_vector(spec.n);
    b = op.apply(x_star);
    out.x_star = std::move(x_star);
  }

  out.problem = QuadraticProblem{std::move(op), std::move(b), lam[spec.n - 1]};
  return out;
}

Vector gen_initial_point(Index n, std::uint64_t seed, PointLaw law, double lo, double hi) {
  if (n < 1) throw std::invalid_argument("gen_initial_point: n must be >= 1");
  auto rng = SplitMix64::stream(seed, kTagInitPoint);
  return law == PointLaw::StandardGaussian ? rng.gaussian_vector(n) : rng.uniform_vector(n, lo, hi);
}

}  // namespace gdpm
