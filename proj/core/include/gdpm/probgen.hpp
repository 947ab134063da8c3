#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "gdpm/linops.hpp"

namespace gdpm {

/// Eigenvalue laws for random problem generation.  |lambda_n| <= |lambda_1|
/// is enforced by construction: the indefinite law rescales its positive
/// block so lambda_1 = 1 exactly and clips negatives to [-lambda_1, 0);
/// explicit spectra violating the bound are rejected.
struct UniformPdLaw {
  double lo = 0.01;  // must be > 0
  double hi = 1.0;
};
struct IndefiniteLaw {
  int neg_count = 0;  // 0 means n/5
  double neg_lo = -1.0, neg_hi = -0.1;
  double pos_lo = 0.1, pos_hi = 1.0;
};
struct PsdLaw {
  int zero_count = 1;
  double pos_lo = 0.1, pos_hi = 1.0;
};
struct ExplicitLaw {
  std::vector<double> values;
};

using EigLaw = std::variant<UniformPdLaw, IndefiniteLaw, PsdLaw, ExplicitLaw>;

struct SpectrumSpec {
  Index n = 0;
  EigLaw law;
  std::uint64_t seed = 0;
};

enum class RhsKind {
  Zero,
  FromSolution,  // draw x* and set b = A x*
};

struct GeneratedProblem {
  QuadraticProblem problem;      // lambda1 filled in from the ground truth
  Vector eigenvalues;            // ascending
  Matrix eigenvectors;           // column i pairs with eigenvalues[i]
  std::optional<Vector> x_star;  // present for RhsKind::FromSolution
};

/// Draws the spectrum per the law, orthonormalizes a Gaussian matrix by
/// modified Gram-Schmidt with re-orthogonalization, forms A = Q diag Q' and
/// symmetrizes it explicitly.  Fully deterministic given the seed.
GeneratedProblem gen_problem(const SpectrumSpec& spec, RhsKind rhs);

enum class PointLaw { StandardGaussian, UniformBox };

/// Deterministic random initial point.
Vector gen_initial_point(Index n, std::uint64_t seed, PointLaw law, double lo = -1.0,
                         double hi = 1.0);

}  // namespace gdpm
