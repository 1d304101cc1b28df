#pragma once

#include <cstddef>
#include <vector>

#include "entlab/spaces/semimetric.hpp"

namespace entlab::spaces {

/// Dense LP  min c.y  s.t.  A y <= b,  y >= 0  with c >= 0.
///
/// Solved by the dual simplex method on a condensed dictionary: the slack
/// basis is dual feasible because c >= 0, so no phase one is needed.
struct DenseLp {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;  // row-major rows x cols
  std::vector<double> b;
  std::vector<double> c;
};

struct LpSolution {
  std::vector<double> y;
  double objective = 0.0;
  std::size_t pivots = 0;
};

/// Throws InternalError if the problem is found infeasible or the pivot limit
/// is hit.
LpSolution solve_dual_simplex(const DenseLp& lp, double tol = 1e-11);

struct MNormResult {
  double value = 0.0;
  /// The optimal dominating semimetric.
  SymmetricKernel minimizer{0};
  std::size_t pivots = 0;
};

/// inf { ||rho||_L1 : rho semimetric, rho >= |f| } as a linear program over
/// the N(N-1)/2 upper-triangle entries with all 3 * C(N, 3) triangle
/// constraints. Requires strictly positive masses and N <= cap.
///
/// Throws BudgetExceeded above the cap and InvalidInput for zero-mass atoms.
MNormResult m_norm(const SpacePtr& space, const SymmetricKernel& f,
                   std::size_t cap = 16);

}  // namespace entlab::spaces
