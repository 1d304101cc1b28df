#include "entlab/spaces/m_norm.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "entlab/errors.hpp"

namespace entlab::spaces {

namespace {

// After this many pivots without objective progress, switch to Bland's rule.
constexpr std::size_t kStallLimit = 64;

}  // namespace

LpSolution solve_dual_simplex(const DenseLp& lp, double tol) {
  const std::size_t m = lp.rows, n = lp.cols;
  if (lp.a.size() != m * n || lp.b.size() != m || lp.c.size() != n)
    throw InvalidInput("dual simplex: inconsistent dimensions");
  for (double ci : lp.c)
    if (ci < 0.0) throw InvalidInput("dual simplex: negative cost");

  // Dictionary x_B = b - T x_N, z = z0 + d . x_N. Variables 0..n-1 are
  // structural, n..n+m-1 are slacks.
  std::vector<double> t = lp.a;
  std::vector<double> b = lp.b;
  std::vector<double> d = lp.c;
  double z0 = 0.0;
  std::vector<std::size_t> basic(m), nonbasic(n);
  for (std::size_t i = 0; i < m; ++i) basic[i] = n + i;
  for (std::size_t j = 0; j < n; ++j) nonbasic[j] = j;

  const std::size_t max_pivots = 200 * (m + n) + 1000;
  std::size_t pivots = 0, stall = 0;
  double last_z = z0;
  while (true) {
    const bool bland = stall >= kStallLimit;
    std::size_t r = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (b[i] >= -tol) continue;
      if (r == m) {
        r = i;
      } else if (bland ? basic[i] < basic[r] : b[i] < b[r]) {
        r = i;
      }
    }
    if (r == m) break;

    const double* row = &t[r * n];
    std::size_t s = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] >= -tol) continue;
      const double ratio = d[j] / -row[j];
      if (s == n || ratio < best - 1e-12) {
        s = j;
        best = ratio;
      } else if (ratio <= best + 1e-12 &&
                 (bland ? nonbasic[j] < nonbasic[s] : -row[j] > -row[s])) {
        s = j;
        best = std::min(best, ratio);
      }
    }
    if (s == n) throw InternalError("dual simplex: primal infeasible");
    if (++pivots > max_pivots) throw InternalError("dual simplex: pivot limit");

    const double piv = t[r * n + s];
    // Row r.
    for (std::size_t j = 0; j < n; ++j) t[r * n + j] /= piv;
    b[r] /= piv;
    t[r * n + s] = 1.0 / piv;
    // Other rows.
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      const double f = t[i * n + s];
      if (f == 0.0) continue;
      double* ri = &t[i * n];
      const double* rr = &t[r * n];
      for (std::size_t j = 0; j < n; ++j) ri[j] -= f * rr[j];
      ri[s] = -f / piv;
      b[i] -= f * b[r];
    }
    // Objective.
    const double ds = d[s];
    for (std::size_t j = 0; j < n; ++j) d[j] -= ds * t[r * n + j];
    d[s] = -ds / piv;
    z0 += ds * b[r];
    std::swap(basic[r], nonbasic[s]);

    if (z0 > last_z + 1e-12) {
      stall = 0;
      last_z = z0;
    } else {
      ++stall;
    }
  }

  LpSolution sol;
  sol.y.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basic[i] < n) sol.y[basic[i]] = std::max(0.0, b[i]);
  sol.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) sol.objective += lp.c[j] * sol.y[j];
  sol.pivots = pivots;
  return sol;
}

MNormResult m_norm(const SpacePtr& space, const SymmetricKernel& f,
                   std::size_t cap) {
  const std::size_t n = f.size();
  if (n != space->size())
    throw InvalidInput("m_norm: kernel size does not match atom count");
  if (n > cap)
    throw BudgetExceeded("m_norm: " + std::to_string(n) +
                         " atoms exceeds the LP cap " + std::to_string(cap));
  for (std::size_t x = 0; x < n; ++x)
    if (!(space->mass(x) > 0.0))
      throw InvalidInput("m_norm: atom " + std::to_string(x) + " has zero mass");

  // Pair index for x < y.
  std::vector<std::size_t> pid(n * n, 0);
  std::size_t vars = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) pid[x * n + y] = pid[y * n + x] = vars++;

  std::vector<double> lower(vars), cost(vars);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      lower[pid[x * n + y]] = std::abs(f(x, y));
      cost[pid[x * n + y]] = 2.0 * space->mass(x) * space->mass(y);
    }

  // rho = lower + y; each triangle "rho_a <= rho_b + rho_c" becomes
  // y_a - y_b - y_c <= l_b + l_c - l_a.
  DenseLp lp;
  lp.cols = vars;
  lp.c = cost;
  auto add_row = [&](std::size_t a, std::size_t b1, std::size_t c1) {
    lp.a.resize(lp.a.size() + vars, 0.0);
    double* row = &lp.a[lp.rows * vars];
    row[a] += 1.0;
    row[b1] -= 1.0;
    row[c1] -= 1.0;
    lp.b.push_back(lower[b1] + lower[c1] - lower[a]);
    ++lp.rows;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        const auto xy = pid[x * n + y], xz = pid[x * n + z], yz = pid[y * n + z];
        add_row(xz, xy, yz);
        add_row(xy, xz, yz);
        add_row(yz, xy, xz);
      }

  MNormResult out;
  out.minimizer = SymmetricKernel(n);
  if (vars == 0) return out;
  const auto sol = solve_dual_simplex(lp);
  out.pivots = sol.pivots;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const auto k = pid[x * n + y];
      out.minimizer.set(x, y, lower[k] + sol.y[k]);
    }
  // Independent feasibility check of the returned optimum.
  constexpr double kTol = 1e-8;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && out.minimizer(x, y) < std::abs(f(x, y)) - kTol)
        throw InternalError("m_norm: solution does not dominate |f|");
      for (std::size_t z = 0; z < n; ++z)
        if (out.minimizer(x, z) > out.minimizer(x, y) + out.minimizer(y, z) + kTol)
          throw InternalError("m_norm: solution violates a triangle inequality");
    }
  out.value = l1_norm(space, out.minimizer);
  return out;
}

}  // namespace entlab::spaces
