#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "entlab/spaces/semimetric.hpp"

namespace entlab::entropy {

using spaces::Atom;
using spaces::Semimetric;

/// X_0 plus cells X_1..X_k. Cells are disjoint and non-empty.
struct Decomposition {
  std::vector<Atom> exceptional;
  std::vector<std::vector<Atom>> cells;

  /// One label per atom: 0 for X_0, i for X_i.
  std::vector<std::int32_t> labels(std::size_t atoms) const;
};

/// True iff `d` covers every atom exactly once, mass(X_0) < eps and every
/// cell has diameter < eps.
bool is_admissible(const Semimetric& rho, double eps, const Decomposition& d);

struct EpsEntropyResult {
  double eps = 0.0;
  double lower_bits = 0.0;
  double upper_bits = 0.0;
  /// Cell counts behind the two bounds.
  std::size_t lower_cells = 0;
  std::size_t upper_cells = 0;
  bool exact = false;
  std::optional<Decomposition> witness;
};

struct ExactOptions {
  std::size_t cap = 24;
  std::size_t node_limit = 5'000'000;
};

/// log2 k with the convention 0 for k <= 1.
double cells_to_bits(std::size_t k);

/// Minimal k by branch and bound. Throws BudgetExceeded above the atom cap
/// or the node limit, InvalidInput for eps outside (0, 1].
EpsEntropyResult eps_entropy_exact(const Semimetric& rho, double eps,
                                   const ExactOptions& opts = {});

/// Greedy ball cover; an upper bound with witness.
EpsEntropyResult eps_entropy_greedy_upper(const Semimetric& rho, double eps);

/// Bound from a greedy eps-separated set; no witness.
EpsEntropyResult eps_entropy_packing_lower(const Semimetric& rho, double eps);

/// Exact when within the cap and node limit, otherwise the pair
/// (packing lower, greedy upper).
EpsEntropyResult eps_entropy(const Semimetric& rho, double eps,
                             const ExactOptions& opts = {});

}  // namespace entlab::entropy
