#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "entlab/algebra/sl2.hpp"
#include "entlab/dynamics/action.hpp"
#include "entlab/spaces/semimetric.hpp"

namespace entlab::constructions {

using algebra::Element;

/// Atom budgets for the tower: the action alone, and anything that builds an
/// N x N distance matrix.
inline constexpr std::size_t kTowerActionBudget = 1'000'000;
inline constexpr std::size_t kTowerMetricBudget = 10'000;

/// The truncated tower G_1 ⊂ ... ⊂ G_depth with G_n = SL(2, L_{n-1}) over the
/// quadratic tower of F_p, so |F| at level n is p^(2^(n-1)).
///
/// Atoms are the elements of G_depth with uniform mass. Every atom factors
/// uniquely as g = c_1 c_2 ... c_depth with c_i a right coset representative
/// of G_{i-1} in G_i, and components[i-1][g] is the index of c_i in
/// coset_reps[i-1]. The action is left translation.
struct TowerAction {
  std::uint32_t p = 0;
  std::size_t depth = 0;
  std::vector<std::shared_ptr<const algebra::Sl2Group>> groups;
  /// Elements of G_i as indices into G_depth, sorted.
  std::vector<std::vector<Element>> level_elements;
  /// Representatives of C_i as indices into G_i.
  std::vector<std::vector<Element>> coset_reps;
  std::vector<std::vector<std::int32_t>> components;
  dynamics::ActionTable action;

  const algebra::Sl2Group& top() const { return *groups.back(); }
  std::size_t atoms() const { return action.atoms(); }
};

/// Throws BudgetExceeded if |G_depth| exceeds `budget`.
TowerAction sl2_tower_action(std::uint32_t p, std::size_t depth,
                             std::size_t budget = kTowerActionBudget);

/// sum_{i<=r} 2^{-i} rho_i, rho_i the cut metric of the first-i-components
/// map. Throws BudgetExceeded above the metric budget.
spaces::Semimetric component_metric(const TowerAction& t, std::size_t r);

/// Field order q_n at level n.
std::uint64_t tower_field_order(std::uint32_t p, std::size_t n);

}  // namespace entlab::constructions
