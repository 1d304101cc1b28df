#pragma once

#include <span>
#include <vector>

#include "entlab/dynamics/action.hpp"
#include "entlab/spaces/prob_space.hpp"

namespace entlab::dynamics {

using spaces::Partition;

/// Pullback g^{-1} xi: x is labelled by xi(g.x).
Partition pullback_partition(const ActionTable& action, Element g, const Partition& xi);

/// Common refinement of g^{-1} xi over g in P. Throws for empty P.
Partition refined_orbit_partition(const ActionTable& action, std::span<const Element> p,
                                  const Partition& xi);

/// min over blocks of H(refined over the block) / |block|, in bits per element.
double seq_entropy_functional(const ActionTable& action, const Partition& xi,
                              const std::vector<std::vector<Element>>& blocks);

struct SequentialRow {
  std::size_t n = 0;
  double functional = 0.0;
  std::vector<double> per_block;
};

/// One row per level 1..horizon of a family with blocks.
std::vector<SequentialRow> sequential_entropy_profile(const ActionTable& action,
                                                      const Partition& xi,
                                                      const FolnerFamily& family,
                                                      std::size_t horizon);

struct BernoulliShift {
  ActionTable action;
  /// x -> x(e), the coordinate at the identity.
  Partition coordinate;
  std::size_t alphabet;
};

/// Functions G -> {0..a-1} with the uniform product measure and the shift
/// (g.x)(h) = x(g^{-1} h). Atom x encodes the function by base-a digits,
/// digit h being x(h). Throws BudgetExceeded when a^|G| exceeds `cap`.
BernoulliShift bernoulli_shift(GroupPtr group, std::size_t alphabet,
                               std::size_t cap = std::size_t{1} << 20);

}  // namespace entlab::dynamics
