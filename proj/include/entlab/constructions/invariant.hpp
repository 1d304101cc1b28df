#pragma once

#include <cstdint>
#include <vector>

#include "entlab/algebra/finite_group.hpp"
#include "entlab/spaces/semimetric.hpp"

namespace entlab::constructions {

/// Cell index j of every element x = g0^j b, where b is the least element of
/// the <g0>-orbit of x. Throws InvalidInput unless g0 has exactly the given
/// order.
std::vector<std::int32_t> transversal_labels(const algebra::FiniteGroup& group,
                                             algebra::Element g0, std::size_t order);

/// The same cells as a Partition of a group acting on itself by left
/// translation: one point of every <g0>-orbit per cell. Partition relabels
/// cells by first appearance, so use transversal_labels for the index j.
spaces::Partition transversal_partition(const algebra::FiniteGroup& group,
                                        const spaces::SpacePtr& space, algebra::Element g0,
                                        std::size_t order);

/// Left-invariant semimetric rho(x, y) = D(x^{-1} y), D the cheapest product
/// of steps s with cost root[s]. A root of +infinity forbids the step.
/// Requires root[e] = 0, root[s] = root[s^{-1}] >= 0, and finite D
/// everywhere; throws InvalidInput otherwise.
spaces::Semimetric left_invariant_semimetric(const algebra::FiniteGroup& group,
                                             const spaces::SpacePtr& space,
                                             const std::vector<double>& root);

/// Roots for the sampled recipes.
std::vector<double> discrete_root(const algebra::FiniteGroup& group);
std::vector<double> word_root(const algebra::FiniteGroup& group,
                              const std::vector<algebra::Element>& generators);
/// Uniform costs in [0.5, 1] paired on {s, s^{-1}}, from a seeded generator.
std::vector<double> random_root(const algebra::FiniteGroup& group, std::uint64_t seed);

}  // namespace entlab::constructions
