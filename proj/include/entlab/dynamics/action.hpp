#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "entlab/algebra/finite_group.hpp"
#include "entlab/spaces/prob_space.hpp"

namespace entlab::dynamics {

using algebra::Element;
using algebra::GroupPtr;
using spaces::Atom;
using spaces::SpacePtr;

/// A measure-preserving action of a finite group on a finite probability
/// space, x -> g.x.
///
/// Either an explicit permutation per group element, or left translation of
/// the group on itself (computed through the group product, so it scales to
/// groups whose full table would not fit in memory).
class ActionTable {
 public:
  /// perms[g][x] = g.x. Checks that every row is a permutation, that the
  /// identity acts trivially, that masses are preserved, and the homomorphism
  /// law (exhaustively on small inputs, on a fixed sample otherwise).
  ActionTable(GroupPtr group, SpacePtr space, std::vector<std::vector<Atom>> perms);

  /// G acting on itself by g.x = gx, with uniform measure on G.
  static ActionTable left_translation(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  const SpacePtr& space() const { return space_; }
  std::size_t atoms() const { return space_->size(); }

  Atom act(Element g, Atom x) const {
    if (translation_) return group_->mul(g, x);
    return perms_[static_cast<std::size_t>(g) * atoms() + x];
  }

 private:
  ActionTable(GroupPtr group, SpacePtr space);

  GroupPtr group_;
  SpacePtr space_;
  bool translation_ = false;
  std::vector<Atom> perms_;
};

/// Nested finite subsets F_1 ⊆ F_2 ⊆ ... with optional per-level disjoint
/// blocks covering each F_n. Levels are 1-based.
class FolnerFamily {
 public:
  FolnerFamily(GroupPtr group, std::vector<std::vector<Element>> sets,
               std::vector<std::vector<std::vector<Element>>> blocks = {});

  const GroupPtr& group() const { return group_; }
  std::size_t horizon() const { return sets_.size(); }
  std::span<const Element> set(std::size_t n) const;
  bool has_blocks() const { return !blocks_.empty(); }
  const std::vector<std::vector<Element>>& blocks(std::size_t n) const;

 private:
  GroupPtr group_;
  std::vector<std::vector<Element>> sets_;
  std::vector<std::vector<std::vector<Element>>> blocks_;
};

}  // namespace entlab::dynamics
