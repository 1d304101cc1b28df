#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "entlab/algebra/field_tower.hpp"
#include "entlab/algebra/finite_group.hpp"

namespace entlab::algebra {

/// 2x2 matrix [[a, b], [c, d]] over one level of a field tower.
struct Mat2 {
  FieldElement a, b, c, d;

  FieldElement det() const { return a * d - b * c; }
  Mat2 operator*(const Mat2& o) const;
  bool operator==(const Mat2& o) const = default;
};

/// SL(2, L_k) for one level L_k of a field tower, elements listed in
/// lexicographic order of their (a, b, c, d) packed values.
class Sl2Group final : public FiniteGroup {
 public:
  static constexpr std::size_t kDefaultBudget = 1'000'000;

  /// Throws BudgetExceeded if q(q^2 - 1) > budget.
  static std::shared_ptr<const Sl2Group> create(
      std::shared_ptr<const FieldTower> tower, int level,
      std::size_t budget = kDefaultBudget);

  const std::shared_ptr<const FieldTower>& tower() const { return tower_; }
  int level() const { return level_; }
  std::uint64_t field_order() const { return q_; }
  std::uint32_t characteristic() const { return tower_->characteristic(); }

  Mat2 matrix(Element g) const;
  std::array<FieldValue, 4> entries(Element g) const;
  /// Index of a determinant-one matrix given by packed entries; -1 if the
  /// entries are not in the group.
  Element find(const std::array<FieldValue, 4>& m) const;
  Element index_of(const Mat2& m) const;

  /// [[1, t], [0, 1]] and [[1, 0], [t, 1]].
  Element upper_unipotent(FieldValue t) const;
  Element lower_unipotent(FieldValue t) const;
  /// The unipotent [[1, 1], [0, 1]], of order p.
  Element g0() const { return upper_unipotent(1); }

  /// Unipotents u(b), l(b) and their inverses for b ranging over the F_p
  /// basis of L_k; they generate the group.
  std::vector<Element> standard_generators() const;

  std::string format(Element g) const override;

 private:
  Sl2Group(std::shared_ptr<const FieldTower> tower, int level);
  Element do_mul(Element a, Element b) const override;
  Element do_inv(Element a) const override;
  std::uint64_t key(const std::array<FieldValue, 4>& m) const;

  std::shared_ptr<const FieldTower> tower_;
  int level_;
  std::uint64_t q_;
  std::vector<std::uint64_t> keys_;  // sorted
};

/// Indices in `big` of the elements of `small` (same tower, lower level), in
/// the order of `small`'s elements.
std::vector<Element> embed_subgroup(const Sl2Group& small, const Sl2Group& big);

/// q(q^2 - 1)
std::uint64_t sl2_order(std::uint64_t q);

}  // namespace entlab::algebra
