#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace entlab::algebra {

/// Index of a group element in its group's canonical order.
using Element = std::int32_t;

/// A finite group with elements indexed 0..order()-1.
///
/// Products go through a cached Cayley table when the group is small enough
/// (see kCayleyTableLimit) and through the concrete arithmetic otherwise.
class FiniteGroup {
 public:
  static constexpr std::size_t kCayleyTableLimit = 2048;

  virtual ~FiniteGroup() = default;

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  const std::string& name() const { return name_; }

  Element mul(Element a, Element b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
    return do_mul(a, b);
  }
  Element inv(Element a) const {
    if (!inverse_.empty()) return inverse_[a];
    return do_inv(a);
  }
  Element pow(Element a, std::uint64_t e) const;
  /// a * b^{-1}
  Element quotient(Element a, Element b) const { return mul(a, inv(b)); }

  /// Human-readable rendering of an element.
  virtual std::string format(Element a) const { return std::to_string(a); }

 protected:
  FiniteGroup(std::string name, std::size_t order, Element identity);
  /// Builds the Cayley and inverse tables if the order permits. Concrete
  /// groups call this once their arithmetic is ready.
  void build_cache();
  void set_identity(Element e) { identity_ = e; }

  virtual Element do_mul(Element a, Element b) const = 0;
  virtual Element do_inv(Element a) const = 0;

 private:
  std::string name_;
  std::size_t order_;
  Element identity_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Z/n written additively; element i is the residue i.
class CyclicGroup final : public FiniteGroup {
 public:
  static std::shared_ptr<const CyclicGroup> create(std::size_t n);

 private:
  explicit CyclicGroup(std::size_t n);
  Element do_mul(Element a, Element b) const override;
  Element do_inv(Element a) const override;
};

/// Direct product A x B; element (a, b) has index a * |B| + b.
class ProductGroup final : public FiniteGroup {
 public:
  static std::shared_ptr<const ProductGroup> create(GroupPtr left,
                                                    GroupPtr right);
  Element pair(Element a, Element b) const;
  Element left_of(Element g) const;
  Element right_of(Element g) const;
  std::string format(Element a) const override;

 private:
  ProductGroup(GroupPtr left, GroupPtr right);
  Element do_mul(Element a, Element b) const override;
  Element do_inv(Element a) const override;

  GroupPtr left_, right_;
};

/// Least m >= 1 with g^m = e.
std::size_t element_order(const FiniteGroup& group, Element g);

/// Subgroup generated by `gens` (closure BFS), sorted ascending.
std::vector<Element> generated_subgroup(const FiniteGroup& group,
                                        std::span<const Element> gens);

/// Throws InvalidInput with a witness when `subset` is not a subgroup.
void require_subgroup(const FiniteGroup& group, std::span<const Element> subset);

/// Right cosets H g of a subgroup H.
struct RightCosets {
  /// One representative per coset: the canonically least element of the
  /// coset. The coset H itself comes first, the rest by ascending index.
  std::vector<Element> representatives;
  /// coset_of[g] indexes `representatives`.
  std::vector<std::int32_t> coset_of;
};

/// Throws InvalidInput (with a witness pair) if `subgroup` is not closed.
RightCosets coset_representatives(const FiniteGroup& group,
                                  std::span<const Element> subgroup);

struct TripleProduct {
  std::size_t size_a = 0;
  std::size_t size_a2 = 0;
  std::size_t size_a3 = 0;
  bool generates = false;
};

/// Exact |A|, |A^2|, |A^3| and whether <A> is the whole group. Duplicate
/// entries of A are ignored. Throws InvalidInput for empty A.
TripleProduct triple_product_size(const FiniteGroup& group,
                                  std::span<const Element> subset);

}  // namespace entlab::algebra
