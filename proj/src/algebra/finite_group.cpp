#include "entlab/algebra/finite_group.hpp"

#include <algorithm>
#include <string>

#include "entlab/errors.hpp"

namespace entlab::algebra {

FiniteGroup::FiniteGroup(std::string name, std::size_t order, Element identity)
    : name_(std::move(name)), order_(order), identity_(identity) {
  if (order_ == 0) throw InvalidInput("finite group: empty group");
}

void FiniteGroup::build_cache() {
  if (order_ > kCayleyTableLimit) return;
  std::vector<Element> table(order_ * order_);
  std::vector<Element> inverse(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    inverse[a] = do_inv(static_cast<Element>(a));
    for (std::size_t b = 0; b < order_; ++b)
      table[a * order_ + b] =
          do_mul(static_cast<Element>(a), static_cast<Element>(b));
  }
  table_ = std::move(table);
  inverse_ = std::move(inverse);
}

Element FiniteGroup::pow(Element a, std::uint64_t e) const {
  Element r = identity_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::shared_ptr<const CyclicGroup> CyclicGroup::create(std::size_t n) {
  auto g = std::shared_ptr<CyclicGroup>(new CyclicGroup(n));
  g->build_cache();
  return g;
}

CyclicGroup::CyclicGroup(std::size_t n)
    : FiniteGroup("Z/" + std::to_string(n), n, 0) {}

Element CyclicGroup::do_mul(Element a, Element b) const {
  return static_cast<Element>((static_cast<std::size_t>(a) + b) % order());
}

Element CyclicGroup::do_inv(Element a) const {
  return static_cast<Element>((order() - a) % order());
}

std::shared_ptr<const ProductGroup> ProductGroup::create(GroupPtr left,
                                                         GroupPtr right) {
  if (!left || !right) throw InvalidInput("product group: null factor");
  auto g = std::shared_ptr<ProductGroup>(
      new ProductGroup(std::move(left), std::move(right)));
  g->build_cache();
  return g;
}

ProductGroup::ProductGroup(GroupPtr left, GroupPtr right)
    : FiniteGroup(left->name() + " x " + right->name(),
                  left->order() * right->order(),
                  static_cast<Element>(left->identity() * right->order() +
                                       right->identity())),
      left_(std::move(left)),
      right_(std::move(right)) {}

Element ProductGroup::pair(Element a, Element b) const {
  return static_cast<Element>(static_cast<std::size_t>(a) * right_->order() + b);
}
Element ProductGroup::left_of(Element g) const {
  return static_cast<Element>(g / right_->order());
}
Element ProductGroup::right_of(Element g) const {
  return static_cast<Element>(g % right_->order());
}

std::string ProductGroup::format(Element a) const {
  return "(" + left_->format(left_of(a)) + ", " + right_->format(right_of(a)) +
         ")";
}

Element ProductGroup::do_mul(Element a, Element b) const {
  return pair(left_->mul(left_of(a), left_of(b)),
              right_->mul(right_of(a), right_of(b)));
}

Element ProductGroup::do_inv(Element a) const {
  return pair(left_->inv(left_of(a)), right_->inv(right_of(a)));
}

std::size_t element_order(const FiniteGroup& group, Element g) {
  std::size_t m = 1;
  for (Element x = g; x != group.identity(); x = group.mul(x, g)) ++m;
  return m;
}

std::vector<Element> generated_subgroup(const FiniteGroup& group,
                                        std::span<const Element> gens) {
  std::vector<char> seen(group.order(), 0);
  std::vector<Element> out{group.identity()};
  seen[group.identity()] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Element s : gens) {
      const Element y = group.mul(out[head], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_subgroup(const FiniteGroup& group,
                      std::span<const Element> subset) {
  if (subset.empty()) throw InvalidInput("subgroup check: empty subset");
  std::vector<char> in(group.order(), 0);
  for (Element h : subset) {
    if (h < 0 || static_cast<std::size_t>(h) >= group.order())
      throw InvalidInput("subgroup check: element out of range");
    in[h] = 1;
  }
  for (Element a : subset) {
    if (!in[group.inv(a)])
      throw InvalidInput("not a subgroup: inverse of element " +
                         std::to_string(a) + " missing");
    for (Element b : subset)
      if (!in[group.mul(a, b)])
        throw InvalidInput("not a subgroup: product of witness pair (" +
                           std::to_string(a) + ", " + std::to_string(b) +
                           ") leaves the subset");
  }
}

RightCosets coset_representatives(const FiniteGroup& group,
                                  std::span<const Element> subgroup) {
  require_subgroup(group, subgroup);
  RightCosets out;
  out.coset_of.assign(group.order(), -1);
  // The identity's coset H is registered first so it gets id 0.
  auto mark = [&](Element rep) {
    const auto id = static_cast<std::int32_t>(out.representatives.size());
    out.representatives.push_back(rep);
    for (Element h : subgroup) out.coset_of[group.mul(h, rep)] = id;
  };
  mark(*std::min_element(subgroup.begin(), subgroup.end()));
  for (std::size_t g = 0; g < group.order(); ++g)
    if (out.coset_of[g] < 0) mark(static_cast<Element>(g));
  if (out.representatives.size() * subgroup.size() != group.order())
    throw InternalError("coset decomposition does not partition the group");
  return out;
}

TripleProduct triple_product_size(const FiniteGroup& group,
                                  std::span<const Element> subset) {
  if (subset.empty()) throw InvalidInput("triple product: empty set");
  std::vector<Element> a(subset.begin(), subset.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());

  auto product = [&](const std::vector<Element>& left) {
    std::vector<char> hit(group.order(), 0);
    std::vector<Element> out;
    for (Element x : left)
      for (Element y : a) {
        const Element z = group.mul(x, y);
        if (!hit[z]) {
          hit[z] = 1;
          out.push_back(z);
        }
      }
    return out;
  };
  const auto a2 = product(a);
  const auto a3 = product(a2);
  TripleProduct r;
  r.size_a = a.size();
  r.size_a2 = a2.size();
  r.size_a3 = a3.size();
  r.generates = generated_subgroup(group, a).size() == group.order();
  return r;
}

}  // namespace entlab::algebra
