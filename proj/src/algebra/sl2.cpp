#include "entlab/algebra/sl2.hpp"

#include <algorithm>
#include <string>

#include "entlab/errors.hpp"

namespace entlab::algebra {

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
          c * o.b + d * o.d};
}

std::uint64_t sl2_order(std::uint64_t q) { return q * (q * q - 1); }

std::shared_ptr<const Sl2Group> Sl2Group::create(
    std::shared_ptr<const FieldTower> tower, int level, std::size_t budget) {
  if (!tower) throw InvalidInput("sl2: null field tower");
  const std::uint64_t q = tower->order(level);
  if (q >= (1u << 16) || sl2_order(q) > budget)
    throw BudgetExceeded("sl2: |SL(2," + std::to_string(q) +
                         ")| = q(q^2-1) = " +
                         (q >= (1u << 16) ? std::string("too large")
                                          : std::to_string(sl2_order(q))) +
                         " exceeds the enumeration budget " +
                         std::to_string(budget));
  auto g = std::shared_ptr<Sl2Group>(new Sl2Group(std::move(tower), level));
  g->build_cache();
  return g;
}

Sl2Group::Sl2Group(std::shared_ptr<const FieldTower> tower, int level)
    : FiniteGroup("SL(2," + std::to_string(tower->order(level)) + ")",
                  sl2_order(tower->order(level)), 0),
      tower_(std::move(tower)),
      level_(level),
      q_(tower_->order(level)) {
  const FieldTower& f = *tower_;
  keys_.reserve(order());
  // Lexicographic in (a, b, c, d): for a != 0, d = (1 + bc) / a is forced;
  // for a = 0, c = -1/b is forced and d is free.
  for (FieldValue a = 0; a < q_; ++a)
    for (FieldValue b = 0; b < q_; ++b) {
      if (a == 0) {
        if (b == 0) continue;
        const FieldValue c = f.neg(level_, f.inv(level_, b));
        for (FieldValue d = 0; d < q_; ++d) keys_.push_back(key({a, b, c, d}));
        continue;
      }
      const FieldValue ainv = f.inv(level_, a);
      for (FieldValue c = 0; c < q_; ++c) {
        const FieldValue d = f.mul(level_, f.add(level_, 1, f.mul(level_, b, c)), ainv);
        keys_.push_back(key({a, b, c, d}));
      }
    }
  if (keys_.size() != order() || !std::is_sorted(keys_.begin(), keys_.end()))
    throw InternalError("sl2: enumeration does not match q(q^2-1)");
  // The base constructor was given a placeholder identity.
  const Element e = find({1, 0, 0, 1});
  set_identity(e);
}

std::uint64_t Sl2Group::key(const std::array<FieldValue, 4>& m) const {
  return ((m[0] * q_ + m[1]) * q_ + m[2]) * q_ + m[3];
}

std::array<FieldValue, 4> Sl2Group::entries(Element g) const {
  std::uint64_t k = keys_.at(static_cast<std::size_t>(g));
  std::array<FieldValue, 4> m{};
  for (int i = 3; i >= 0; --i) {
    m[i] = k % q_;
    k /= q_;
  }
  return m;
}

Mat2 Sl2Group::matrix(Element g) const {
  const auto m = entries(g);
  return {FieldElement(tower_, level_, m[0]), FieldElement(tower_, level_, m[1]),
          FieldElement(tower_, level_, m[2]), FieldElement(tower_, level_, m[3])};
}

Element Sl2Group::find(const std::array<FieldValue, 4>& m) const {
  for (FieldValue v : m)
    if (v >= q_) return -1;
  const auto k = key(m);
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
  if (it == keys_.end() || *it != k) return -1;
  return static_cast<Element>(it - keys_.begin());
}

Element Sl2Group::index_of(const Mat2& m) const {
  for (const auto* x : {&m.a, &m.b, &m.c, &m.d})
    if (x->tower() != tower_)
      throw InvalidInput("sl2: matrix over a different tower");
  const int lvl = std::max({m.a.level(), m.b.level(), m.c.level(), m.d.level()});
  if (lvl > level_) throw InvalidInput("sl2: matrix entries above group level");
  const Element g = find({m.a.value(), m.b.value(), m.c.value(), m.d.value()});
  if (g < 0) throw InvalidInput("sl2: matrix has determinant != 1");
  return g;
}

Element Sl2Group::upper_unipotent(FieldValue t) const { return find({1, t, 0, 1}); }
Element Sl2Group::lower_unipotent(FieldValue t) const { return find({1, 0, t, 1}); }

std::vector<Element> Sl2Group::standard_generators() const {
  std::vector<Element> gens;
  FieldValue b = 1;
  for (std::size_t i = 0; i < tower_->degree(level_); ++i) {
    for (Element g : {upper_unipotent(b), lower_unipotent(b)}) {
      gens.push_back(g);
      gens.push_back(inv(g));
    }
    b *= tower_->characteristic();
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

std::string Sl2Group::format(Element g) const {
  const auto m = entries(g);
  return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" +
         std::to_string(m[2]) + "," + std::to_string(m[3]) + "]]";
}

Element Sl2Group::do_mul(Element x, Element y) const {
  const auto m = entries(x);
  const auto n = entries(y);
  const FieldTower& f = *tower_;
  const int l = level_;
  auto dot = [&](FieldValue p, FieldValue q, FieldValue r, FieldValue s) {
    return f.add(l, f.mul(l, p, q), f.mul(l, r, s));
  };
  return find({dot(m[0], n[0], m[1], n[2]), dot(m[0], n[1], m[1], n[3]),
               dot(m[2], n[0], m[3], n[2]), dot(m[2], n[1], m[3], n[3])});
}

Element Sl2Group::do_inv(Element x) const {
  const auto m = entries(x);
  const FieldTower& f = *tower_;
  return find({m[3], f.neg(level_, m[1]), f.neg(level_, m[2]), m[0]});
}

std::vector<Element> embed_subgroup(const Sl2Group& small, const Sl2Group& big) {
  if (small.tower() != big.tower())
    throw InvalidInput("embed_subgroup: groups over different towers");
  if (small.level() > big.level())
    throw InvalidInput("embed_subgroup: source level above target level");
  std::vector<Element> out(small.order());
  for (std::size_t g = 0; g < small.order(); ++g) {
    out[g] = big.find(small.entries(static_cast<Element>(g)));
    if (out[g] < 0) throw InternalError("embed_subgroup: image not found");
  }
  return out;
}

}  // namespace entlab::algebra
