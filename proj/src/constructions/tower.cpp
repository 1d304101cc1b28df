#include "entlab/constructions/tower.hpp"

#include <algorithm>
#include <string>

#include "entlab/errors.hpp"

namespace entlab::constructions {

std::uint64_t tower_field_order(std::uint32_t p, std::size_t n) {
  if (n < 1) throw InvalidInput("tower level must be at least 1");
  std::uint64_t q = p;
  for (std::size_t i = 1; i < n; ++i) {
    if (q > (std::uint64_t{1} << 32)) throw BudgetExceeded("tower field order overflows");
    q *= q;
  }
  return q;
}

TowerAction sl2_tower_action(std::uint32_t p, std::size_t depth, std::size_t budget) {
  if (depth < 1) throw InvalidInput("tower depth must be at least 1");
  const std::uint64_t q = tower_field_order(p, depth);
  if (q > (std::uint64_t{1} << 16) || algebra::sl2_order(q) > budget)
    throw BudgetExceeded("tower: |SL(2, " + std::to_string(q) + ")| exceeds the atom budget " +
                         std::to_string(budget));
  auto field = algebra::FieldTower::create(p, static_cast<int>(depth) - 1);
  std::vector<std::shared_ptr<const algebra::Sl2Group>> groups;
  for (std::size_t n = 1; n <= depth; ++n)
    groups.push_back(algebra::Sl2Group::create(field, static_cast<int>(n) - 1, budget));
  const auto& top = *groups.back();
  const std::size_t atoms = top.order();

  // to_top[i][g]: index in G_depth of element g of G_{i+1}.
  std::vector<std::vector<Element>> to_top(depth);
  to_top[depth - 1].resize(atoms);
  for (std::size_t g = 0; g < atoms; ++g) to_top[depth - 1][g] = static_cast<Element>(g);
  for (std::size_t i = 0; i + 1 < depth; ++i) to_top[i] = algebra::embed_subgroup(*groups[i], top);

  std::vector<std::vector<Element>> level_elements(depth), coset_reps(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    level_elements[i] = to_top[i];
    std::sort(level_elements[i].begin(), level_elements[i].end());
  }

  // Peel g = h c_n with c_n in C_n, then recurse on h inside G_{n-1}.
  std::vector<std::vector<std::int32_t>> components(depth, std::vector<std::int32_t>(atoms));
  std::vector<Element> current(atoms);
  for (std::size_t g = 0; g < atoms; ++g) current[g] = static_cast<Element>(g);
  for (std::size_t level = depth; level >= 1; --level) {
    const auto& big = *groups[level - 1];
    std::vector<Element> sub;
    std::vector<Element> down;  // index in G_level -> index in G_{level-1}
    if (level == 1) {
      sub = {big.identity()};
    } else {
      sub = algebra::embed_subgroup(*groups[level - 2], big);
      down.assign(big.order(), -1);
      for (std::size_t s = 0; s < sub.size(); ++s) down[sub[s]] = static_cast<Element>(s);
    }
    const auto cosets = algebra::coset_representatives(big, sub);
    coset_reps[level - 1] = cosets.representatives;
    for (std::size_t a = 0; a < atoms; ++a) {
      const Element g = current[a];
      const auto c = cosets.coset_of[g];
      components[level - 1][a] = c;
      if (level > 1) {
        const Element h = big.quotient(g, cosets.representatives[c]);
        current[a] = down[h];
        if (current[a] < 0) throw InternalError("tower: coset peel left the subgroup");
      }
    }
  }

  algebra::GroupPtr top_group = groups.back();
  auto action = dynamics::ActionTable::left_translation(top_group);
  return TowerAction{p,
                     depth,
                     std::move(groups),
                     std::move(level_elements),
                     std::move(coset_reps),
                     std::move(components),
                     std::move(action)};
}

spaces::Semimetric component_metric(const TowerAction& t, std::size_t r) {
  if (r < 1 || r > t.depth)
    throw InvalidInput("component_metric: prefix length must lie in 1.." + std::to_string(t.depth));
  const std::size_t n = t.atoms();
  if (n > kTowerMetricBudget)
    throw BudgetExceeded("component_metric: " + std::to_string(n) +
                         " atoms exceed the metric budget " + std::to_string(kTowerMetricBudget));
  spaces::SymmetricKernel k(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      // rho_i separates x, y iff their first i components differ, i.e. for
      // every i at or beyond the first differing component.
      std::size_t first = r;
      for (std::size_t i = 0; i < r; ++i)
        if (t.components[i][x] != t.components[i][y]) {
          first = i;
          break;
        }
      double d = 0.0, w = 1.0;
      for (std::size_t i = 0; i < r; ++i) {
        w *= 0.5;
        if (i >= first) d += w;
      }
      k.set(static_cast<spaces::Atom>(x), static_cast<spaces::Atom>(y), d);
    }
  return spaces::Semimetric::trusted(t.action.space(), std::move(k));
}

}  // namespace entlab::constructions
