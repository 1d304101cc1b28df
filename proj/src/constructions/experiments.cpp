#include "entlab/constructions/experiments.hpp"

#include <cmath>
#include <limits>

#include "entlab/algebra/sl2.hpp"
#include "entlab/constructions/invariant.hpp"
#include "entlab/constructions/tower.hpp"
#include "entlab/dynamics/averaging.hpp"
#include "entlab/errors.hpp"
#include "entlab/parallel.hpp"

namespace entlab::constructions {

namespace {

struct InvariantSetup {
  std::shared_ptr<const algebra::Sl2Group> group;
  dynamics::ActionTable action;
};

InvariantSetup sl2_on_itself(std::uint64_t q) {
  const auto [p, n] = tower_coordinates(q);
  auto field = algebra::FieldTower::create(p, static_cast<int>(n) - 1);
  auto group = algebra::Sl2Group::create(field, static_cast<int>(n) - 1, kTowerMetricBudget);
  auto action = dynamics::ActionTable::left_translation(group);
  return {std::move(group), std::move(action)};
}

spaces::Semimetric averaged_transversal_metric(const algebra::Sl2Group& group,
                                               const dynamics::ActionTable& action) {
  const auto xi =
      transversal_partition(group, action.space(), group.g0(), group.characteristic());
  std::vector<Element> all(group.order());
  for (std::size_t g = 0; g < all.size(); ++g) all[g] = static_cast<Element>(g);
  return dynamics::folner_average(action, all, spaces::cut_semimetric(xi));
}

}  // namespace

std::pair<std::uint32_t, std::size_t> tower_coordinates(std::uint64_t q) {
  std::uint64_t base = q;
  std::size_t n = 1;
  // Undo repeated squaring while the value stays a perfect square.
  while (true) {
    const auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(base))));
    if (r > 1 && r * r == base && !algebra::is_prime(base)) {
      base = r;
      ++n;
    } else {
      break;
    }
  }
  if (base == 2 || base > std::numeric_limits<std::uint32_t>::max() || !algebra::is_prime(base))
    throw InvalidInput("q = " + std::to_string(q) + " is not p^(2^k) for an odd prime p");
  return {static_cast<std::uint32_t>(base), n};
}

RootRecipe parse_recipe(const std::string& name) {
  if (name == "discrete") return RootRecipe::kDiscrete;
  if (name == "word") return RootRecipe::kWord;
  if (name == "random") return RootRecipe::kRandom;
  if (name == "zero") return RootRecipe::kZero;
  throw InvalidInput("unknown semimetric recipe '" + name + "'");
}

std::string recipe_name(RootRecipe r) {
  switch (r) {
    case RootRecipe::kDiscrete: return "discrete";
    case RootRecipe::kWord: return "word";
    case RootRecipe::kRandom: return "random";
    case RootRecipe::kZero: return "zero";
  }
  return "?";
}

Claim52Report claim52_experiment(const std::vector<std::uint64_t>& qs, double eps,
                                 RootRecipe recipe, std::uint64_t seed,
                                 const entropy::ExactOptions& opts, std::size_t workers) {
  Claim52Report report;
  report.rows.resize(qs.size());
  parallel_for(qs.size(), workers, [&](std::size_t i) {
    const auto setup = sl2_on_itself(qs[i]);
    const auto& g = *setup.group;
    std::vector<double> root;
    switch (recipe) {
      case RootRecipe::kDiscrete: root = discrete_root(g); break;
      case RootRecipe::kWord: root = word_root(g, g.standard_generators()); break;
      case RootRecipe::kRandom: root = random_root(g, seed + i); break;
      case RootRecipe::kZero: root.assign(g.order(), 0.0); break;
    }
    auto rho = left_invariant_semimetric(g, setup.action.space(), root);
    const double raw = rho.diameter();
    if (raw > 0.0) rho = rho.scaled(1.0 / raw);
    auto& row = report.rows[i];
    row.q = qs[i];
    row.recipe = recipe;
    row.eps = eps;
    row.diam = rho.diameter();
    row.hypothesis_ok = row.diam > 3 * eps;
    row.log2_q = std::log2(static_cast<double>(qs[i]));
    const auto h = entropy::eps_entropy(rho, eps, opts);
    row.lower_bits = h.lower_bits;
    row.upper_bits = h.upper_bits;
    row.exact = h.exact;
  });
  bool any = false;
  for (const auto& r : report.rows) {
    if (!r.hypothesis_ok) continue;
    const double c = r.lower_bits / r.log2_q;
    report.c_emp = any ? std::min(report.c_emp, c) : c;
    any = true;
  }
  return report;
}

GapReport gap_experiment(std::uint32_t p, std::size_t depth, const std::vector<double>& eps_grid,
                         const entropy::ExactOptions& opts, std::size_t workers) {
  struct Level {
    std::uint64_t order;
    double log2_qn;
    spaces::Semimetric phi_metric;
    spaces::Semimetric transversal_metric;
  };
  std::vector<Level> levels;
  for (std::size_t n = 1; n <= depth; ++n) {
    const auto t = sl2_tower_action(p, n, kTowerMetricBudget);
    const auto rho = component_metric(t, n);
    auto avg = dynamics::folner_average(t.action, t.level_elements[n - 1], rho);
    auto trans = averaged_transversal_metric(t.top(), t.action);
    levels.push_back({t.top().order(), std::log2(static_cast<double>(t.top().field_order())),
                      std::move(avg), std::move(trans)});
  }
  const std::size_t m = eps_grid.size();
  GapReport out;
  out.phi.resize(depth * m);
  out.transversal.resize(depth * m);
  parallel_for(2 * depth * m, workers, [&](std::size_t job) {
    const bool transversal = job >= depth * m;
    const std::size_t i = job % (depth * m);
    const auto& lv = levels[i / m];
    const double eps = transversal ? eps_grid[i % m] * eps_grid[i % m] : eps_grid[i % m];
    const auto h =
        entropy::eps_entropy(transversal ? lv.transversal_metric : lv.phi_metric, eps, opts);
    GapRow& row = transversal ? out.transversal[i] : out.phi[i];
    row = {p,           i / m + 1,    lv.order, eps, h.lower_bits, h.upper_bits,
           h.exact,     std::log2(static_cast<double>(lv.order)), lv.log2_qn};
  });
  return out;
}

std::vector<GapRow> transversal_experiment(const std::vector<std::uint64_t>& qs, double eps,
                                           const entropy::ExactOptions& opts,
                                           std::size_t workers) {
  std::vector<GapRow> rows(qs.size());
  parallel_for(qs.size(), workers, [&](std::size_t i) {
    const auto [p, n] = tower_coordinates(qs[i]);
    const auto setup = sl2_on_itself(qs[i]);
    const auto rho = averaged_transversal_metric(*setup.group, setup.action);
    const auto h = entropy::eps_entropy(rho, eps * eps, opts);
    const auto order = setup.group->order();
    rows[i] = {p,       n,       order, eps * eps, h.lower_bits, h.upper_bits,
               h.exact, std::log2(static_cast<double>(order)),
               std::log2(static_cast<double>(qs[i]))};
  });
  return rows;
}

}  // namespace entlab::constructions
