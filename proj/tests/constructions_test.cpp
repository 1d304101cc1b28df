#include <gtest/gtest.h>

#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <set>

#include "entlab/constructions/coloring.hpp"
#include "entlab/constructions/experiments.hpp"
#include "entlab/constructions/invariant.hpp"
#include "entlab/constructions/tower.hpp"
#include "entlab/dynamics/averaging.hpp"
#include "entlab/errors.hpp"

namespace entlab::constructions {
namespace {

using algebra::Element;

std::shared_ptr<const algebra::Sl2Group> sl2(std::uint32_t p, int level = 0) {
  return algebra::Sl2Group::create(algebra::FieldTower::create(p, level), level);
}

TEST(DifferenceGraph, Examples) {
  IntegerLine z;
  const std::vector<long> w{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(difference_graph(z, std::span<const long>(w), std::span<const long>()).max_degree(), 0u);
  const std::vector<long> one{1};
  const auto path = difference_graph(z, std::span<const long>(w), std::span<const long>(one));
  for (std::size_t i = 0; i < 6; ++i) {
    std::set<std::size_t> want;
    if (i > 0) want.insert(i - 1);
    if (i < 5) want.insert(i + 1);
    EXPECT_EQ(std::set<std::size_t>(path.adj[i].begin(), path.adj[i].end()), want);
  }
  const std::vector<long> bad{0, 2};
  EXPECT_THROW(difference_graph(z, std::span<const long>(w), std::span<const long>(bad)),
               InvalidInput);
  const std::vector<long> dup{1, 1};
  EXPECT_THROW(difference_graph(z, std::span<const long>(dup), std::span<const long>(one)),
               InvalidInput);
}

TEST(DifferenceGraph, DegreeBoundOnSl2Windows) {
  const auto g = sl2(3);
  GroupArithmetic arith{g.get()};
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Element> all(24);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Element> window(all.begin(), all.begin() + 6 + trial % 18);
    std::vector<Element> k;
    for (Element x : all)
      if (x != g->identity() && k.size() < static_cast<std::size_t>(1 + trial % 4)) k.push_back(x);
    const auto graph = difference_graph(arith, std::span<const Element>(window),
                                        std::span<const Element>(k));
    EXPECT_LE(graph.max_degree(), 2 * k.size());
    const auto colors = greedy_coloring(graph);
    for (std::size_t v = 0; v < graph.size(); ++v) {
      EXPECT_LE(colors[v], 2 * k.size());
      for (auto u : graph.adj[v]) EXPECT_NE(colors[u], colors[v]);
    }
  }
}

TEST(GreedyColoring, Examples) {
  Graph edgeless;
  edgeless.adj.resize(5);
  for (auto c : greedy_coloring(edgeless)) EXPECT_EQ(c, 0u);
  Graph path;
  path.adj = {{1}, {0, 2}, {1, 3}, {2}};
  EXPECT_EQ(greedy_coloring(path), (std::vector<std::size_t>{0, 1, 0, 1}));
}

TEST(SeparatedFamily, IntegerExamples) {
  IntegerLine z;
  std::vector<long> w(10);
  std::iota(w.begin(), w.end(), 0);
  const auto single = separated_family(z, std::span<const long>(w), std::span<const long>());
  ASSERT_EQ(single.blocks.size(), 1u);
  EXPECT_EQ(single.blocks[0], w);

  const std::vector<long> k{1, -1};
  const auto fam = separated_family(z, std::span<const long>(w), std::span<const long>(k));
  EXPECT_LE(fam.blocks.size(), 3u);
  for (const auto& b : fam.blocks)
    for (long g : b)
      for (long h : b)
        if (g != h) EXPECT_NE(std::abs(g - h), 1);
  EXPECT_EQ(check_separated(z, fam), "");

  auto broken = fam;
  broken.blocks = {w};
  EXPECT_NE(check_separated(z, broken), "");
}

TEST(SeparatedFamily, PlaneAndGroupWindows) {
  IntegerPlane z2;
  std::vector<std::array<long, 2>> w;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) w.push_back({a, b});
  const std::vector<std::array<long, 2>> k{{1, 0}, {0, 1}, {1, 1}};
  const auto fam = separated_family(z2, std::span<const std::array<long, 2>>(w),
                                    std::span<const std::array<long, 2>>(k));
  EXPECT_EQ(check_separated(z2, fam), "");

  const auto g = sl2(3);
  GroupArithmetic arith{g.get()};
  std::vector<Element> all(24);
  std::iota(all.begin(), all.end(), 0);
  const std::vector<Element> gens = g->standard_generators();
  const auto gf = separated_family(arith, std::span<const Element>(all),
                                   std::span<const Element>(gens));
  EXPECT_EQ(check_separated(arith, gf), "");
}

TEST(IndexSequence, SquareRootSelector) {
  const std::size_t horizon = 200;
  std::vector<std::size_t> sizes(horizon), chain(20);
  std::vector<double> phi(horizon, 1.0);
  for (std::size_t n = 0; n < horizon; ++n) sizes[n] = n + 1;
  for (std::size_t i = 0; i < chain.size(); ++i) chain[i] = 2 * (i + 1) + 1;
  const auto idx = choose_index_sequence(sizes, phi, chain);
  for (std::size_t n = 1; n <= horizon; ++n) {
    std::size_t want = 0;
    for (std::size_t i = 1; i <= chain.size(); ++i)
      if (static_cast<double>(2 * i + 1) <= std::sqrt(static_cast<double>(n))) want = i;
    EXPECT_EQ(idx[n - 1], want) << "n = " << n;
    if (n > 1) EXPECT_GE(idx[n - 1], idx[n - 2]);
    if (idx[n - 1] > 0)
      EXPECT_LE(static_cast<double>(chain[idx[n - 1] - 1]) / n, 1.0 / std::sqrt(n) + 1e-12);
  }
  const std::vector<std::size_t> one{50};
  const std::vector<double> phi1{1.0};
  EXPECT_EQ(choose_index_sequence(one, phi1, chain).size(), 1u);
  const std::vector<std::size_t> shrinking{10, 5};
  const std::vector<double> phi2{1.0, 1.0};
  EXPECT_THROW(choose_index_sequence(shrinking, phi2, chain), InvalidInput);
}

TEST(Tower, DepthOne) {
  const auto t = sl2_tower_action(3, 1);
  EXPECT_EQ(t.atoms(), 24u);
  EXPECT_EQ(t.coset_reps[0].size(), 24u);
  std::set<std::int32_t> seen(t.components[0].begin(), t.components[0].end());
  EXPECT_EQ(seen.size(), 24u);
}

TEST(Tower, DepthTwoFactorization) {
  const auto t = sl2_tower_action(3, 2);
  ASSERT_EQ(t.atoms(), 720u);
  EXPECT_EQ(t.coset_reps[0].size(), 24u);
  EXPECT_EQ(t.coset_reps[1].size(), 30u);
  const auto& top = t.top();
  const auto embed = algebra::embed_subgroup(*t.groups[0], top);
  std::set<std::pair<int, int>> pairs;
  for (std::size_t g = 0; g < 720; ++g) {
    const int c1 = t.components[0][g], c2 = t.components[1][g];
    pairs.insert({c1, c2});
    // g = c_1 c_2 with c_1 read in G_2 through the embedding.
    const Element rebuilt = top.mul(embed[t.coset_reps[0][c1]], t.coset_reps[1][c2]);
    EXPECT_EQ(rebuilt, static_cast<Element>(g));
  }
  EXPECT_EQ(pairs.size(), 720u);
  // G_1 acting on the left never moves the second component.
  for (Element h : t.level_elements[0])
    for (Element x = 0; x < 720; ++x)
      EXPECT_EQ(t.components[1][t.action.act(h, x)], t.components[1][x]);
}

TEST(Tower, Budget) {
  EXPECT_THROW(sl2_tower_action(3, 3, 10'000), BudgetExceeded);
  EXPECT_THROW(sl2_tower_action(3, 0), InvalidInput);
}

TEST(ComponentMetric, Examples) {
  const auto t = sl2_tower_action(3, 2);
  const auto r1 = component_metric(t, 1);
  const auto r2 = component_metric(t, 2);
  for (Element x = 0; x < 720; x += 7)
    for (Element y = 0; y < 720; ++y) {
      const bool same1 = t.components[0][x] == t.components[0][y];
      EXPECT_EQ(r1(x, y), same1 ? 0.0 : 0.5);
      EXPECT_LE(r2(x, y), 0.75);
      EXPECT_GE(r2(x, y), r1(x, y));
      if (x == y) EXPECT_EQ(r2(x, y), 0.0);
      else EXPECT_GT(r2(x, y), 0.0);
    }
  EXPECT_NO_THROW(r2.validate());
  EXPECT_THROW(component_metric(t, 3), InvalidInput);
}

TEST(ComponentMetric, AverageIgnoresHigherComponents) {
  const auto t = sl2_tower_action(3, 2);
  const auto avg = dynamics::folner_average(t.action, t.level_elements[0], component_metric(t, 1));
  // Constant on pairs of fibres of the first-component map.
  std::vector<Element> base(24, -1);
  for (Element x = 0; x < 720; ++x)
    if (base[t.components[0][x]] < 0) base[t.components[0][x]] = x;
  for (Element x = 0; x < 720; x += 5)
    for (Element y = 0; y < 720; y += 3)
      EXPECT_DOUBLE_EQ(avg(x, y), avg(base[t.components[0][x]], base[t.components[0][y]]));
  for (Element x = 0; x < 720; ++x) EXPECT_EQ(avg(x, base[t.components[0][x]]), 0.0);
}

TEST(Transversal, CellsAndShift) {
  for (std::uint32_t p : {3u, 5u}) {
    const auto g = sl2(p);
    const auto space = spaces::FiniteProbSpace::uniform(g->order());
    const auto xi = transversal_partition(*g, space, g->g0(), p);
    ASSERT_EQ(xi.cell_count(), p);
    for (const auto& c : xi.cells()) EXPECT_EQ(c.size(), g->order() / p);
    const auto j = transversal_labels(*g, g->g0(), p);
    for (Element x = 0; x < static_cast<Element>(g->order()); ++x) {
      EXPECT_EQ(j[g->mul(g->g0(), x)], (j[x] + 1) % static_cast<int>(p));
      // Same cells as the partition, only named differently.
      for (Element y = 0; y < static_cast<Element>(g->order()); ++y)
        EXPECT_EQ(j[x] == j[y], xi.cell(x) == xi.cell(y));
    }
    // Within one orbit the cut metric is 1 off the diagonal: mean (p-1)/p.
    const auto rho = spaces::cut_semimetric(xi);
    double sum = 0;
    Element y = 0;
    std::vector<Element> orbit;
    for (std::uint32_t j = 0; j < p; ++j, y = g->mul(g->g0(), y)) orbit.push_back(y);
    for (Element a : orbit)
      for (Element b : orbit) sum += rho(a, b);
    EXPECT_GE(sum / (p * p), 0.5);
    EXPECT_THROW(transversal_partition(*g, space, g->identity(), p), InvalidInput);
  }
}

TEST(LeftInvariant, WordMetricMatchesBfs) {
  const auto g = sl2(3);
  const auto space = spaces::FiniteProbSpace::uniform(24);
  const auto gens = g->standard_generators();
  const auto rho = left_invariant_semimetric(*g, space, word_root(*g, gens));
  for (Element src = 0; src < 24; ++src) {
    std::vector<int> dist(24, -1);
    std::deque<Element> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
      const Element u = queue.front();
      queue.pop_front();
      for (Element s : gens) {
        const Element v = g->mul(u, s);
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (Element v = 0; v < 24; ++v) EXPECT_EQ(rho(src, v), dist[v]);
  }
}

TEST(LeftInvariant, InvarianceAndValidation) {
  const auto g = sl2(5);
  const auto n = static_cast<Element>(g->order());
  const auto space = spaces::FiniteProbSpace::uniform(n);
  const auto rho = left_invariant_semimetric(*g, space, random_root(*g, 42));
  EXPECT_NO_THROW(rho.validate());
  for (Element a = 0; a < n; ++a)
    for (Element x = 0; x < n; ++x)
      for (Element y = x + 1; y < n; ++y)
        ASSERT_EQ(rho(g->mul(a, x), g->mul(a, y)), rho(x, y));

  const auto zero = left_invariant_semimetric(*g, space, std::vector<double>(n, 0.0));
  EXPECT_EQ(zero.diameter(), 0.0);
  auto skew = discrete_root(*g);
  skew[g->g0()] = 2.0;
  EXPECT_THROW(left_invariant_semimetric(*g, space, skew), InvalidInput);
  auto gap = word_root(*g, {g->g0()});
  EXPECT_THROW(left_invariant_semimetric(*g, space, gap), InvalidInput);
}

TEST(Experiments, TowerCoordinates) {
  EXPECT_EQ(tower_coordinates(3), (std::pair<std::uint32_t, std::size_t>{3, 1}));
  EXPECT_EQ(tower_coordinates(9), (std::pair<std::uint32_t, std::size_t>{3, 2}));
  EXPECT_EQ(tower_coordinates(81), (std::pair<std::uint32_t, std::size_t>{3, 3}));
  EXPECT_EQ(tower_coordinates(25), (std::pair<std::uint32_t, std::size_t>{5, 2}));
  EXPECT_THROW(tower_coordinates(27), InvalidInput);
  EXPECT_THROW(tower_coordinates(4), InvalidInput);
  EXPECT_EQ(tower_field_order(3, 2), 9u);
}

TEST(Experiments, Claim52Examples) {
  const auto d = claim52_experiment({3}, 0.25, RootRecipe::kDiscrete, 1);
  ASSERT_EQ(d.rows.size(), 1u);
  EXPECT_TRUE(d.rows[0].exact);
  EXPECT_DOUBLE_EQ(d.rows[0].upper_bits, std::log2(19.0));
  EXPECT_TRUE(d.rows[0].hypothesis_ok);
  EXPECT_NEAR(d.c_emp, std::log2(19.0) / std::log2(3.0), 1e-12);

  const auto z = claim52_experiment({3}, 0.25, RootRecipe::kZero, 1);
  EXPECT_FALSE(z.rows[0].hypothesis_ok);
  EXPECT_EQ(z.rows[0].upper_bits, 0.0);
  EXPECT_EQ(z.c_emp, 0.0);

  const auto w = claim52_experiment({3, 5, 7, 9}, 0.25, RootRecipe::kWord, 1, {}, 2);
  for (std::size_t i = 0; i < w.rows.size(); ++i) {
    EXPECT_LE(w.rows[i].lower_bits, w.rows[i].upper_bits);
    if (i > 0) EXPECT_GE(w.rows[i].upper_bits, w.rows[i - 1].lower_bits);
  }
}

TEST(Experiments, GapRowsAndSharpness) {
  const std::vector<double> grid{0.05, 0.1, 0.25};
  const auto r = gap_experiment(3, 2, grid, {}, 2);
  ASSERT_EQ(r.phi.size(), 6u);
  ASSERT_EQ(r.transversal.size(), 6u);
  for (const auto& row : r.phi) {
    EXPECT_LE(row.upper_bits, row.log2_order + 1e-9);
    EXPECT_LE(row.lower_bits, row.upper_bits);
  }
  EXPECT_EQ(r.phi[0].order, 24u);
  EXPECT_TRUE(r.phi[0].exact);
  EXPECT_EQ(r.phi[3].order, 720u);
  EXPECT_DOUBLE_EQ(r.transversal[2].eps, 0.0625);
  EXPECT_DOUBLE_EQ(r.phi[3].log2_qn, std::log2(9.0));
}

TEST(Experiments, AveragedTransversalMean) {
  for (std::uint32_t p : {3u, 5u}) {
    const auto g = sl2(p);
    const auto action = dynamics::ActionTable::left_translation(g);
    const auto xi = transversal_partition(*g, action.space(), g->g0(), p);
    std::vector<Element> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    const auto avg = dynamics::folner_average(action, all, spaces::cut_semimetric(xi));
    EXPECT_GE(l1_norm(avg), 0.5 * (p - 1) / p);
  }
}

}  // namespace
}  // namespace entlab::constructions
