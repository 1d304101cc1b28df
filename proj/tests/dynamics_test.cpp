#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "entlab/dynamics/averaging.hpp"
#include "entlab/dynamics/growth_compare.hpp"
#include "entlab/dynamics/sequential.hpp"
#include "entlab/errors.hpp"

namespace entlab::dynamics {
namespace {

using algebra::CyclicGroup;
using algebra::ProductGroup;
using spaces::FiniteProbSpace;
using spaces::SymmetricKernel;

ActionTable rotation(std::size_t n) {
  auto g = CyclicGroup::create(n);
  std::vector<std::vector<Atom>> perms(n, std::vector<Atom>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x) perms[k][x] = static_cast<Atom>((x + k) % n);
  return ActionTable(g, FiniteProbSpace::uniform(n), perms);
}

// G acting on `copies` scrambled copies of itself; copy i carries weight w_i
// on each of its atoms.
ActionTable random_action(std::mt19937_64& rng, GroupPtr g, std::size_t copies) {
  const std::size_t order = g->order(), n = order * copies;
  std::vector<Atom> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::uniform_int_distribution<std::uint64_t> wd(1, 4);
  std::vector<std::uint64_t> copy_weight(copies);
  for (auto& w : copy_weight) w = wd(rng);
  std::vector<std::uint64_t> weights(n);
  for (std::size_t i = 0; i < copies; ++i)
    for (std::size_t h = 0; h < order; ++h) weights[relabel[i * order + h]] = copy_weight[i];
  std::vector<std::vector<Atom>> perms(order, std::vector<Atom>(n));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t i = 0; i < copies; ++i)
      for (std::size_t h = 0; h < order; ++h) {
        const auto gh = static_cast<std::size_t>(
            g->mul(static_cast<Element>(a), static_cast<Element>(h)));
        perms[a][relabel[i * order + h]] = relabel[i * order + gh];
      }
  return ActionTable(g, FiniteProbSpace::from_weights(weights), perms);
}

Semimetric random_metric(std::mt19937_64& rng, const SpacePtr& s) {
  std::vector<Semimetric> ms;
  std::vector<double> ws;
  std::uniform_int_distribution<int> c(0, 2);
  for (int i = 0; i < 3; ++i) {
    std::vector<std::int32_t> l(s->size());
    for (auto& x : l) x = c(rng);
    ms.push_back(cut_semimetric(Partition(s, l)));
  }
  return combine(std::vector<double>{0.5, 0.25, 0.25}, ms);
}

double max_diff(const Semimetric& a, const Semimetric& b) {
  double d = 0;
  for (Atom x = 0; x < static_cast<Atom>(a.size()); ++x)
    for (Atom y = 0; y < static_cast<Atom>(a.size()); ++y)
      d = std::max(d, std::abs(a(x, y) - b(x, y)));
  return d;
}

TEST(ActionTable, RejectsBrokenTables) {
  auto g = CyclicGroup::create(2);
  auto s = FiniteProbSpace::uniform(2);
  EXPECT_THROW(ActionTable(g, s, {{0, 1}, {0, 0}}), InvalidInput);
  EXPECT_THROW(ActionTable(g, s, {{1, 0}, {1, 0}}), InvalidInput);
  auto z3 = CyclicGroup::create(3);
  auto s3 = FiniteProbSpace::uniform(3);
  // Each row is a permutation but 1 + 1 = 2 is not respected.
  EXPECT_THROW(ActionTable(z3, s3, {{0, 1, 2}, {1, 2, 0}, {1, 2, 0}}), InvalidInput);
  auto skew = FiniteProbSpace::from_weights({1, 2});
  EXPECT_THROW(ActionTable(g, skew, {{0, 1}, {1, 0}}), InvalidInput);
}

TEST(FolnerFamily, Validates) {
  auto g = CyclicGroup::create(6);
  EXPECT_NO_THROW(FolnerFamily(g, {{0}, {0, 1}, {0, 1, 2}}));
  EXPECT_THROW(FolnerFamily(g, {{0, 1}, {2}}), InvalidInput);
  EXPECT_THROW(FolnerFamily(g, {{}}), InvalidInput);
  EXPECT_THROW(FolnerFamily(g, {{0, 1}}, {{{0}}}), InvalidInput);
  EXPECT_THROW(FolnerFamily(g, {{0, 1}}, {{{0, 1}, {1}}}), InvalidInput);
  FolnerFamily f(g, {{0, 1}}, {{{0}, {1}}});
  EXPECT_EQ(f.blocks(1).size(), 2u);
  EXPECT_THROW(f.set(2), InvalidInput);
}

TEST(Translate, IdentityAndComposition) {
  std::mt19937_64 rng(3);
  auto g = ProductGroup::create(CyclicGroup::create(2), CyclicGroup::create(3));
  const auto action = random_action(rng, g, 2);
  const auto rho = random_metric(rng, action.space());
  EXPECT_EQ(max_diff(translate_semimetric(action, g->identity(), rho), rho), 0.0);
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) {
      const auto step = translate_semimetric(action, b, translate_semimetric(action, a, rho));
      const auto once = translate_semimetric(action, g->mul(a, b), rho);
      EXPECT_EQ(max_diff(step, once), 0.0);
    }
}

TEST(Average, RotationExample) {
  const auto action = rotation(4);
  const auto rho = cut_semimetric(Partition(action.space(), {0, 0, 1, 1}));
  const std::vector<Element> all{0, 1, 2, 3};
  const auto avg = folner_average(action, all, rho);
  for (Atom x = 0; x < 4; ++x)
    for (Atom y = 0; y < 4; ++y) {
      double direct = 0;
      for (int k = 0; k < 4; ++k) direct += rho((x + k) % 4, (y + k) % 4);
      EXPECT_DOUBLE_EQ(avg(x, y), direct / 4);
    }
  EXPECT_DOUBLE_EQ(avg(0, 1), 0.5);
  EXPECT_DOUBLE_EQ(avg(0, 2), 1.0);
  // The average is itself invariant, so averaging again changes nothing.
  EXPECT_LE(max_diff(folner_average(action, all, avg), avg), 1e-15);
  const std::vector<Element> e{0};
  EXPECT_EQ(max_diff(folner_average(action, e, rho), rho), 0.0);
  EXPECT_THROW(folner_average(action, std::vector<Element>{}, rho), InvalidInput);
}

TEST(Average, IdentitiesOnRandomActions) {
  std::mt19937_64 rng(11);
  auto g = ProductGroup::create(CyclicGroup::create(2), CyclicGroup::create(4));
  for (int trial = 0; trial < 30; ++trial) {
    const auto action = random_action(rng, g, 1 + trial % 3);
    const auto rho = random_metric(rng, action.space());
    std::vector<Element> f(8);
    std::iota(f.begin(), f.end(), 0);
    std::shuffle(f.begin(), f.end(), rng);
    f.resize(2 + trial % 6);
    const auto avg = folner_average(action, f, rho);
    EXPECT_NO_THROW(avg.validate());
    EXPECT_NEAR(l1_norm(avg), l1_norm(rho), 1e-9);

    // Blocks of f: average over the union = block-size-weighted block averages.
    const std::size_t cut = f.size() / 2;
    const std::vector<Element> p1(f.begin(), f.begin() + cut), p2(f.begin() + cut, f.end());
    const double w1 = static_cast<double>(p1.size()) / f.size();
    const auto mix = combine(std::vector<double>{w1, 1.0 - w1},
                             std::vector<Semimetric>{folner_average(action, p1, rho),
                                                     folner_average(action, p2, rho)});
    EXPECT_LE(max_diff(avg, mix), 1e-12);

    // Any subset with at least half the elements is dominated by twice the
    // full average.
    const std::vector<Element> half(f.begin(), f.begin() + (f.size() + 1) / 2);
    const auto sub = folner_average(action, half, rho);
    for (Atom x = 0; x < static_cast<Atom>(rho.size()); ++x)
      for (Atom y = 0; y < static_cast<Atom>(rho.size()); ++y)
        EXPECT_LE(sub(x, y), 2 * avg(x, y) + 1e-12);
  }
}

TEST(Phi, ReducesToEntropyAtIdentity) {
  const auto action = rotation(10);
  FolnerFamily fam(action.group(), {{0}, {0, 1}, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}});
  const auto rho = cut_semimetric(Partition::singletons(action.space()));
  EXPECT_DOUBLE_EQ(phi(action, fam, rho, 1, 0.25).upper_bits, 3.0);
  // Discrete metric is invariant: phi does not depend on n.
  for (std::size_t n = 1; n <= 3; ++n)
    EXPECT_DOUBLE_EQ(phi(action, fam, rho, n, 0.25).upper_bits, 3.0);
  const std::vector<double> grid{0.05, 0.25, 0.5};
  const auto rows = phi_profile(action, fam, rho, 3, grid, {}, 2);
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows[4].n, 2u);
  EXPECT_EQ(rows[4].set_size, 2u);
  EXPECT_EQ(rows[4].result.eps, 0.25);
  for (std::size_t i = 0; i < rows.size(); i += 3) {
    EXPECT_GE(rows[i].result.upper_bits, rows[i + 1].result.upper_bits);
    EXPECT_GE(rows[i + 1].result.upper_bits, rows[i + 2].result.upper_bits);
  }
}

TEST(Phi, MonotoneInEps) {
  std::mt19937_64 rng(8);
  auto g = CyclicGroup::create(4);
  const auto action = random_action(rng, g, 3);
  const auto rho = random_metric(rng, action.space());
  FolnerFamily fam(g, {{0}, {0, 1}, {0, 1, 2, 3}});
  for (std::size_t n = 1; n <= 3; ++n) {
    double prev = INFINITY;
    for (double eps : {0.05, 0.1, 0.2, 0.4, 0.8}) {
      const double h = phi(action, fam, rho, n, eps).upper_bits;
      EXPECT_LE(h, prev);
      prev = h;
    }
  }
}

TEST(Sequential, TrivialCases) {
  const auto action = rotation(4);
  const Partition xi(action.space(), {0, 1, 0, 1});
  const std::vector<Element> e{0};
  EXPECT_EQ(refined_orbit_partition(action, e, xi), xi);
  const auto triv = Partition::trivial(action.space());
  const std::vector<Element> all{0, 1, 2, 3};
  EXPECT_EQ(refined_orbit_partition(action, all, triv), triv);
  EXPECT_DOUBLE_EQ(seq_entropy_functional(action, xi, {{0}}), 1.0);
  EXPECT_EQ(seq_entropy_functional(action, triv, {{0, 1}, {2}}), 0.0);
  // Pullback by 1 reads xi at x + 1.
  const auto pulled = pullback_partition(action, 1, Partition(action.space(), {0, 0, 1, 1}));
  EXPECT_EQ(pulled, Partition(action.space(), {0, 1, 1, 0}));
}

TEST(Sequential, IdentityActionProfileDecays) {
  auto g = CyclicGroup::create(8);
  auto s = FiniteProbSpace::uniform(4);
  std::vector<std::vector<Atom>> perms(8, std::vector<Atom>{0, 1, 2, 3});
  const ActionTable trivial_action(g, s, perms);
  const Partition xi(s, {0, 1, 2, 3});
  FolnerFamily fam(g, {{0, 1}, {0, 1, 2, 3}, {0, 1, 2, 3, 4, 5, 6, 7}},
                   {{{0}, {1}}, {{0, 1}, {2, 3}}, {{0, 1, 2, 3}, {4, 5, 6, 7}}});
  const auto rows = sequential_entropy_profile(trivial_action, xi, fam, 3);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_DOUBLE_EQ(rows[0].functional, 2.0);
  EXPECT_DOUBLE_EQ(rows[1].functional, 1.0);
  EXPECT_DOUBLE_EQ(rows[2].functional, 0.5);
  EXPECT_TRUE(sequential_entropy_profile(trivial_action, xi, fam, 0).empty());
  EXPECT_THROW(sequential_entropy_profile(trivial_action, xi, fam, 4), InvalidInput);
}

TEST(Bernoulli, SmallExamples) {
  const auto one = bernoulli_shift(CyclicGroup::create(1), 3);
  EXPECT_EQ(one.action.atoms(), 3u);
  EXPECT_EQ(one.coordinate.cell_count(), 3u);

  const auto z2 = bernoulli_shift(CyclicGroup::create(2), 2);
  ASSERT_EQ(z2.action.atoms(), 4u);
  // Atom x = x(0) + 2 x(1); the flip swaps the two coordinates.
  const std::vector<Atom> expected{0, 2, 1, 3};
  for (Atom x = 0; x < 4; ++x) {
    EXPECT_EQ(z2.action.act(0, x), x);
    EXPECT_EQ(z2.action.act(1, x), expected[x]);
  }
  EXPECT_THROW(bernoulli_shift(CyclicGroup::create(21), 2), BudgetExceeded);
}

TEST(Bernoulli, RefinedEntropyIsAdditive) {
  auto g = ProductGroup::create(CyclicGroup::create(2), CyclicGroup::create(3));
  const auto shift = bernoulli_shift(g, 2);
  for (std::uint32_t mask = 1; mask < 64; ++mask) {
    std::vector<Element> p;
    for (Element h = 0; h < 6; ++h)
      if (mask >> h & 1) p.push_back(h);
    const auto refined = refined_orbit_partition(shift.action, p, shift.coordinate);
    EXPECT_EQ(spaces::shannon_entropy(refined), static_cast<double>(p.size()));
  }
  EXPECT_EQ(seq_entropy_functional(shift.action, shift.coordinate, {{0, 1, 2}, {3}, {4, 5}}),
            1.0);
  const auto tri = bernoulli_shift(CyclicGroup::create(3), 3);
  const std::vector<Element> all{0, 1, 2};
  EXPECT_NEAR(spaces::shannon_entropy(refined_orbit_partition(tri.action, all, tri.coordinate)),
              3 * std::log2(3.0), 1e-12);
}

TEST(GrowthCompare, Examples) {
  std::vector<ProfilePoint> a, b, c, d;
  for (std::size_t n = 1; n <= 8; ++n)
    for (double eps : {0.1, 0.2}) {
      const double v = static_cast<double>(n) / eps;
      a.push_back({n, eps, v});
      b.push_back({n, eps, 2 * v});
      c.push_back({n, eps, 1.0});
      d.push_back({n, eps, std::log2(static_cast<double>(n) + 1)});
    }
  const auto same = growth_compare(a, a);
  for (const auto& r : same.ratios)
    if (r.eps_a == r.eps_b) EXPECT_DOUBLE_EQ(r.ratio, 1.0);
  const auto half = growth_compare(a, b);
  for (const auto& r : half.ratios)
    if (r.eps_a == r.eps_b) EXPECT_DOUBLE_EQ(r.ratio, 0.5);
  EXPECT_EQ(half.best_per_eps.size(), 2u);
  const auto decay = growth_compare(c, d);
  double prev = INFINITY;
  for (const auto& r : decay.ratios)
    if (r.eps_a == 0.1 && r.eps_b == 0.1) {
      EXPECT_LT(r.ratio, prev);
      prev = r.ratio;
    }
  EXPECT_STREQ(GrowthReport::kLabel, "HEURISTIC");
  const std::vector<ProfilePoint> zero{{1, 0.1, 0.0}}, pos{{1, 0.1, 1.0}};
  EXPECT_EQ(growth_compare(zero, zero).ratios[0].ratio, 1.0);
  EXPECT_TRUE(std::isinf(growth_compare(pos, zero).ratios[0].ratio));
  const std::vector<ProfilePoint> other{{2, 0.1, 1.0}};
  EXPECT_THROW(growth_compare(pos, other), InvalidInput);
}

}  // namespace
}  // namespace entlab::dynamics
