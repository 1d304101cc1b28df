#include <gtest/gtest.h>

#include <cmath>

#include "entlab/verify/generators.hpp"
#include "entlab/verify/suites.hpp"

namespace entlab::verify {
namespace {

TEST(Generators, DeterministicPerSeed) {
  Rng a(7), b(7);
  const auto sa = random_space(a, 9);
  const auto sb = random_space(b, 9);
  ASSERT_TRUE(sa->exact());
  EXPECT_EQ(*sa->weights(), *sb->weights());
  const auto ca = random_cut_combination(a, sa, 3, 4);
  const auto cb = random_cut_combination(b, sb, 3, 4);
  EXPECT_EQ(ca.weights, cb.weights);
  for (std::size_t i = 0; i < ca.parts.size(); ++i)
    EXPECT_TRUE(std::equal(ca.parts[i].labels().begin(), ca.parts[i].labels().end(),
                           cb.parts[i].labels().begin()));
}

TEST(Generators, CombinationIsConvexAndBounded) {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto space = random_space(rng, 10);
    const auto c = random_cut_combination(rng, space, 4, 3);
    double total = 0.0;
    for (double w : c.weights) {
      EXPECT_GT(w, 0.0);
      total += w;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_LE(c.metric.diameter(), 1.0 + 1e-12);
    EXPECT_NO_THROW(c.metric.validate());
  }
}

// Short runs of each suite; the acceptance binary runs the full counts.
TEST(Suites, SandwichShort) {
  const auto r = sandwich_suite(1, 60);
  EXPECT_EQ(r.trials, 60u);
  EXPECT_TRUE(r.passed()) << r.first_violation;
}

TEST(Suites, LemmasShort) {
  for (const auto& r : {lowerbound_lemma_suite(2, 30), partition_lemma_suite(3, 30),
                        mnorm_lemma_suite(4, 15)}) {
    EXPECT_TRUE(r.passed()) << r.name << ": " << r.first_violation;
  }
  EXPECT_GE(partition_lemma_suite(3, 30).stat("least_margin"), 0.0);
}

TEST(Suites, AveragingAndColoringShort) {
  const auto avg = averaging_suite(5, 15);
  EXPECT_EQ(avg.trials, 15u);
  EXPECT_TRUE(avg.passed()) << avg.first_violation;
  const auto col = coloring_suite(6, 5);
  EXPECT_EQ(col.trials, 15u);
  EXPECT_TRUE(col.passed()) << col.first_violation;
}

TEST(Suites, GrowthRowsAndExponent) {
  const auto g = growth_suite(8, {3, 5}, 4);
  ASSERT_EQ(g.rows.size(), 8u);
  for (const auto& row : g.rows) {
    EXPECT_LE(row.size_a, row.size_a2);
    EXPECT_LE(row.size_a2, row.size_a3);
    EXPECT_EQ(row.whole_group, row.size_a3 == (row.p == 3 ? 24u : 120u));
  }
  EXPECT_TRUE(g.suite.passed()) << g.suite.first_violation;
  EXPECT_EQ(g.exponent, g.suite.stat("exponent"));
  EXPECT_TRUE(std::isnan(g.suite.stat("missing")));
}

}  // namespace
}  // namespace entlab::verify
