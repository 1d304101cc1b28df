#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace entlab::verify {

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t violations = 0;
  /// Description of the first violation, empty when there is none.
  std::string first_violation;
  double seconds = 0.0;
  /// Named summary numbers (fitted exponents, rejection counts, ...).
  std::vector<std::pair<std::string, double>> stats;

  bool passed() const { return trials > 0 && violations == 0; }
  double stat(const std::string& key) const;
};

inline constexpr double kSandwichEps[] = {0.05, 0.1, 0.2, 0.3, 0.5};

/// packing_lower <= exact <= greedy_upper on random cut-metric combinations
/// with at most 12 atoms.
SuiteResult sandwich_suite(std::uint64_t seed, std::size_t trials = 500);

/// Some component m of a convex combination of at most 4 semimetrics bounded
/// by 1 satisfies H_{2 sqrt(eps)}(rho_m) <= H_eps(combination).
SuiteResult lowerbound_lemma_suite(std::uint64_t seed, std::size_t trials = 200);

/// H(xi)/k <= H_eps(rho)/k + 2 eps log m + h(eps) + 1/k for the average rho
/// of k <= 4 cut semimetrics, m the largest cell count, h the binary entropy.
SuiteResult partition_lemma_suite(std::uint64_t seed, std::size_t trials = 200);

/// Pairs on at most 8 atoms with m-norm distance below eps^2/32 (LP value
/// plus 1e-8 slack) have cell counts k(rho1, eps) <= k(rho2, eps/4). Pairs
/// failing the hypothesis are redrawn and counted in the "rejected" stat.
SuiteResult mnorm_lemma_suite(std::uint64_t seed, std::size_t trials = 100);

/// Block decomposition of Folner averages, L1 preservation, the half-mass
/// comparison and the action law for translated semimetrics, to 1e-9.
SuiteResult averaging_suite(std::uint64_t seed, std::size_t trials = 100);

/// Proper coloring, at most 2|K|+1 colors and separated blocks for random
/// windows in Z, Z^2 and SL(2, 3); `per_group` windows each.
SuiteResult coloring_suite(std::uint64_t seed, std::size_t per_group = 50);

/// H(join of g^{-1} xi over P) = |P| bits for every P of every group of
/// order at most 10 in the catalogue, alphabet 2.
SuiteResult bernoulli_suite();

struct TripleGrowthRow {
  std::uint32_t p = 0;
  std::size_t trial = 0;
  std::size_t size_a = 0;
  std::size_t size_a2 = 0;
  std::size_t size_a3 = 0;
  bool whole_group = false;
};

struct TripleGrowthReport {
  SuiteResult suite;
  std::vector<TripleGrowthRow> rows;
  /// Least-squares slope through the origin of ln(|A^3|/|A|) on ln|A| over
  /// the rows with A^3 != G.
  double exponent = 0.0;
};

/// Random generating sets of SL(2, p): |A^3| > |A| whenever A^3 != G, and a
/// strictly positive fitted exponent.
TripleGrowthReport growth_suite(std::uint64_t seed, const std::vector<std::uint32_t>& primes,
                                std::size_t sets_per_prime = 20);

/// The three lemma suites with their default trial counts.
std::vector<SuiteResult> lemma_suites(std::uint64_t seed);

}  // namespace entlab::verify
