#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "entlab/entropy/eps_entropy.hpp"

namespace entlab::constructions {

/// (p, n) with q = p^(2^(n-1)), the tower level whose group is SL(2, q).
/// Throws InvalidInput if q is not of that form for an odd prime p.
std::pair<std::uint32_t, std::size_t> tower_coordinates(std::uint64_t q);

enum class RootRecipe { kDiscrete, kWord, kRandom, kZero };

RootRecipe parse_recipe(const std::string& name);
std::string recipe_name(RootRecipe r);

struct Claim52Row {
  std::uint64_t q = 0;
  RootRecipe recipe = RootRecipe::kDiscrete;
  double eps = 0.0;
  /// Diameter of the measured (normalized) semimetric: 1, or 0 for the zero
  /// semimetric.
  double diam = 0.0;
  double lower_bits = 0.0;
  double upper_bits = 0.0;
  bool exact = false;
  double log2_q = 0.0;
  /// diam > 3 eps; rows failing it are reported, not asserted on.
  bool hypothesis_ok = false;
};

struct Claim52Report {
  std::vector<Claim52Row> rows;
  /// min over hypothesis-satisfying rows of lower_bits / log2 q; 0 if none.
  double c_emp = 0.0;
};

/// eps-entropy of a left-invariant semimetric on SL(2, q) under the uniform
/// measure, for each q. `seed` drives the random recipe (offset per q).
Claim52Report claim52_experiment(const std::vector<std::uint64_t>& qs, double eps,
                                 RootRecipe recipe, std::uint64_t seed,
                                 const entropy::ExactOptions& opts = {},
                                 std::size_t workers = 1);

struct GapRow {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::uint64_t order = 0;
  /// The threshold the entropy was evaluated at.
  double eps = 0.0;
  double lower_bits = 0.0;
  double upper_bits = 0.0;
  bool exact = false;
  double log2_order = 0.0;
  double log2_qn = 0.0;
};

struct GapReport {
  /// Phi(n, eps) of the component metric on the truncated tower of depth n,
  /// averaged over F_n = G_n.
  std::vector<GapRow> phi;
  /// H_{eps^2} of the G_n-averaged cut metric of the g0-transversal
  /// partition; the eps column holds eps^2.
  std::vector<GapRow> transversal;
};

GapReport gap_experiment(std::uint32_t p, std::size_t depth, const std::vector<double>& eps_grid,
                         const entropy::ExactOptions& opts = {}, std::size_t workers = 1);

/// The transversal run alone at threshold eps^2 for each q.
std::vector<GapRow> transversal_experiment(const std::vector<std::uint64_t>& qs, double eps,
                                           const entropy::ExactOptions& opts = {},
                                           std::size_t workers = 1);

}  // namespace entlab::constructions
