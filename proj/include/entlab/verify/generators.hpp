#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "entlab/spaces/semimetric.hpp"

// Seeded random instances shared by the property suites and the tests.
namespace entlab::verify {

using Rng = std::mt19937_64;

/// Integer weights in [1, max_weight], so mass thresholds compare exactly.
spaces::SpacePtr random_space(Rng& rng, std::size_t atoms, std::uint64_t max_weight = 8);

/// Labels drawn uniformly from [0, max_cells); empty labels collapse.
spaces::Partition random_partition(Rng& rng, const spaces::SpacePtr& space,
                                   std::size_t max_cells);

struct CutCombination {
  std::vector<spaces::Partition> parts;
  std::vector<double> weights;
  spaces::Semimetric metric;
};

/// Convex combination of `count` random cut semimetrics with positive
/// weights summing to 1.
CutCombination random_cut_combination(Rng& rng, const spaces::SpacePtr& space,
                                      std::size_t count, std::size_t max_cells);

template <class Int>
Int uniform_int(Rng& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace entlab::verify
