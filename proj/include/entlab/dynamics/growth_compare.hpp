#pragma once

#include <string>
#include <vector>

namespace entlab::dynamics {

struct ProfilePoint {
  std::size_t n = 0;
  double eps = 0.0;
  double value = 0.0;
};

struct RatioRow {
  double eps_a = 0.0;
  double eps_b = 0.0;
  std::size_t n = 0;
  double ratio = 0.0;
};

struct PairSummary {
  double eps_a = 0.0;
  double eps_b = 0.0;
  double max_ratio = 0.0;
};

/// Finite-horizon comparison of two (n, eps) profiles: value_a(n, eps_a) /
/// value_b(n, eps_b) on every shared n. This is a HEURISTIC report; growth
/// order is an asymptotic notion and is not decided by finite data.
struct GrowthReport {
  static constexpr const char* kLabel = "HEURISTIC";
  std::vector<RatioRow> ratios;
  /// Largest ratio per (eps_a, eps_b).
  std::vector<PairSummary> summary;
  /// For each eps_a, the smallest max ratio over eps_b.
  std::vector<PairSummary> best_per_eps;
};

/// 0/0 counts as 1 and a/0 for a > 0 as infinity. Throws InvalidInput when
/// the two profiles share no n.
GrowthReport growth_compare(const std::vector<ProfilePoint>& a,
                            const std::vector<ProfilePoint>& b);

}  // namespace entlab::dynamics
