#include "entlab/constructions/coloring.hpp"

#include <cmath>

namespace entlab::constructions {

std::vector<std::size_t> greedy_coloring(const Graph& g) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> color(g.size(), kNone);
  std::vector<char> used;
  for (std::size_t v = 0; v < g.size(); ++v) {
    used.assign(g.adj[v].size() + 1, 0);
    for (auto u : g.adj[v])
      if (color[u] != kNone && color[u] < used.size()) used[color[u]] = 1;
    std::size_t c = 0;
    while (used[c]) ++c;
    color[v] = c;
  }
  return color;
}

std::vector<std::size_t> choose_index_sequence(std::span<const std::size_t> set_sizes,
                                               std::span<const double> phi,
                                               std::span<const std::size_t> chain_sizes) {
  if (set_sizes.size() != phi.size())
    throw InvalidInput("choose_index_sequence: need one phi value per level");
  for (std::size_t i = 1; i < chain_sizes.size(); ++i)
    if (chain_sizes[i] < chain_sizes[i - 1])
      throw InvalidInput("choose_index_sequence: chain sizes must be non-decreasing");
  std::vector<std::size_t> out;
  double prev = 0.0;
  for (std::size_t n = 0; n < set_sizes.size(); ++n) {
    if (!(phi[n] > 0.0)) throw InvalidInput("choose_index_sequence: phi must be positive");
    const double ratio = static_cast<double>(set_sizes[n]) / phi[n];
    if (ratio < prev)
      throw InvalidInput("choose_index_sequence: |F_n|/phi(n) decreases at n = " +
                         std::to_string(n + 1));
    prev = ratio;
    const double bound = std::sqrt(ratio);
    std::size_t i = 0;
    while (i < chain_sizes.size() && static_cast<double>(chain_sizes[i]) <= bound) ++i;
    out.push_back(i);
  }
  return out;
}

}  // namespace entlab::constructions
