#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "entlab/algebra/finite_group.hpp"
#include "entlab/errors.hpp"

namespace entlab::constructions {

/// Simple undirected graph on vertices 0..n-1.
struct Graph {
  std::vector<std::vector<std::size_t>> adj;

  std::size_t size() const { return adj.size(); }
  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& a : adj) d = std::max(d, a.size());
    return d;
  }
};

/// Group arithmetic used by the difference-graph code: quotient(a, b) = a b^{-1}.
struct IntegerLine {
  using value_type = long;
  long identity() const { return 0; }
  long quotient(long a, long b) const { return a - b; }
};

struct IntegerPlane {
  using value_type = std::array<long, 2>;
  value_type identity() const { return {0, 0}; }
  value_type quotient(const value_type& a, const value_type& b) const {
    return {a[0] - b[0], a[1] - b[1]};
  }
};

struct GroupArithmetic {
  using value_type = algebra::Element;
  const algebra::FiniteGroup* group;
  algebra::Element identity() const { return group->identity(); }
  algebra::Element quotient(algebra::Element a, algebra::Element b) const {
    return group->quotient(a, b);
  }
};

/// Vertices are the window elements (in the given order); g ~ h iff
/// g h^{-1} or h g^{-1} lies in `forbidden`. Throws InvalidInput if the
/// identity is forbidden or the window repeats an element.
template <class Arith>
Graph difference_graph(const Arith& arith,
                       std::span<const typename Arith::value_type> window,
                       std::span<const typename Arith::value_type> forbidden) {
  using T = typename Arith::value_type;
  std::vector<T> k(forbidden.begin(), forbidden.end());
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  if (std::binary_search(k.begin(), k.end(), arith.identity()))
    throw InvalidInput("difference_graph: the forbidden set contains the identity");
  std::vector<T> sorted(window.begin(), window.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("difference_graph: window repeats an element");

  Graph g;
  g.adj.resize(window.size());
  for (std::size_t i = 0; i < window.size(); ++i)
    for (std::size_t j = i + 1; j < window.size(); ++j)
      if (std::binary_search(k.begin(), k.end(), arith.quotient(window[i], window[j])) ||
          std::binary_search(k.begin(), k.end(), arith.quotient(window[j], window[i]))) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
      }
  return g;
}

/// Vertices in index order, each taking the least colour unused by its
/// already coloured neighbours. At most max_degree + 1 colours.
std::vector<std::size_t> greedy_coloring(const Graph& g);

template <class T>
struct SeparatedFamily {
  std::vector<T> window;
  std::vector<T> forbidden;
  std::vector<std::vector<T>> blocks;
};

/// Window sorted canonically, blocks = colour classes of the greedy colouring
/// of the difference graph, in colour order.
template <class Arith>
SeparatedFamily<typename Arith::value_type> separated_family(
    const Arith& arith, std::span<const typename Arith::value_type> window,
    std::span<const typename Arith::value_type> forbidden) {
  using T = typename Arith::value_type;
  SeparatedFamily<T> out;
  out.window.assign(window.begin(), window.end());
  std::sort(out.window.begin(), out.window.end());
  out.forbidden.assign(forbidden.begin(), forbidden.end());
  std::sort(out.forbidden.begin(), out.forbidden.end());
  out.forbidden.erase(std::unique(out.forbidden.begin(), out.forbidden.end()),
                      out.forbidden.end());
  const auto graph =
      difference_graph(arith, std::span<const T>(out.window), std::span<const T>(out.forbidden));
  const auto colors = greedy_coloring(graph);
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] >= out.blocks.size()) out.blocks.resize(colors[i] + 1);
    out.blocks[colors[i]].push_back(out.window[i]);
  }
  return out;
}

/// Empty string if the family is valid: blocks partition the window, at most
/// 2|K| + 1 blocks, and g h^{-1} is not in K for distinct g, h in a block.
/// Otherwise a description of the first violation.
template <class Arith>
std::string check_separated(const Arith& arith,
                            const SeparatedFamily<typename Arith::value_type>& f) {
  using T = typename Arith::value_type;
  std::vector<T> all;
  for (const auto& b : f.blocks) {
    if (b.empty()) return "empty block";
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  std::vector<T> window = f.window;
  std::sort(window.begin(), window.end());
  if (all != window) return "blocks do not partition the window";
  if (f.blocks.size() > 2 * f.forbidden.size() + 1)
    return std::to_string(f.blocks.size()) + " blocks exceed 2|K|+1";
  for (const auto& b : f.blocks)
    for (const auto& g : b)
      for (const auto& h : b) {
        if (g == h) continue;
        const T q = arith.quotient(g, h);
        if (std::find(f.forbidden.begin(), f.forbidden.end(), q) != f.forbidden.end())
          return "a block contains two elements with quotient in K";
      }
  return {};
}

/// i(n) = largest 1-based i with chain_sizes[i-1] <= sqrt(|F_n| / phi(n)),
/// or 0 when no index qualifies. Requires |F_n| / phi(n) non-decreasing,
/// phi positive and chain_sizes non-decreasing.
std::vector<std::size_t> choose_index_sequence(std::span<const std::size_t> set_sizes,
                                               std::span<const double> phi,
                                               std::span<const std::size_t> chain_sizes);

}  // namespace entlab::constructions
