#include "entlab/constructions/invariant.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "entlab/errors.hpp"

namespace entlab::constructions {

using algebra::Element;

std::vector<std::int32_t> transversal_labels(const algebra::FiniteGroup& group, Element g0,
                                             std::size_t order) {
  if (algebra::element_order(group, g0) != order)
    throw InvalidInput("transversal_partition: g0 has order " +
                       std::to_string(algebra::element_order(group, g0)) + ", expected " +
                       std::to_string(order));
  const std::size_t n = group.order();
  std::vector<std::int32_t> labels(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (labels[x] >= 0) continue;
    // x is the least unlabelled element, hence the least of its orbit.
    Element y = static_cast<Element>(x);
    for (std::size_t j = 0; j < order; ++j) {
      labels[y] = static_cast<std::int32_t>(j);
      y = group.mul(g0, y);
    }
  }
  return labels;
}

spaces::Partition transversal_partition(const algebra::FiniteGroup& group,
                                        const spaces::SpacePtr& space, Element g0,
                                        std::size_t order) {
  if (space->size() != group.order())
    throw InvalidInput("transversal_partition: space must have one atom per element");
  return spaces::Partition(space, transversal_labels(group, g0, order));
}

spaces::Semimetric left_invariant_semimetric(const algebra::FiniteGroup& group,
                                             const spaces::SpacePtr& space,
                                             const std::vector<double>& root) {
  const std::size_t n = group.order();
  if (root.size() != n || space->size() != n)
    throw InvalidInput("left_invariant_semimetric: need one root value and atom per element");
  const Element e = group.identity();
  if (root[e] != 0.0) throw InvalidInput("left_invariant_semimetric: root(e) must be 0");
  std::vector<Element> steps;
  for (std::size_t s = 0; s < n; ++s) {
    if (std::isnan(root[s]) || root[s] < 0.0)
      throw InvalidInput("left_invariant_semimetric: negative root value");
    if (root[s] != root[group.inv(static_cast<Element>(s))])
      throw InvalidInput("left_invariant_semimetric: root is not inverse-symmetric at " +
                         std::to_string(s));
    if (s != static_cast<std::size_t>(e) && std::isfinite(root[s]))
      steps.push_back(static_cast<Element>(s));
  }

  // Dense Dijkstra from e over right multiplication by the steps.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, kInf);
  std::vector<char> done(n, 0);
  dist[e] = 0.0;
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v] && (u == n || dist[v] < dist[u])) u = v;
    if (dist[u] == kInf) break;
    done[u] = 1;
    for (Element s : steps) {
      const Element v = group.mul(static_cast<Element>(u), s);
      if (dist[u] + root[s] < dist[v]) dist[v] = dist[u] + root[s];
    }
  }
  for (double d : dist)
    if (d == kInf) throw InvalidInput("left_invariant_semimetric: steps do not generate the group");

  spaces::SymmetricKernel k(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Element xi = group.inv(static_cast<Element>(x));
    for (std::size_t y = x + 1; y < n; ++y)
      k.set(static_cast<spaces::Atom>(x), static_cast<spaces::Atom>(y),
            dist[group.mul(xi, static_cast<Element>(y))]);
  }
  return spaces::Semimetric::trusted(space, std::move(k));
}

std::vector<double> discrete_root(const algebra::FiniteGroup& group) {
  std::vector<double> r(group.order(), 1.0);
  r[group.identity()] = 0.0;
  return r;
}

std::vector<double> word_root(const algebra::FiniteGroup& group,
                              const std::vector<Element>& generators) {
  std::vector<double> r(group.order(), std::numeric_limits<double>::infinity());
  for (Element s : generators) {
    r[s] = 1.0;
    r[group.inv(s)] = 1.0;
  }
  r[group.identity()] = 0.0;
  return r;
}

std::vector<double> random_root(const algebra::FiniteGroup& group, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.5, 1.0);
  std::vector<double> r(group.order(), -1.0);
  r[group.identity()] = 0.0;
  for (std::size_t s = 0; s < r.size(); ++s) {
    if (r[s] >= 0.0) continue;
    r[s] = u(rng);
    r[group.inv(static_cast<Element>(s))] = r[s];
  }
  return r;
}

}  // namespace entlab::constructions
