#include "entlab/dynamics/sequential.hpp"

#include <limits>
#include <string>

#include "entlab/errors.hpp"

namespace entlab::dynamics {

Partition pullback_partition(const ActionTable& action, Element g, const Partition& xi) {
  if (xi.space() != action.space())
    throw InvalidInput("partition and action live on different spaces");
  std::vector<std::int32_t> labels(xi.size());
  for (std::size_t x = 0; x < labels.size(); ++x)
    labels[x] = xi.cell(action.act(g, static_cast<Atom>(x)));
  return Partition(xi.space(), std::move(labels));
}

Partition refined_orbit_partition(const ActionTable& action, std::span<const Element> p,
                                  const Partition& xi) {
  if (p.empty()) throw InvalidInput("refined_orbit_partition: empty element set");
  std::vector<Partition> parts;
  parts.reserve(p.size());
  for (Element g : p) parts.push_back(pullback_partition(action, g, xi));
  return spaces::refine(parts);
}

double seq_entropy_functional(const ActionTable& action, const Partition& xi,
                              const std::vector<std::vector<Element>>& blocks) {
  if (blocks.empty()) throw InvalidInput("seq_entropy_functional: no blocks");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& b : blocks) {
    const double h = spaces::shannon_entropy(refined_orbit_partition(action, b, xi));
    best = std::min(best, h / static_cast<double>(b.size()));
  }
  return best;
}

std::vector<SequentialRow> sequential_entropy_profile(const ActionTable& action,
                                                      const Partition& xi,
                                                      const FolnerFamily& family,
                                                      std::size_t horizon) {
  if (horizon > family.horizon())
    throw InvalidInput("sequential_entropy_profile: horizon exceeds the family length");
  std::vector<SequentialRow> rows;
  for (std::size_t n = 1; n <= horizon; ++n) {
    SequentialRow row;
    row.n = n;
    row.functional = std::numeric_limits<double>::infinity();
    for (const auto& b : family.blocks(n)) {
      const double h = spaces::shannon_entropy(refined_orbit_partition(action, b, xi)) /
                       static_cast<double>(b.size());
      row.per_block.push_back(h);
      row.functional = std::min(row.functional, h);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

BernoulliShift bernoulli_shift(GroupPtr group, std::size_t alphabet, std::size_t cap) {
  if (alphabet < 1) throw InvalidInput("bernoulli_shift: empty alphabet");
  const std::size_t order = group->order();
  std::size_t atoms = 1;
  for (std::size_t i = 0; i < order; ++i) {
    if (atoms > cap / alphabet)
      throw BudgetExceeded("bernoulli_shift: " + std::to_string(alphabet) + "^" +
                           std::to_string(order) + " atoms exceeds the cap " +
                           std::to_string(cap));
    atoms *= alphabet;
  }
  std::vector<std::size_t> place(order, 1);
  for (std::size_t h = 1; h < order; ++h) place[h] = place[h - 1] * alphabet;

  std::vector<std::vector<Atom>> perms(order, std::vector<Atom>(atoms));
  std::vector<std::size_t> digits(order);
  for (std::size_t g = 0; g < order; ++g) {
    const Element g_inv = group->inv(static_cast<Element>(g));
    // (g.x)(h) = x(g^{-1} h): digit h of the image comes from digit g^{-1}h.
    std::vector<std::size_t> source(order);
    for (std::size_t h = 0; h < order; ++h)
      source[h] = static_cast<std::size_t>(group->mul(g_inv, static_cast<Element>(h)));
    for (std::size_t x = 0; x < atoms; ++x) {
      std::size_t rest = x;
      for (std::size_t h = 0; h < order; ++h) {
        digits[h] = rest % alphabet;
        rest /= alphabet;
      }
      std::size_t y = 0;
      for (std::size_t h = 0; h < order; ++h) y += digits[source[h]] * place[h];
      perms[g][x] = static_cast<Atom>(y);
    }
  }
  auto space = spaces::FiniteProbSpace::uniform(atoms);
  std::vector<std::int32_t> coord(atoms);
  const std::size_t e = static_cast<std::size_t>(group->identity());
  for (std::size_t x = 0; x < atoms; ++x)
    coord[x] = static_cast<std::int32_t>((x / place[e]) % alphabet);
  ActionTable action(std::move(group), space, std::move(perms));
  return {std::move(action), Partition(space, std::move(coord)), alphabet};
}

}  // namespace entlab::dynamics
