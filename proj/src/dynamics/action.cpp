#include "entlab/dynamics/action.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "entlab/errors.hpp"

namespace entlab::dynamics {

namespace {

// Homomorphism checks touch at most this many (g, h, x) triples; above it a
// fixed-seed sample of pairs is checked.
constexpr std::size_t kFullCheckLimit = 50'000'000;
constexpr std::size_t kSampledPairs = 2000;

bool same_mass(const spaces::FiniteProbSpace& s, Atom a, Atom b) {
  if (s.exact()) return (*s.weights())[a] == (*s.weights())[b];
  return std::abs(s.mass(a) - s.mass(b)) <= 1e-12;
}

}  // namespace

ActionTable::ActionTable(GroupPtr group, SpacePtr space)
    : group_(std::move(group)), space_(std::move(space)) {
  if (!group_ || !space_) throw InvalidInput("action: null group or space");
}

ActionTable::ActionTable(GroupPtr group, SpacePtr space,
                         std::vector<std::vector<Atom>> perms)
    : ActionTable(std::move(group), std::move(space)) {
  const std::size_t order = group_->order(), n = space_->size();
  if (perms.size() != order)
    throw InvalidInput("action: expected one permutation per group element");
  perms_.reserve(order * n);
  for (std::size_t g = 0; g < order; ++g) {
    if (perms[g].size() != n)
      throw InvalidInput("action: permutation " + std::to_string(g) + " has wrong length");
    std::vector<char> hit(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      const Atom y = perms[g][x];
      if (y < 0 || static_cast<std::size_t>(y) >= n || hit[y])
        throw InvalidInput("action: row " + std::to_string(g) + " is not a permutation");
      hit[y] = 1;
      if (!same_mass(*space_, static_cast<Atom>(x), y))
        throw InvalidInput("action: element " + std::to_string(g) +
                           " does not preserve the measure");
    }
    perms_.insert(perms_.end(), perms[g].begin(), perms[g].end());
  }
  const Element e = group_->identity();
  for (std::size_t x = 0; x < n; ++x)
    if (act(e, static_cast<Atom>(x)) != static_cast<Atom>(x))
      throw InvalidInput("action: identity does not act trivially");

  auto check = [&](Element g, Element h) {
    const Element gh = group_->mul(g, h);
    for (std::size_t x = 0; x < n; ++x)
      if (act(gh, static_cast<Atom>(x)) != act(g, act(h, static_cast<Atom>(x))))
        throw InvalidInput("action: not a homomorphism at (" + std::to_string(g) +
                           ", " + std::to_string(h) + ")");
  };
  if (order * order * n <= kFullCheckLimit) {
    for (std::size_t g = 0; g < order; ++g)
      for (std::size_t h = 0; h < order; ++h)
        check(static_cast<Element>(g), static_cast<Element>(h));
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order - 1));
    const std::size_t pairs = std::clamp<std::size_t>(kFullCheckLimit / n, 1, kSampledPairs);
    for (std::size_t i = 0; i < pairs; ++i) check(pick(rng), pick(rng));
  }
}

ActionTable ActionTable::left_translation(GroupPtr group) {
  auto space = spaces::FiniteProbSpace::uniform(group->order());
  ActionTable a(std::move(group), std::move(space));
  a.translation_ = true;
  return a;
}

FolnerFamily::FolnerFamily(GroupPtr group, std::vector<std::vector<Element>> sets,
                           std::vector<std::vector<std::vector<Element>>> blocks)
    : group_(std::move(group)), sets_(std::move(sets)), blocks_(std::move(blocks)) {
  if (!group_) throw InvalidInput("folner family: null group");
  const auto order = static_cast<Element>(group_->order());
  std::vector<char> prev(order, 0);
  for (std::size_t n = 0; n < sets_.size(); ++n) {
    auto& f = sets_[n];
    if (f.empty())
      throw InvalidInput("folner family: empty set at level " + std::to_string(n + 1));
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InvalidInput("folner family: repeated element at level " + std::to_string(n + 1));
    std::vector<char> cur(order, 0);
    for (Element g : f) {
      if (g < 0 || g >= order) throw InvalidInput("folner family: element out of range");
      cur[g] = 1;
    }
    for (Element g = 0; g < order; ++g)
      if (prev[g] && !cur[g])
        throw InvalidInput("folner family: level " + std::to_string(n + 1) +
                           " does not contain the previous level");
    prev = std::move(cur);
  }
  if (blocks_.empty()) return;
  if (blocks_.size() != sets_.size())
    throw InvalidInput("folner family: need blocks for every level");
  for (std::size_t n = 0; n < sets_.size(); ++n) {
    std::vector<int> seen(order, 0);
    for (const auto& b : blocks_[n]) {
      if (b.empty()) throw InvalidInput("folner family: empty block");
      for (Element g : b) {
        if (g < 0 || g >= order)
          throw InvalidInput("folner family: block element out of range");
        ++seen[g];
      }
    }
    std::vector<int> want(order, 0);
    for (Element g : sets_[n]) want[g] = 1;
    if (seen != want)
      throw InvalidInput("folner family: blocks at level " + std::to_string(n + 1) +
                         " are not a disjoint cover of F_n");
  }
}

std::span<const Element> FolnerFamily::set(std::size_t n) const {
  if (n < 1 || n > sets_.size())
    throw InvalidInput("folner family: level " + std::to_string(n) + " outside 1.." +
                       std::to_string(sets_.size()));
  return sets_[n - 1];
}

const std::vector<std::vector<Element>>& FolnerFamily::blocks(std::size_t n) const {
  if (blocks_.empty()) throw InvalidInput("folner family: no blocks");
  set(n);
  return blocks_[n - 1];
}

}  // namespace entlab::dynamics
