#include "entlab/spaces/prob_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "entlab/errors.hpp"

namespace entlab::spaces {

std::shared_ptr<const FiniteProbSpace> FiniteProbSpace::uniform(std::size_t n) {
  auto s = from_weights(std::vector<std::uint64_t>(n, 1));
  return s;
}

std::shared_ptr<const FiniteProbSpace> FiniteProbSpace::from_weights(
    std::vector<std::uint64_t> weights) {
  if (weights.empty()) throw InvalidInput("probability space: no atoms");
  std::uint64_t total = 0;
  for (auto w : weights) {
    if (total > (std::uint64_t{1} << 52) - w)
      throw InvalidInput("probability space: total weight exceeds 2^52");
    total += w;
  }
  if (total == 0) throw InvalidInput("probability space: zero total weight");
  auto s = std::shared_ptr<FiniteProbSpace>(new FiniteProbSpace());
  s->masses_.resize(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i)
    s->masses_[i] = static_cast<double>(weights[i]) / static_cast<double>(total);
  s->uniform_ = std::all_of(weights.begin(), weights.end(),
                            [&](auto w) { return w == weights.front(); });
  s->total_weight_ = total;
  s->weights_ = std::move(weights);
  return s;
}

std::shared_ptr<const FiniteProbSpace> FiniteProbSpace::from_masses(
    std::vector<double> masses) {
  if (masses.empty()) throw InvalidInput("probability space: no atoms");
  double sum = 0.0;
  for (double m : masses) {
    if (!(m >= 0.0) || !std::isfinite(m))
      throw InvalidInput("probability space: negative or non-finite mass");
    sum += m;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw InvalidInput("probability space: masses sum to " +
                       std::to_string(sum) + ", not 1");
  auto s = std::shared_ptr<FiniteProbSpace>(new FiniteProbSpace());
  s->uniform_ = std::all_of(masses.begin(), masses.end(),
                            [&](double m) { return m == masses.front(); });
  s->masses_ = std::move(masses);
  return s;
}

double FiniteProbSpace::mass_of(std::span<const Atom> atoms) const {
  if (weights_) {
    std::uint64_t w = 0;
    for (Atom a : atoms) w += (*weights_)[a];
    return static_cast<double>(w) / static_cast<double>(total_weight_);
  }
  double m = 0.0;
  for (Atom a : atoms) m += masses_[a];
  return m;
}

MassBudget FiniteProbSpace::budget_below(double eps) const {
  MassBudget b;
  if (!weights_) {
    b.weights = masses_;
    b.limit = eps;
    b.inclusive = false;
    return b;
  }
  b.weights.assign(weights_->begin(), weights_->end());
  // w < eps * W over integers w. A product within rounding of an integer r is
  // read as exactly r (eps is a decimal like 0.3), giving w <= r - 1.
  const double t = eps * static_cast<double>(total_weight_);
  const double r = std::round(t);
  b.inclusive = true;
  if (std::abs(t - r) <= 1e-9 * std::max(1.0, std::abs(t)))
    b.limit = r - 1.0;
  else
    b.limit = std::floor(t);
  return b;
}

bool FiniteProbSpace::mass_below(std::span<const Atom> atoms, double eps) const {
  const auto b = budget_below(eps);
  double w = 0.0;
  for (Atom a : atoms) w += b.weights[a];
  return b.fits(w);
}

Partition::Partition(SpacePtr space, std::vector<std::int32_t> labels)
    : space_(std::move(space)) {
  if (!space_) throw InvalidInput("partition: null space");
  if (labels.size() != space_->size())
    throw InvalidInput("partition: label count " + std::to_string(labels.size()) +
                       " != atom count " + std::to_string(space_->size()));
  std::unordered_map<std::int32_t, std::int32_t> remap;
  labels_.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] =
        remap.try_emplace(labels[i], static_cast<std::int32_t>(remap.size()));
    labels_[i] = it->second;
  }
  cells_ = remap.size();
}

Partition Partition::trivial(SpacePtr space) {
  const auto n = space->size();
  return Partition(std::move(space), std::vector<std::int32_t>(n, 0));
}

Partition Partition::singletons(SpacePtr space) {
  std::vector<std::int32_t> l(space->size());
  std::iota(l.begin(), l.end(), 0);
  return Partition(std::move(space), std::move(l));
}

std::vector<double> Partition::cell_masses() const {
  std::vector<double> m(cells_, 0.0);
  if (const auto& w = space_->weights()) {
    std::vector<std::uint64_t> acc(cells_, 0);
    for (std::size_t i = 0; i < labels_.size(); ++i) acc[labels_[i]] += (*w)[i];
    for (std::size_t c = 0; c < cells_; ++c)
      m[c] = static_cast<double>(acc[c]) /
             static_cast<double>(space_->total_weight());
    return m;
  }
  for (std::size_t i = 0; i < labels_.size(); ++i)
    m[labels_[i]] += space_->mass(static_cast<Atom>(i));
  return m;
}

std::vector<std::vector<Atom>> Partition::cells() const {
  std::vector<std::vector<Atom>> out(cells_);
  for (std::size_t i = 0; i < labels_.size(); ++i)
    out[labels_[i]].push_back(static_cast<Atom>(i));
  return out;
}

double shannon_entropy(const Partition& xi) {
  double h = 0.0;
  for (double m : xi.cell_masses())
    if (m > 0.0) h -= m * std::log2(m);
  return h;
}

Partition refine(std::span<const Partition> parts) {
  if (parts.empty()) throw InvalidInput("refine: no partitions");
  const auto& space = parts.front().space();
  for (const auto& p : parts)
    if (p.space() != space) throw InvalidInput("refine: mismatched spaces");
  const std::size_t n = space->size();
  // Fold pairwise: label pair (current, next) -> fresh label.
  std::vector<std::int32_t> cur(parts.front().labels().begin(),
                                parts.front().labels().end());
  for (std::size_t k = 1; k < parts.size(); ++k) {
    std::unordered_map<std::uint64_t, std::int32_t> ids;
    for (std::size_t i = 0; i < n; ++i) {
      const auto key = (static_cast<std::uint64_t>(cur[i]) << 32) |
                       static_cast<std::uint32_t>(parts[k].cell(static_cast<Atom>(i)));
      auto [it, fresh] =
          ids.try_emplace(key, static_cast<std::int32_t>(ids.size()));
      cur[i] = it->second;
    }
  }
  return Partition(space, std::move(cur));
}

Partition refine(const Partition& a, const Partition& b) {
  const Partition both[] = {a, b};
  return refine(both);
}

}  // namespace entlab::spaces
