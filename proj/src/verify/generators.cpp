#include "entlab/verify/generators.hpp"

namespace entlab::verify {

spaces::SpacePtr random_space(Rng& rng, std::size_t atoms, std::uint64_t max_weight) {
  std::vector<std::uint64_t> w(atoms);
  for (auto& x : w) x = uniform_int<std::uint64_t>(rng, 1, max_weight);
  return spaces::FiniteProbSpace::from_weights(std::move(w));
}

spaces::Partition random_partition(Rng& rng, const spaces::SpacePtr& space,
                                   std::size_t max_cells) {
  std::vector<std::int32_t> labels(space->size());
  const auto top = static_cast<std::int32_t>(max_cells) - 1;
  for (auto& l : labels) l = uniform_int<std::int32_t>(rng, 0, top);
  return spaces::Partition(space, std::move(labels));
}

CutCombination random_cut_combination(Rng& rng, const spaces::SpacePtr& space,
                                      std::size_t count, std::size_t max_cells) {
  std::vector<spaces::Partition> parts;
  std::vector<spaces::Semimetric> cuts;
  std::vector<double> raw(count);
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    parts.push_back(random_partition(rng, space, max_cells));
    cuts.push_back(spaces::cut_semimetric(parts.back()));
    raw[i] = static_cast<double>(uniform_int<int>(rng, 1, 8));
    total += raw[i];
  }
  for (auto& w : raw) w /= total;
  auto metric = spaces::combine(raw, cuts);
  return {std::move(parts), std::move(raw), std::move(metric)};
}

}  // namespace entlab::verify
