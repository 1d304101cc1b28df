#pragma once

#include <span>
#include <vector>

#include "entlab/dynamics/action.hpp"
#include "entlab/entropy/eps_entropy.hpp"
#include "entlab/spaces/semimetric.hpp"

namespace entlab::dynamics {

using spaces::Semimetric;

/// (g^{-1} rho)(x, y) = rho(g.x, g.y).
Semimetric translate_semimetric(const ActionTable& action, Element g, const Semimetric& rho);

/// Mean of g^{-1} rho over g in F. Throws InvalidInput for empty F.
Semimetric folner_average(const ActionTable& action, std::span<const Element> f,
                          const Semimetric& rho);

/// eps-entropy of the average over F_n.
entropy::EpsEntropyResult phi(const ActionTable& action, const FolnerFamily& family,
                              const Semimetric& rho, std::size_t n, double eps,
                              const entropy::ExactOptions& opts = {});

struct PhiRow {
  std::size_t n = 0;
  std::size_t set_size = 0;
  entropy::EpsEntropyResult result;
};

/// phi over n = 1..horizon and every eps in the grid, ordered by (n, eps).
/// Grid points run on up to `workers` threads.
std::vector<PhiRow> phi_profile(const ActionTable& action, const FolnerFamily& family,
                                const Semimetric& rho, std::size_t horizon,
                                std::span<const double> eps_grid,
                                const entropy::ExactOptions& opts = {},
                                std::size_t workers = 1);

}  // namespace entlab::dynamics
