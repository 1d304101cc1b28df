#include "entlab/dynamics/averaging.hpp"

#include "entlab/errors.hpp"
#include "entlab/parallel.hpp"

namespace entlab::dynamics {

namespace {

void require_same_space(const ActionTable& action, const Semimetric& rho) {
  if (action.space() != rho.space())
    throw InvalidInput("semimetric and action live on different spaces");
}

}  // namespace

Semimetric translate_semimetric(const ActionTable& action, Element g, const Semimetric& rho) {
  require_same_space(action, rho);
  const std::size_t n = rho.size();
  spaces::SymmetricKernel k(n);
  std::vector<Atom> image(n);
  for (std::size_t x = 0; x < n; ++x) image[x] = action.act(g, static_cast<Atom>(x));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      k.set(static_cast<Atom>(x), static_cast<Atom>(y), rho(image[x], image[y]));
  return Semimetric::trusted(rho.space(), std::move(k));
}

Semimetric folner_average(const ActionTable& action, std::span<const Element> f,
                          const Semimetric& rho) {
  require_same_space(action, rho);
  if (f.empty()) throw InvalidInput("folner_average: empty set");
  const std::size_t n = rho.size();
  std::vector<double> acc(n * n, 0.0);
  std::vector<Atom> image(n);
  for (Element g : f) {
    for (std::size_t x = 0; x < n; ++x) image[x] = action.act(g, static_cast<Atom>(x));
    for (std::size_t x = 0; x < n; ++x) {
      double* row = &acc[x * n];
      const Atom gx = image[x];
      for (std::size_t y = x + 1; y < n; ++y) row[y] += rho(gx, image[y]);
    }
  }
  const double scale = 1.0 / static_cast<double>(f.size());
  spaces::SymmetricKernel k(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      k.set(static_cast<Atom>(x), static_cast<Atom>(y), acc[x * n + y] * scale);
  return Semimetric::trusted(rho.space(), std::move(k));
}

entropy::EpsEntropyResult phi(const ActionTable& action, const FolnerFamily& family,
                              const Semimetric& rho, std::size_t n, double eps,
                              const entropy::ExactOptions& opts) {
  return entropy::eps_entropy(folner_average(action, family.set(n), rho), eps, opts);
}

std::vector<PhiRow> phi_profile(const ActionTable& action, const FolnerFamily& family,
                                const Semimetric& rho, std::size_t horizon,
                                std::span<const double> eps_grid,
                                const entropy::ExactOptions& opts, std::size_t workers) {
  if (horizon > family.horizon())
    throw InvalidInput("phi_profile: horizon exceeds the family length");
  std::vector<Semimetric> averages;
  for (std::size_t n = 1; n <= horizon; ++n)
    averages.push_back(folner_average(action, family.set(n), rho));
  const std::size_t m = eps_grid.size();
  std::vector<PhiRow> rows(horizon * m);
  parallel_for(rows.size(), workers, [&](std::size_t i) {
    const std::size_t n = i / m + 1;
    rows[i].n = n;
    rows[i].set_size = family.set(n).size();
    rows[i].result = entropy::eps_entropy(averages[n - 1], eps_grid[i % m], opts);
  });
  return rows;
}

}  // namespace entlab::dynamics
