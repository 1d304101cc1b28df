#include "entlab/entropy/eps_entropy.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "entlab/errors.hpp"

namespace entlab::entropy {

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0))
    throw InvalidInput("eps must lie in (0, 1], got " + std::to_string(eps));
}

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits without(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i)
      for (auto x = w[i]; x; x &= x - 1) f(i * 64 + std::countr_zero(x));
  }
  bool operator==(const Bits&) const = default;
};

template <std::size_t W>
class ExactSolver {
 public:
  using Mask = Bits<W>;

  ExactSolver(const Semimetric& rho, double eps, std::size_t node_limit)
      : n_(rho.size()),
        budget_(rho.space()->budget_below(eps)),
        node_limit_(node_limit),
        nbr_(n_) {
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        if (x != y && rho(x, y) < eps) nbr_[x].set(y);
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return budget_.weights[a] > budget_.weights[b];
    });
  }

  void seed(const Decomposition& d) {
    best_k_ = d.cells.size();
    best_ = d;
  }

  Decomposition solve() {
    Mask all;
    for (std::size_t i = 0; i < n_; ++i) all.set(i);
    dfs(all, 0.0);
    return best_;
  }

 private:
  // Greedy independent set in the "distance < eps" graph restricted to
  // `live`, minus the members that fit into what is left of X_0.
  std::size_t lower_bound(const Mask& live, double used) const {
    Mask blocked;
    std::vector<double> picked;
    for (auto a : order_) {
      if (!live.test(a) || blocked.test(a)) continue;
      picked.push_back(budget_.weights[a]);
      for (std::size_t i = 0; i < W; ++i) blocked.w[i] |= nbr_[a].w[i];
    }
    std::sort(picked.begin(), picked.end());
    std::size_t removable = 0;
    double acc = used;
    for (double w : picked) {
      if (!budget_.fits(acc + w)) break;
      acc += w;
      ++removable;
    }
    return picked.size() - removable;
  }

  void maximal_cliques(Mask r, Mask p, Mask x, std::vector<Mask>& out) const {
    if (!p.any() && !x.any()) {
      out.push_back(r);
      return;
    }
    std::size_t pivot = 0, pivot_deg = 0;
    bool have = false;
    auto consider = [&](std::size_t u) {
      const auto d = (p & nbr_[u]).count();
      if (!have || d > pivot_deg) {
        pivot = u;
        pivot_deg = d;
        have = true;
      }
    };
    p.for_each(consider);
    x.for_each(consider);
    const Mask branch = p.without(nbr_[pivot]);
    branch.for_each([&](std::size_t v) {
      Mask r2 = r;
      r2.set(v);
      maximal_cliques(r2, p & nbr_[v], x & nbr_[v], out);
      p.reset(v);
      x.set(v);
    });
  }

  void dfs(const Mask& live, double used) {
    if (++nodes_ > node_limit_)
      throw BudgetExceeded("exact eps-entropy: node limit " +
                           std::to_string(node_limit_) + " exceeded");
    if (!live.any()) {
      if (stack_.size() < best_k_) {
        best_k_ = stack_.size();
        record();
      }
      return;
    }
    if (stack_.size() + lower_bound(live, used) >= best_k_) return;

    // Branch on the live atom with the fewest live neighbours.
    std::size_t v = n_, v_deg = 0;
    live.for_each([&](std::size_t a) {
      const auto d = (nbr_[a] & live).count();
      if (v == n_ || d < v_deg) {
        v = a;
        v_deg = d;
      }
    });

    std::vector<Mask> cliques;
    Mask r;
    r.set(v);
    maximal_cliques(r, nbr_[v] & live, Mask{}, cliques);
    std::stable_sort(cliques.begin(), cliques.end(), [](const Mask& a, const Mask& b) {
      return a.count() > b.count();
    });
    for (const auto& c : cliques) {
      if (stack_.size() + 1 >= best_k_) break;
      stack_.push_back(c);
      dfs(live.without(c), used);
      stack_.pop_back();
    }

    const double w = budget_.weights[v];
    if (budget_.fits(used + w)) {
      Mask rest = live;
      rest.reset(v);
      exceptional_.set(v);
      dfs(rest, used + w);
      exceptional_.reset(v);
    }
  }

  void record() {
    best_ = Decomposition{};
    exceptional_.for_each([&](std::size_t a) {
      best_.exceptional.push_back(static_cast<Atom>(a));
    });
    for (const auto& c : stack_) {
      std::vector<Atom> cell;
      c.for_each([&](std::size_t a) { cell.push_back(static_cast<Atom>(a)); });
      best_.cells.push_back(std::move(cell));
    }
  }

  std::size_t n_;
  spaces::MassBudget budget_;
  std::size_t node_limit_;
  std::vector<Mask> nbr_;
  std::vector<std::size_t> order_;
  std::vector<Mask> stack_;
  Mask exceptional_;
  std::size_t nodes_ = 0;
  std::size_t best_k_ = 0;
  Decomposition best_;
};

// X_0 = the lightest atoms that fit, every other atom a singleton cell.
Decomposition singleton_cover(const Semimetric& rho, double eps) {
  const auto budget = rho.space()->budget_below(eps);
  std::vector<Atom> order(rho.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Atom a, Atom b) {
    return budget.weights[a] < budget.weights[b];
  });
  Decomposition d;
  double acc = 0.0;
  std::size_t i = 0;
  for (; i < order.size() && budget.fits(acc + budget.weights[order[i]]); ++i) {
    acc += budget.weights[order[i]];
    d.exceptional.push_back(order[i]);
  }
  for (; i < order.size(); ++i) d.cells.push_back({order[i]});
  std::sort(d.exceptional.begin(), d.exceptional.end());
  std::sort(d.cells.begin(), d.cells.end());
  return d;
}

template <std::size_t W>
EpsEntropyResult run_exact(const Semimetric& rho, double eps, const ExactOptions& opts) {
  ExactSolver<W> solver(rho, eps, opts.node_limit);
  auto seed = singleton_cover(rho, eps);
  const auto greedy = eps_entropy_greedy_upper(rho, eps);
  if (greedy.witness && greedy.witness->cells.size() < seed.cells.size() &&
      is_admissible(rho, eps, *greedy.witness))
    seed = *greedy.witness;
  solver.seed(seed);
  const auto best = solver.solve();
  EpsEntropyResult r;
  r.eps = eps;
  r.exact = true;
  r.lower_cells = r.upper_cells = best.cells.size();
  r.lower_bits = r.upper_bits = cells_to_bits(best.cells.size());
  r.witness = best;
  return r;
}

}  // namespace

std::vector<std::int32_t> Decomposition::labels(std::size_t atoms) const {
  std::vector<std::int32_t> out(atoms, 0);
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (Atom a : cells[i]) out[a] = static_cast<std::int32_t>(i + 1);
  return out;
}

bool is_admissible(const Semimetric& rho, double eps, const Decomposition& d) {
  std::vector<int> seen(rho.size(), 0);
  for (Atom a : d.exceptional) ++seen.at(a);
  for (const auto& c : d.cells) {
    if (c.empty() || !(rho.diameter(c) < eps)) return false;
    for (Atom a : c) ++seen.at(a);
  }
  for (int s : seen)
    if (s != 1) return false;
  return rho.space()->mass_below(d.exceptional, eps);
}

double cells_to_bits(std::size_t k) { return k <= 1 ? 0.0 : std::log2(static_cast<double>(k)); }

EpsEntropyResult eps_entropy_exact(const Semimetric& rho, double eps,
                                   const ExactOptions& opts) {
  check_eps(eps);
  const std::size_t n = rho.size();
  if (n > opts.cap)
    throw BudgetExceeded("exact eps-entropy: " + std::to_string(n) +
                         " atoms exceeds the cap " + std::to_string(opts.cap));
  if (n <= 64) return run_exact<1>(rho, eps, opts);
  if (n <= 128) return run_exact<2>(rho, eps, opts);
  if (n <= 256) return run_exact<4>(rho, eps, opts);
  if (n <= 512) return run_exact<8>(rho, eps, opts);
  if (n <= 1024) return run_exact<16>(rho, eps, opts);
  throw BudgetExceeded("exact eps-entropy: at most 1024 atoms are supported");
}

EpsEntropyResult eps_entropy_greedy_upper(const Semimetric& rho, double eps) {
  check_eps(eps);
  const std::size_t n = rho.size();
  const auto budget = rho.space()->budget_below(eps);
  const double radius = eps / 2.0 * (1.0 - 1e-9);
  std::vector<char> covered(n, 0);
  double residual = 0.0;
  for (double w : budget.weights) residual += w;

  Decomposition d;
  while (!budget.fits(residual)) {
    std::size_t center = n;
    double center_mass = -1.0;
    for (std::size_t c = 0; c < n; ++c) {
      double m = 0.0;
      for (std::size_t x = 0; x < n; ++x)
        if (!covered[x] && rho(c, x) <= radius) m += budget.weights[x];
      if (m > center_mass) {
        center = c;
        center_mass = m;
      }
    }
    std::vector<Atom> cell;
    for (std::size_t x = 0; x < n; ++x)
      if (!covered[x] && rho(center, x) <= radius) {
        covered[x] = 1;
        cell.push_back(static_cast<Atom>(x));
        residual -= budget.weights[x];
      }
    if (cell.empty()) throw InternalError("greedy cover: empty ball");
    d.cells.push_back(std::move(cell));
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!covered[x]) d.exceptional.push_back(static_cast<Atom>(x));

  EpsEntropyResult r;
  r.eps = eps;
  r.upper_cells = d.cells.size();
  r.upper_bits = cells_to_bits(r.upper_cells);
  r.lower_cells = 0;
  r.lower_bits = 0.0;
  r.witness = std::move(d);
  return r;
}

EpsEntropyResult eps_entropy_packing_lower(const Semimetric& rho, double eps) {
  check_eps(eps);
  const std::size_t n = rho.size();
  const auto budget = rho.space()->budget_below(eps);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return budget.weights[a] > budget.weights[b];
  });
  std::vector<std::size_t> sep;
  for (auto x : order) {
    bool ok = true;
    for (auto s : sep)
      if (rho(x, s) < eps) {
        ok = false;
        break;
      }
    if (ok) sep.push_back(x);
  }
  std::vector<double> w;
  for (auto s : sep) w.push_back(budget.weights[s]);
  std::sort(w.begin(), w.end());
  std::size_t removed = 0;
  double acc = 0.0;
  for (double x : w) {
    if (!budget.fits(acc + x)) break;
    acc += x;
    ++removed;
  }
  EpsEntropyResult r;
  r.eps = eps;
  r.lower_cells = std::max<std::size_t>(sep.size() - removed, 1);
  r.lower_bits = cells_to_bits(r.lower_cells);
  r.upper_cells = n;
  r.upper_bits = cells_to_bits(n);
  return r;
}

EpsEntropyResult eps_entropy(const Semimetric& rho, double eps, const ExactOptions& opts) {
  check_eps(eps);
  if (rho.size() <= opts.cap) {
    try {
      return eps_entropy_exact(rho, eps, opts);
    } catch (const BudgetExceeded&) {
    }
  }
  auto lo = eps_entropy_packing_lower(rho, eps);
  auto hi = eps_entropy_greedy_upper(rho, eps);
  hi.lower_cells = lo.lower_cells;
  hi.lower_bits = lo.lower_bits;
  return hi;
}

}  // namespace entlab::entropy
