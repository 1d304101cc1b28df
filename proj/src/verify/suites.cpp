#include "entlab/verify/suites.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "entlab/algebra/sl2.hpp"
#include "entlab/constructions/coloring.hpp"
#include "entlab/dynamics/averaging.hpp"
#include "entlab/dynamics/sequential.hpp"
#include "entlab/entropy/eps_entropy.hpp"
#include "entlab/spaces/m_norm.hpp"
#include "entlab/verify/generators.hpp"

namespace entlab::verify {

using algebra::Element;
using spaces::Atom;
using spaces::Partition;
using spaces::Semimetric;

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) : start_(std::chrono::steady_clock::now()) {
    result_.name = std::move(name);
  }

  void trial() { ++result_.trials; }

  template <class... Parts>
  void fail(const Parts&... parts) {
    if (result_.violations++ == 0) {
      std::ostringstream os;
      os.precision(17);
      (os << ... << parts);
      result_.first_violation = os.str();
    }
  }

  void stat(std::string key, double value) { result_.stats.emplace_back(std::move(key), value); }

  SuiteResult finish() {
    result_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(result_);
  }

 private:
  SuiteResult result_;
  std::chrono::steady_clock::time_point start_;
};

std::size_t exact_cells(const Semimetric& rho, double eps) {
  return entropy::eps_entropy_exact(rho, eps).upper_cells;
}

double binary_entropy(double p) { return -p * std::log2(p) - (1 - p) * std::log2(1 - p); }

double max_gap(const Semimetric& a, const Semimetric& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.kernel().values().size(); ++i)
    worst = std::max(worst, std::abs(a.kernel().values()[i] - b.kernel().values()[i]));
  return worst;
}

// G acting on G x {0..fibers-1} by left translation on the first factor,
// atoms shuffled, each fiber carrying its own integer weight.
dynamics::ActionTable fibered_action(Rng& rng, const algebra::GroupPtr& group,
                                     std::size_t fibers) {
  const std::size_t order = group->order();
  const std::size_t n = order * fibers;
  std::vector<Atom> place(n);
  for (std::size_t i = 0; i < n; ++i) place[i] = static_cast<Atom>(i);
  std::shuffle(place.begin(), place.end(), rng);
  std::vector<std::uint64_t> fiber_weight(fibers);
  for (auto& w : fiber_weight) w = uniform_int<std::uint64_t>(rng, 1, 4);
  std::vector<std::uint64_t> weights(n);
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t f = 0; f < fibers; ++f) weights[place[g * fibers + f]] = fiber_weight[f];
  auto space = spaces::FiniteProbSpace::from_weights(std::move(weights));
  std::vector<std::vector<Atom>> perms(order, std::vector<Atom>(n));
  for (std::size_t h = 0; h < order; ++h)
    for (std::size_t g = 0; g < order; ++g) {
      const auto hg = static_cast<std::size_t>(
          group->mul(static_cast<Element>(h), static_cast<Element>(g)));
      for (std::size_t f = 0; f < fibers; ++f)
        perms[h][place[g * fibers + f]] = place[hg * fibers + f];
    }
  return dynamics::ActionTable(group, std::move(space), std::move(perms));
}

algebra::GroupPtr sl2_prime(std::uint32_t p) {
  return algebra::Sl2Group::create(algebra::FieldTower::create(p, 0), 0);
}

template <class Arith>
void check_coloring(Recorder& rec, const char* where, const Arith& arith,
                    std::vector<typename Arith::value_type> window,
                    std::vector<typename Arith::value_type> forbidden) {
  using T = typename Arith::value_type;
  rec.trial();
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
  const auto graph =
      constructions::difference_graph(arith, std::span<const T>(window), std::span<const T>(forbidden));
  const auto colors = constructions::greedy_coloring(graph);
  std::size_t used = 0;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    used = std::max(used, colors[v] + 1);
    for (std::size_t u : graph.adj[v])
      if (colors[u] == colors[v]) return rec.fail(where, ": adjacent vertices share a color");
  }
  if (used > 2 * forbidden.size() + 1)
    return rec.fail(where, ": ", used, " colors for |K| = ", forbidden.size());
  const auto family =
      constructions::separated_family(arith, std::span<const T>(window), std::span<const T>(forbidden));
  const auto why = constructions::check_separated(arith, family);
  if (!why.empty()) rec.fail(where, ": ", why);
}

}  // namespace

double SuiteResult::stat(const std::string& key) const {
  for (const auto& [k, v] : stats)
    if (k == key) return v;
  return std::numeric_limits<double>::quiet_NaN();
}

SuiteResult sandwich_suite(std::uint64_t seed, std::size_t trials) {
  Recorder rec("sandwich");
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto space = random_space(rng, uniform_int<std::size_t>(rng, 1, 12));
    const auto combo = random_cut_combination(rng, space, uniform_int<std::size_t>(rng, 1, 4),
                                              uniform_int<std::size_t>(rng, 2, 5));
    const double eps = kSandwichEps[t % std::size(kSandwichEps)];
    const auto lower = entropy::eps_entropy_packing_lower(combo.metric, eps).lower_cells;
    const auto exact = exact_cells(combo.metric, eps);
    const auto upper = entropy::eps_entropy_greedy_upper(combo.metric, eps).upper_cells;
    rec.trial();
    if (!(lower <= exact && exact <= upper))
      rec.fail("trial ", t, " eps ", eps, ": lower ", lower, " exact ", exact, " upper ", upper);
  }
  return rec.finish();
}

SuiteResult lowerbound_lemma_suite(std::uint64_t seed, std::size_t trials) {
  static constexpr double kEps[] = {0.01, 0.02, 0.05, 0.1, 0.15, 0.2, 0.25};
  Recorder rec("lemma_lowerbound");
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto space = random_space(rng, uniform_int<std::size_t>(rng, 2, 12));
    const auto k = uniform_int<std::size_t>(rng, 1, 4);
    std::vector<Semimetric> parts;
    std::vector<double> alpha(k);
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      auto m = random_cut_combination(rng, space, uniform_int<std::size_t>(rng, 1, 3),
                                      uniform_int<std::size_t>(rng, 2, 5))
                   .metric;
      if (uniform_int(rng, 0, 1)) m = m.scaled(uniform_real(rng, 0.25, 1.0));
      parts.push_back(std::move(m));
      alpha[i] = static_cast<double>(uniform_int(rng, 1, 8));
      total += alpha[i];
    }
    for (auto& a : alpha) a /= total;
    const auto mixed = spaces::combine(alpha, parts);
    const double eps = kEps[uniform_int<std::size_t>(rng, 0, std::size(kEps) - 1)];
    const auto bound = exact_cells(mixed, eps);
    const double wide = 2 * std::sqrt(eps);
    bool found = false;
    for (const auto& m : parts)
      if (exact_cells(m, wide) <= bound) {
        found = true;
        break;
      }
    rec.trial();
    if (!found)
      rec.fail("trial ", t, " eps ", eps, ": every component exceeds ", bound, " cells");
  }
  return rec.finish();
}

SuiteResult partition_lemma_suite(std::uint64_t seed, std::size_t trials) {
  Recorder rec("lemma_partitions");
  Rng rng(seed);
  double least_margin = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto space = random_space(rng, uniform_int<std::size_t>(rng, 2, 12));
    const auto k = uniform_int<std::size_t>(rng, 1, 4);
    std::vector<Partition> parts;
    std::vector<Semimetric> cuts;
    std::size_t m = 1;
    for (std::size_t i = 0; i < k; ++i) {
      parts.push_back(random_partition(rng, space, uniform_int<std::size_t>(rng, 1, 4)));
      cuts.push_back(spaces::cut_semimetric(parts.back()));
      m = std::max(m, parts.back().cell_count());
    }
    const std::vector<double> alpha(k, 1.0 / static_cast<double>(k));
    const auto rho = spaces::combine(alpha, cuts);
    const double eps = uniform_real(rng, 0.005, 0.495);
    const double kd = static_cast<double>(k);
    const double lhs = spaces::shannon_entropy(spaces::refine(parts)) / kd;
    const double rhs = entropy::eps_entropy_exact(rho, eps).upper_bits / kd +
                       2 * eps * std::log2(static_cast<double>(m)) + binary_entropy(eps) +
                       1 / kd;
    least_margin = std::min(least_margin, rhs - lhs);
    rec.trial();
    if (!(lhs <= rhs)) rec.fail("trial ", t, " eps ", eps, ": ", lhs, " > ", rhs);
  }
  rec.stat("least_margin", least_margin);
  return rec.finish();
}

SuiteResult mnorm_lemma_suite(std::uint64_t seed, std::size_t trials) {
  static constexpr double kEps[] = {0.2, 0.4, 0.6, 0.8, 1.0};
  static constexpr double kLpTolerance = 1e-8;
  Recorder rec("lemma_mnorm");
  Rng rng(seed);
  std::size_t accepted = 0, rejected = 0, strict = 0, equal_above_one = 0;
  const std::size_t max_attempts = 50 * trials;
  for (std::size_t attempt = 0; accepted < trials && attempt < max_attempts; ++attempt) {
    const auto space = random_space(rng, uniform_int<std::size_t>(rng, 2, 8));
    auto draw = [&] {
      return random_cut_combination(rng, space, uniform_int<std::size_t>(rng, 1, 3),
                                    uniform_int<std::size_t>(rng, 2, 5))
          .metric.scaled(uniform_real(rng, 0.5, 1.0));
    };
    const auto first = draw();
    const auto other = draw();
    const double eps = kEps[uniform_int<std::size_t>(rng, 0, std::size(kEps) - 1)];
    const double bound = eps * eps / 32;
    // Mix toward another semimetric; the target distance sometimes overshoots
    // the bound so the hypothesis check is exercised.
    const double spread = spaces::l1_norm(first) + spaces::l1_norm(other);
    const double t =
        spread > 0 ? std::min(1.0, bound * uniform_real(rng, 0.1, 2.0) / spread) : 0.0;
    const std::vector<double> w{1 - t, t};
    const std::vector<Semimetric> pair{first, other};
    const auto second = t > 0 ? spaces::combine(w, pair) : first;
    const double dist = spaces::m_norm(space, spaces::difference(first, second)).value;
    if (!(dist + kLpTolerance < bound)) {
      ++rejected;
      continue;
    }
    const auto k1 = exact_cells(first, eps);
    const auto k2 = exact_cells(second, eps / 4);
    ++accepted;
    rec.trial();
    if (k1 < k2) ++strict;
    if (k1 == k2 && k2 > 1) ++equal_above_one;
    if (!(k1 <= k2))
      rec.fail("attempt ", attempt, " eps ", eps, ": k(eps) = ", k1, " > k(eps/4) = ", k2);
  }
  rec.stat("rejected", static_cast<double>(rejected));
  rec.stat("strict", static_cast<double>(strict));
  rec.stat("equal_above_one", static_cast<double>(equal_above_one));
  auto out = rec.finish();
  if (out.trials < trials) {
    ++out.violations;
    if (out.first_violation.empty())
      out.first_violation = "too few pairs satisfied the m-norm hypothesis";
  }
  return out;
}

SuiteResult averaging_suite(std::uint64_t seed, std::size_t trials) {
  static constexpr double kTolerance = 1e-9;
  Recorder rec("averaging");
  Rng rng(seed);
  const auto sl2_3 = sl2_prime(3);
  for (std::size_t t = 0; t < trials; ++t) {
    algebra::GroupPtr group;
    switch (t % 3) {
      case 0: group = algebra::CyclicGroup::create(uniform_int<std::size_t>(rng, 1, 12)); break;
      case 1:
        group = algebra::ProductGroup::create(
            algebra::CyclicGroup::create(uniform_int<std::size_t>(rng, 2, 4)),
            algebra::CyclicGroup::create(uniform_int<std::size_t>(rng, 2, 4)));
        break;
      default: group = sl2_3;
    }
    const std::size_t fibers = group->order() > 12 ? 1 : uniform_int<std::size_t>(rng, 1, 3);
    const auto action = fibered_action(rng, group, fibers);
    const auto rho = random_cut_combination(rng, action.space(), uniform_int<std::size_t>(rng, 1, 3),
                                            uniform_int<std::size_t>(rng, 2, 4))
                         .metric;

    // A random window F split into blocks.
    std::vector<Element> f;
    for (std::size_t g = 0; g < group->order(); ++g)
      if (uniform_int(rng, 0, 1)) f.push_back(static_cast<Element>(g));
    if (f.empty()) f.push_back(group->identity());
    std::shuffle(f.begin(), f.end(), rng);
    const auto block_count = uniform_int<std::size_t>(rng, 1, std::min<std::size_t>(4, f.size()));
    std::vector<std::vector<Element>> blocks(block_count);
    for (std::size_t i = 0; i < f.size(); ++i)
      blocks[i < block_count ? i : uniform_int<std::size_t>(rng, 0, block_count - 1)].push_back(f[i]);

    rec.trial();
    const auto whole = dynamics::folner_average(action, f, rho);
    std::vector<double> w;
    std::vector<Semimetric> parts;
    for (const auto& b : blocks) {
      w.push_back(static_cast<double>(b.size()) / static_cast<double>(f.size()));
      parts.push_back(dynamics::folner_average(action, b, rho));
    }
    double gap = 0.0;
    for (std::size_t i = 0; i < whole.kernel().values().size(); ++i) {
      double sum = 0.0;
      for (std::size_t l = 0; l < parts.size(); ++l) sum += w[l] * parts[l].kernel().values()[i];
      gap = std::max(gap, std::abs(sum - whole.kernel().values()[i]));
    }
    if (gap > kTolerance) {
      rec.fail("trial ", t, ": block decomposition off by ", gap);
      continue;
    }
    const double l1_gap = std::abs(spaces::l1_norm(whole) - spaces::l1_norm(rho));
    if (l1_gap > kTolerance) {
      rec.fail("trial ", t, ": L1 norm changed by ", l1_gap);
      continue;
    }

    // Blocks covering at least half of F average to at most twice the whole.
    std::vector<Element> sub;
    for (const auto& b : blocks) {
      sub.insert(sub.end(), b.begin(), b.end());
      if (2 * sub.size() >= f.size()) break;
    }
    const auto partial = dynamics::folner_average(action, sub, rho);
    for (std::size_t i = 0; i < partial.kernel().values().size(); ++i)
      if (partial.kernel().values()[i] > 2 * whole.kernel().values()[i] + kTolerance) {
        rec.fail("trial ", t, ": half-mass comparison fails");
        break;
      }

    const auto g = static_cast<Element>(uniform_int<std::size_t>(rng, 0, group->order() - 1));
    const auto h = static_cast<Element>(uniform_int<std::size_t>(rng, 0, group->order() - 1));
    const auto joint = dynamics::translate_semimetric(action, group->mul(g, h), rho);
    const auto nested = dynamics::translate_semimetric(
        action, h, dynamics::translate_semimetric(action, g, rho));
    if (max_gap(joint, nested) > kTolerance) rec.fail("trial ", t, ": translation is not an action");
  }
  return rec.finish();
}

SuiteResult coloring_suite(std::uint64_t seed, std::size_t per_group) {
  Recorder rec("coloring");
  Rng rng(seed);
  auto sample = [&](auto pool, std::size_t lo, std::size_t hi) {
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min(pool.size(), uniform_int(rng, lo, hi)));
    return pool;
  };

  std::vector<long> line, line_k;
  for (long v = -30; v <= 30; ++v) line.push_back(v);
  for (long v = -10; v <= 10; ++v)
    if (v != 0) line_k.push_back(v);
  for (std::size_t t = 0; t < per_group; ++t)
    check_coloring(rec, "Z", constructions::IntegerLine{}, sample(line, 1, 30),
                   sample(line_k, 1, 5));

  using Point = constructions::IntegerPlane::value_type;
  std::vector<Point> plane, plane_k;
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b) {
      plane.push_back({a, b});
      if (std::abs(a) <= 3 && std::abs(b) <= 3 && (a != 0 || b != 0)) plane_k.push_back({a, b});
    }
  for (std::size_t t = 0; t < per_group; ++t)
    check_coloring(rec, "Z^2", constructions::IntegerPlane{}, sample(plane, 1, 40),
                   sample(plane_k, 1, 5));

  const auto sl2_3 = sl2_prime(3);
  const constructions::GroupArithmetic arith{sl2_3.get()};
  std::vector<Element> all, nontrivial;
  for (std::size_t g = 0; g < sl2_3->order(); ++g) {
    all.push_back(static_cast<Element>(g));
    if (static_cast<Element>(g) != sl2_3->identity()) nontrivial.push_back(static_cast<Element>(g));
  }
  for (std::size_t t = 0; t < per_group; ++t)
    check_coloring(rec, "SL(2,3)", arith, sample(all, 1, 24), sample(nontrivial, 1, 5));
  return rec.finish();
}

SuiteResult bernoulli_suite() {
  Recorder rec("bernoulli");
  std::vector<algebra::GroupPtr> groups;
  for (std::size_t n = 1; n <= 10; ++n) groups.push_back(algebra::CyclicGroup::create(n));
  for (auto [a, b] : {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}})
    groups.push_back(algebra::ProductGroup::create(algebra::CyclicGroup::create(a),
                                                   algebra::CyclicGroup::create(b)));
  for (const auto& g : groups) {
    const auto shift = dynamics::bernoulli_shift(g, 2);
    const std::size_t n = g->order();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<Element> p;
      for (std::size_t h = 0; h < n; ++h)
        if (mask >> h & 1) p.push_back(static_cast<Element>(h));
      // The join over the empty set is the trivial partition.
      const double h = spaces::shannon_entropy(
          p.empty() ? Partition::trivial(shift.action.space())
                    : dynamics::refined_orbit_partition(shift.action, p, shift.coordinate));
      rec.trial();
      if (h != static_cast<double>(p.size()))
        rec.fail(g->name(), " subset mask ", mask, ": ", h, " bits for |P| = ", p.size());
    }
  }
  return rec.finish();
}

TripleGrowthReport growth_suite(std::uint64_t seed, const std::vector<std::uint32_t>& primes,
                                std::size_t sets_per_prime) {
  Recorder rec("growth");
  Rng rng(seed);
  TripleGrowthReport report;
  double sxy = 0.0, sxx = 0.0;
  for (std::uint32_t p : primes) {
    const auto group = sl2_prime(p);
    const std::size_t order = group->order();
    for (std::size_t trial = 0; trial < sets_per_prime; ++trial) {
      std::vector<Element> a;
      do {
        std::set<Element> picked;
        const auto size = uniform_int<std::size_t>(rng, 2, 5);
        while (picked.size() < size)
          picked.insert(static_cast<Element>(uniform_int<std::size_t>(rng, 0, order - 1)));
        a.assign(picked.begin(), picked.end());
      } while (algebra::generated_subgroup(*group, a).size() != order);
      const auto tp = algebra::triple_product_size(*group, a);
      TripleGrowthRow row{p, trial, tp.size_a, tp.size_a2, tp.size_a3, tp.size_a3 == order};
      report.rows.push_back(row);
      rec.trial();
      if (row.whole_group) continue;
      if (!(row.size_a3 > row.size_a))
        rec.fail("p ", p, " trial ", trial, ": |A^3| = ", row.size_a3, " <= |A| = ", row.size_a);
      const double x = std::log(static_cast<double>(row.size_a));
      const double y = std::log(static_cast<double>(row.size_a3) / static_cast<double>(row.size_a));
      sxy += x * y;
      sxx += x * x;
    }
  }
  report.exponent = sxx > 0 ? sxy / sxx : 0.0;
  if (!(report.exponent > 0)) rec.fail("fitted exponent ", report.exponent, " is not positive");
  rec.stat("exponent", report.exponent);
  report.suite = rec.finish();
  return report;
}

std::vector<SuiteResult> lemma_suites(std::uint64_t seed) {
  return {lowerbound_lemma_suite(seed), partition_lemma_suite(seed + 1),
          mnorm_lemma_suite(seed + 2)};
}

}  // namespace entlab::verify
