#include "entlab/dynamics/growth_compare.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "entlab/errors.hpp"

namespace entlab::dynamics {

namespace {

double ratio(double a, double b) {
  if (b == 0.0) return a == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return a / b;
}

}  // namespace

GrowthReport growth_compare(const std::vector<ProfilePoint>& a,
                            const std::vector<ProfilePoint>& b) {
  std::map<double, std::map<std::size_t, double>> by_eps_a, by_eps_b;
  for (const auto& p : a) by_eps_a[p.eps][p.n] = p.value;
  for (const auto& p : b) by_eps_b[p.eps][p.n] = p.value;

  GrowthReport report;
  bool shared = false;
  for (const auto& [ea, va] : by_eps_a) {
    PairSummary best{ea, 0.0, std::numeric_limits<double>::infinity()};
    bool matched = false;
    for (const auto& [eb, vb] : by_eps_b) {
      PairSummary s{ea, eb, 0.0};
      bool any = false;
      for (const auto& [n, x] : va) {
        const auto it = vb.find(n);
        if (it == vb.end()) continue;
        const double r = ratio(x, it->second);
        report.ratios.push_back({ea, eb, n, r});
        s.max_ratio = any ? std::max(s.max_ratio, r) : r;
        any = true;
      }
      if (!any) continue;
      shared = true;
      report.summary.push_back(s);
      if (!matched || s.max_ratio < best.max_ratio) best = s;
      matched = true;
    }
    if (matched) report.best_per_eps.push_back(best);
  }
  if (!shared) throw InvalidInput("growth_compare: profiles share no n");
  return report;
}

}  // namespace entlab::dynamics
