#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "entlab/algebra/sl2.hpp"
#include "entlab/constructions/coloring.hpp"
#include "entlab/constructions/experiments.hpp"
#include "entlab/constructions/tower.hpp"
#include "entlab/dynamics/sequential.hpp"
#include "entlab/errors.hpp"
#include "entlab/io/csv.hpp"
#include "entlab/verify/generators.hpp"
#include "entlab/verify/suites.hpp"

namespace entlab::cli {

namespace {

using Values = std::map<std::string, std::string>;

constexpr const char* kNodeLimit = "5000000";

const std::map<std::string, Values>& command_defaults() {
  static const std::map<std::string, Values> table = {
      {"entropy",
       {{"metric", ""}, {"atoms", "10"}, {"cuts", "3"}, {"cells", "3"},
        {"eps", "0.1,0.25,0.5"}, {"node_limit", kNodeLimit}}},
      {"average",
       {{"group", "cyclic:12"}, {"cells", "2"}, {"horizon", "6"}, {"eps", "0.1,0.25"},
        {"node_limit", kNodeLimit}}},
      {"tower-gap",
       {{"mode", "levels"}, {"p", "3"}, {"depth", "2"}, {"eps", "0.05,0.1,0.25"},
        {"qs", "3,5,7,9"}, {"transversal_eps", "0.25"}, {"node_limit", kNodeLimit}}},
      {"claim52",
       {{"qs", "3,5,7,9"}, {"eps", "0.25"}, {"recipe", "word"}, {"node_limit", kNodeLimit}}},
      {"growth", {{"primes", "3,5,7"}, {"sets", "20"}}},
      {"coloring", {{"windows", "50"}}},
      {"verify-lemmas", {{"suites", "lemmas"}}},
  };
  return table;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

std::uint64_t parse_uint(const std::string& key, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const auto v = std::strtoull(text.c_str(), &end, 10);
  if (text.empty() || text[0] == '-' || *end != '\0' || errno != 0)
    throw InvalidInput(key + ": expected a non-negative integer, got '" + text + "'");
  return v;
}

double parse_real(const std::string& key, const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0' || !std::isfinite(v))
    throw InvalidInput(key + ": expected a number, got '" + text + "'");
  return v;
}

struct Settings {
  std::string command;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::size_t cap_atoms = 24;
  std::string out = "out";
  Values values;

  void set(const std::string& assignment, const std::string& origin) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
      throw InvalidInput(origin + ": expected key=value, got '" + assignment + "'");
    const auto key = trim(assignment.substr(0, eq));
    if (!values.count(key))
      throw InvalidInput(origin + ": unknown key '" + key + "' for " + command);
    values[key] = trim(assignment.substr(eq + 1));
  }

  void load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read config " + path);
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
      line = trim(line.substr(0, line.find('#')));
      if (!line.empty()) set(line, path + ":" + std::to_string(lineno));
    }
  }

  const std::string& text(const std::string& key) const { return values.at(key); }

  std::uint64_t count(const std::string& key) const {
    const auto v = parse_uint(key, text(key));
    if (v == 0) throw InvalidInput(key + " must be positive");
    return v;
  }

  double epsilon(const std::string& key, const std::string& item) const {
    const double e = parse_real(key, item);
    if (!(e > 0.0 && e <= 1.0)) throw InvalidInput(key + ": epsilon " + item + " not in (0, 1]");
    return e;
  }

  std::vector<double> eps_list(const std::string& key) const {
    std::vector<double> out;
    for (const auto& item : split(text(key))) out.push_back(epsilon(key, item));
    if (out.empty()) throw InvalidInput(key + ": empty list");
    return out;
  }

  std::vector<std::uint64_t> uint_list(const std::string& key) const {
    std::vector<std::uint64_t> out;
    for (const auto& item : split(text(key))) out.push_back(parse_uint(key, item));
    if (out.empty()) throw InvalidInput(key + ": empty list");
    return out;
  }

  entropy::ExactOptions exact() const { return {cap_atoms, count("node_limit")}; }

  std::string comment() const {
    io::ConfigEcho echo{{"seed", std::to_string(seed)}, {"cap_atoms", std::to_string(cap_atoms)}};
    for (const auto& [k, v] : values) echo.emplace_back(k, v);
    return io::comment_line(command, echo);
  }

  template <class Writer>
  void emit(const std::string& file, Writer&& writer) const {
    std::ostringstream os;
    writer(os, comment());
    const auto path = (std::filesystem::path(out) / file).string();
    io::write_file(path, os.str());
    std::cout << "wrote " << path << "\n";
  }
};

std::string bracket(double lo, double hi) {
  if (lo == hi) return io::format_double(lo);
  return "[" + io::format_double(lo) + ", " + io::format_double(hi) + "]";
}

void print_suite(const verify::SuiteResult& r) {
  char line[160];
  std::snprintf(line, sizeof line, "%-18s %6zu trials %4zu violations %9.2fs  %s", r.name.c_str(),
                r.trials, r.violations, r.seconds, r.passed() ? "PASS" : "FAIL");
  std::cout << line << "\n";
  for (const auto& [k, v] : r.stats) std::cout << "    " << k << " = " << io::format_double(v) << "\n";
  if (!r.first_violation.empty()) std::cout << "    first violation: " << r.first_violation << "\n";
}

// --- commands ---

int cmd_entropy(const Settings& s) {
  const auto eps_grid = s.eps_list("eps");
  std::optional<spaces::Semimetric> rho;
  if (!s.text("metric").empty()) {
    std::ifstream in(s.text("metric"));
    if (!in) throw InvalidInput("cannot read metric " + s.text("metric"));
    rho = io::read_semimetric(in);
  } else {
    verify::Rng rng(s.seed);
    const auto space = verify::random_space(rng, s.count("atoms"));
    rho = verify::random_cut_combination(rng, space, s.count("cuts"), s.count("cells")).metric;
    s.emit("metric.csv", [&](std::ostream& os, const std::string& c) {
      io::write_semimetric(os, c, *rho);
    });
  }
  std::vector<entropy::EpsEntropyResult> rows;
  for (double eps : eps_grid) {
    rows.push_back(entropy::eps_entropy(*rho, eps, s.exact()));
    std::cout << "eps " << io::format_double(eps) << ": H = "
              << bracket(rows.back().lower_bits, rows.back().upper_bits) << " bits"
              << (rows.back().exact ? " (exact)" : "") << "\n";
  }
  s.emit("entropy.csv", [&](std::ostream& os, const std::string& c) {
    io::write_entropy(os, c, rows);
  });
  for (const auto& r : rows)
    if (r.exact && r.witness) {
      s.emit("witness.csv", [&](std::ostream& os, const std::string& c) {
        io::write_witness(os, c + " witness_eps=" + io::format_double(r.eps), *r.witness,
                          rho->size());
      });
      break;
    }
  return kOk;
}

struct NamedGroup {
  algebra::GroupPtr group;
  std::vector<algebra::Element> generators;
};

NamedGroup parse_group(const std::string& spec) {
  const auto colon = spec.find(':');
  const auto kind = spec.substr(0, colon);
  if (colon == std::string::npos) throw InvalidInput("group: expected cyclic:N or sl2:q");
  const auto arg = parse_uint("group", spec.substr(colon + 1));
  if (kind == "cyclic") {
    if (arg == 0) throw InvalidInput("group: cyclic order must be positive");
    return {algebra::CyclicGroup::create(arg), {arg > 1 ? 1 : 0}};
  }
  if (kind == "sl2") {
    const auto [p, n] = constructions::tower_coordinates(arg);
    auto field = algebra::FieldTower::create(p, static_cast<int>(n) - 1);
    auto g = algebra::Sl2Group::create(field, static_cast<int>(n) - 1,
                                       constructions::kTowerMetricBudget);
    auto gens = g->standard_generators();
    return {std::move(g), std::move(gens)};
  }
  throw InvalidInput("group: unknown kind '" + kind + "'");
}

int cmd_average(const Settings& s) {
  const auto [group, gens] = parse_group(s.text("group"));
  const auto action = dynamics::ActionTable::left_translation(group);
  verify::Rng rng(s.seed);
  const auto xi = verify::random_partition(rng, action.space(), s.count("cells"));
  const auto rho = spaces::cut_semimetric(xi);

  // Word-metric balls around the identity; each is split into blocks whose
  // quotients avoid the symmetric generating set.
  std::vector<algebra::Element> forbidden;
  for (auto g : gens)
    for (auto h : {g, group->inv(g)})
      if (h != group->identity()) forbidden.push_back(h);
  const std::size_t horizon = s.count("horizon");
  std::vector<char> seen(group->order(), 0);
  std::vector<algebra::Element> ball{group->identity()}, frontier = ball;
  seen[group->identity()] = 1;
  std::vector<std::vector<algebra::Element>> sets;
  std::vector<std::vector<std::vector<algebra::Element>>> blocks;
  const constructions::GroupArithmetic arith{group.get()};
  for (std::size_t r = 1; r <= horizon; ++r) {
    std::vector<algebra::Element> next;
    for (auto x : frontier)
      for (auto step : forbidden) {
        const auto y = group->mul(x, step);
        if (!seen[y]) {
          seen[y] = 1;
          next.push_back(y);
        }
      }
    ball.insert(ball.end(), next.begin(), next.end());
    frontier = std::move(next);
    std::vector<algebra::Element> sorted = ball;
    std::sort(sorted.begin(), sorted.end());
    blocks.push_back(constructions::separated_family(
                         arith, std::span<const algebra::Element>(sorted),
                         std::span<const algebra::Element>(forbidden))
                         .blocks);
    sets.push_back(std::move(sorted));
  }
  const dynamics::FolnerFamily family(group, sets, blocks);
  const auto eps = s.eps_list("eps");
  const auto profile =
      dynamics::phi_profile(action, family, rho, horizon, eps, s.exact(), s.workers);
  for (const auto& r : profile)
    std::cout << "n " << r.n << " |F_n| " << r.set_size << " eps "
              << io::format_double(r.result.eps) << ": Phi = "
              << bracket(r.result.lower_bits, r.result.upper_bits) << "\n";
  s.emit("profile.csv", [&](std::ostream& os, const std::string& c) {
    io::write_profile(os, c, profile);
  });
  const auto seq = dynamics::sequential_entropy_profile(action, xi, family, horizon);
  s.emit("sequential.csv", [&](std::ostream& os, const std::string& c) {
    io::write_sequential(os, c, seq, sets);
  });
  return kOk;
}

int cmd_tower_gap(const Settings& s) {
  const auto& mode = s.text("mode");
  if (mode != "levels" && mode != "transversal" && mode != "both")
    throw InvalidInput("mode must be levels, transversal or both");
  if (mode != "transversal") {
    const auto p = s.count("p");
    if (p > 0xffffffffULL) throw InvalidInput("p is too large");
    const auto report = constructions::gap_experiment(static_cast<std::uint32_t>(p),
                                                      s.count("depth"), s.eps_list("eps"),
                                                      s.exact(), s.workers);
    for (const auto& r : report.phi)
      std::cout << "n " << r.n << " |G_n| " << r.order << " eps " << io::format_double(r.eps)
                << ": Phi = " << bracket(r.lower_bits, r.upper_bits)
                << " <= log2|G_n| = " << io::format_double(r.log2_order) << "\n";
    s.emit("gap.csv", [&](std::ostream& os, const std::string& c) {
      io::write_gap(os, c, report.phi);
    });
    s.emit("gap_transversal.csv", [&](std::ostream& os, const std::string& c) {
      io::write_gap(os, c, report.transversal);
    });
  }
  if (mode != "levels") {
    const auto rows = constructions::transversal_experiment(
        s.uint_list("qs"), s.epsilon("transversal_eps", s.text("transversal_eps")), s.exact(),
        s.workers);
    double c_emp = std::numeric_limits<double>::infinity();
    for (const auto& r : rows) {
      c_emp = std::min(c_emp, r.lower_bits / r.log2_qn);
      std::cout << "q " << std::llround(std::exp2(r.log2_qn)) << " |G| " << r.order
                << ": H_{eps^2} = " << bracket(r.lower_bits, r.upper_bits) << "\n";
    }
    std::cout << "c_emp = min H / log2 q = " << io::format_double(c_emp) << "\n";
    s.emit("transversal.csv", [&](std::ostream& os, const std::string& c) {
      io::write_gap(os, c, rows);
    });
  }
  return kOk;
}

int cmd_claim52(const Settings& s) {
  const auto report = constructions::claim52_experiment(
      s.uint_list("qs"), s.epsilon("eps", s.text("eps")),
      constructions::parse_recipe(s.text("recipe")), s.seed, s.exact(), s.workers);
  for (const auto& r : report.rows)
    std::cout << "q " << r.q << ": H = " << bracket(r.lower_bits, r.upper_bits)
              << (r.hypothesis_ok ? "" : "  (diam <= 3 eps, excluded)") << "\n";
  std::cout << "c_emp = " << io::format_double(report.c_emp) << "\n";
  s.emit("claim52.csv", [&](std::ostream& os, const std::string& c) {
    io::write_claim52(os, c, report.rows);
  });
  return kOk;
}

int cmd_growth(const Settings& s) {
  std::vector<std::uint32_t> primes;
  for (auto p : s.uint_list("primes")) {
    if (p > 0xffffffffULL) throw InvalidInput("primes: value too large");
    primes.push_back(static_cast<std::uint32_t>(p));
  }
  const auto report = verify::growth_suite(s.seed, primes, s.count("sets"));
  print_suite(report.suite);
  std::cout << "fitted exponent = " << io::format_double(report.exponent) << "\n";
  s.emit("growth.csv", [&](std::ostream& os, const std::string& c) {
    io::write_growth(os, c, report.rows);
  });
  return kOk;
}

int cmd_coloring(const Settings& s) {
  const auto r = verify::coloring_suite(s.seed, s.count("windows"));
  print_suite(r);
  s.emit("coloring.csv", [&](std::ostream& os, const std::string& c) {
    io::write_suites(os, c, {r});
  });
  return kOk;
}

int cmd_verify(const Settings& s) {
  const auto& which = s.text("suites");
  if (which != "lemmas" && which != "all") throw InvalidInput("suites must be lemmas or all");
  auto results = verify::lemma_suites(s.seed);
  if (which == "all") {
    results.push_back(verify::sandwich_suite(s.seed + 3));
    results.push_back(verify::averaging_suite(s.seed + 4));
    results.push_back(verify::coloring_suite(s.seed + 5));
    results.push_back(verify::bernoulli_suite());
    results.push_back(verify::growth_suite(s.seed + 6, {3, 5, 7}).suite);
  }
  bool ok = true;
  for (const auto& r : results) {
    print_suite(r);
    ok = ok && r.passed();
  }
  s.emit("lemmas.csv", [&](std::ostream& os, const std::string& c) {
    io::write_suites(os, c, results);
  });
  return ok ? kOk : kSuiteFailure;
}

int dispatch(const Settings& s) {
  if (s.command == "entropy") return cmd_entropy(s);
  if (s.command == "average") return cmd_average(s);
  if (s.command == "tower-gap") return cmd_tower_gap(s);
  if (s.command == "claim52") return cmd_claim52(s);
  if (s.command == "growth") return cmd_growth(s);
  if (s.command == "coloring") return cmd_coloring(s);
  return cmd_verify(s);
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Epsilon-entropy and scaling-entropy experiments on finite models", "entlab"};
  app.set_version_flag("--version", io::version());
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  std::string config_path;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "Flat key=value config file");
  app.add_option("--seed", s.seed, "Random seed")->capture_default_str();
  app.add_option("--workers", s.workers, "Worker threads")->capture_default_str();
  app.add_option("--out", s.out, "Output directory")->capture_default_str();
  app.add_option("--cap-atoms", s.cap_atoms, "Largest space solved exactly")
      ->capture_default_str();
  app.add_option("--set", overrides, "Override a config key (key=value), repeatable")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  const std::map<std::string, std::string> blurbs = {
      {"entropy", "eps-entropy of a semimetric CSV or a random cut-metric combination"},
      {"average", "Folner-averaged entropy profile of a group acting on itself"},
      {"tower-gap", "SL(2) tower: per-level profile and transversal lower bound"},
      {"claim52", "eps-entropy of left-invariant semimetrics on SL(2, q)"},
      {"growth", "triple-product growth of random generating sets of SL(2, p)"},
      {"coloring", "separated families from difference-graph colorings"},
      {"verify-lemmas", "randomized lemma suites with a pass/fail table"},
  };
  for (const auto& [name, blurb] : blurbs) app.add_subcommand(name, blurb);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidConfig;
  }

  try {
    s.command = app.get_subcommands().front()->get_name();
    s.values = command_defaults().at(s.command);
    if (s.workers == 0) throw InvalidInput("--workers must be positive");
    if (s.cap_atoms == 0) throw InvalidInput("--cap-atoms must be positive");
    if (!config_path.empty()) s.load(config_path);
    for (const auto& o : overrides) s.set(o, "--set");
    return dispatch(s);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace entlab::cli
