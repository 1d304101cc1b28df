#include "entlab/io/csv.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "entlab/errors.hpp"

namespace entlab::io {

namespace {

void begin(std::ostream& out, const std::string& comment, const char* header) {
  if (!comment.empty()) out << comment << '\n';
  out << header << '\n';
}

const char* flag(bool b) { return b ? "1" : "0"; }

// Splits non-comment, non-empty lines into comma-separated fields.
std::vector<std::vector<std::string>> read_rows(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    rows.push_back(std::move(fields));
  }
  return rows;
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0') throw InvalidInput("csv: not a number: '" + s + "'");
  return v;
}

long parse_long(const std::string& s) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0') throw InvalidInput("csv: not an integer: '" + s + "'");
  return v;
}

}  // namespace

const char* version() { return ENTLAB_VERSION; }

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string comment_line(const std::string& command, const ConfigEcho& config) {
  std::string s = std::string("# entlab ") + version() + " " + command;
  for (const auto& [k, v] : config) s += " " + k + "=" + v;
  return s;
}

void write_semimetric(std::ostream& out, const std::string& comment,
                      const spaces::Semimetric& rho) {
  if (!comment.empty()) out << comment << '\n';
  const std::size_t n = rho.size();
  out << "atom,mass";
  for (std::size_t y = 0; y < n; ++y) out << ",d" << y;
  out << '\n';
  for (std::size_t x = 0; x < n; ++x) {
    out << x << ',' << format_double(rho.space()->mass(static_cast<spaces::Atom>(x)));
    for (std::size_t y = 0; y < n; ++y)
      out << ',' << format_double(rho(static_cast<spaces::Atom>(x), static_cast<spaces::Atom>(y)));
    out << '\n';
  }
}

spaces::Semimetric read_semimetric(std::istream& in) {
  auto rows = read_rows(in);
  if (rows.empty()) throw InvalidInput("semimetric csv: missing header");
  const std::size_t n = rows.size() - 1;
  if (rows[0].size() != n + 2 || rows[0][0] != "atom" || rows[0][1] != "mass")
    throw InvalidInput("semimetric csv: header must be atom,mass,d0..d" + std::to_string(n));
  std::vector<double> masses(n), values(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& r = rows[x + 1];
    if (r.size() != n + 2 || parse_long(r[0]) != static_cast<long>(x))
      throw InvalidInput("semimetric csv: row " + std::to_string(x) + " is malformed");
    masses[x] = parse_double(r[1]);
    for (std::size_t y = 0; y < n; ++y) values[x * n + y] = parse_double(r[y + 2]);
  }
  auto space = spaces::FiniteProbSpace::from_masses(std::move(masses));
  return spaces::Semimetric(std::move(space), spaces::SymmetricKernel(n, std::move(values)));
}

void write_partition(std::ostream& out, const std::string& comment,
                     const spaces::Partition& xi) {
  begin(out, comment, "atom,cell");
  for (std::size_t x = 0; x < xi.size(); ++x)
    out << x << ',' << xi.cell(static_cast<spaces::Atom>(x)) << '\n';
}

spaces::Partition read_partition(std::istream& in, const spaces::SpacePtr& space) {
  auto rows = read_rows(in);
  if (rows.empty() || rows[0] != std::vector<std::string>{"atom", "cell"})
    throw InvalidInput("partition csv: header must be atom,cell");
  if (rows.size() - 1 != space->size())
    throw InvalidInput("partition csv: expected " + std::to_string(space->size()) + " rows");
  std::vector<std::int32_t> labels(space->size());
  for (std::size_t x = 0; x < labels.size(); ++x) {
    const auto& r = rows[x + 1];
    if (r.size() != 2 || parse_long(r[0]) != static_cast<long>(x))
      throw InvalidInput("partition csv: row " + std::to_string(x) + " is malformed");
    labels[x] = static_cast<std::int32_t>(parse_long(r[1]));
  }
  return spaces::Partition(space, std::move(labels));
}

void write_witness(std::ostream& out, const std::string& comment,
                   const entropy::Decomposition& d, std::size_t atoms) {
  begin(out, comment, "atom,cell");
  const auto labels = d.labels(atoms);
  for (std::size_t x = 0; x < atoms; ++x) out << x << ',' << labels[x] << '\n';
}

void write_entropy(std::ostream& out, const std::string& comment,
                   const std::vector<entropy::EpsEntropyResult>& rows) {
  begin(out, comment, "epsilon,lower_bits,upper_bits,lower_cells,upper_cells,exact_flag");
  for (const auto& r : rows)
    out << format_double(r.eps) << ',' << format_double(r.lower_bits) << ','
        << format_double(r.upper_bits) << ',' << r.lower_cells << ',' << r.upper_cells << ','
        << flag(r.exact) << '\n';
}

void write_profile(std::ostream& out, const std::string& comment,
                   const std::vector<dynamics::PhiRow>& rows) {
  begin(out, comment, "n,|F_n|,epsilon,lower_bits,upper_bits,exact_flag");
  for (const auto& r : rows)
    out << r.n << ',' << r.set_size << ',' << format_double(r.result.eps) << ','
        << format_double(r.result.lower_bits) << ',' << format_double(r.result.upper_bits) << ','
        << flag(r.result.exact) << '\n';
}

void write_sequential(std::ostream& out, const std::string& comment,
                      const std::vector<dynamics::SequentialRow>& rows,
                      const std::vector<std::vector<algebra::Element>>& sets) {
  begin(out, comment, "n,|F_n|,blocks,functional");
  for (const auto& r : rows)
    out << r.n << ',' << sets.at(r.n - 1).size() << ',' << r.per_block.size() << ','
        << format_double(r.functional) << '\n';
}

void write_claim52(std::ostream& out, const std::string& comment,
                   const std::vector<constructions::Claim52Row>& rows) {
  begin(out, comment, "q,recipe,epsilon,diam,lower_bits,upper_bits,log2_q");
  for (const auto& r : rows)
    out << r.q << ',' << constructions::recipe_name(r.recipe) << ',' << format_double(r.eps)
        << ',' << format_double(r.diam) << ',' << format_double(r.lower_bits) << ','
        << format_double(r.upper_bits) << ',' << format_double(r.log2_q) << '\n';
}

void write_gap(std::ostream& out, const std::string& comment,
               const std::vector<constructions::GapRow>& rows) {
  begin(out, comment, "p,n,order_Gn,epsilon,lower_bits,upper_bits,log2_order,log2_qn");
  for (const auto& r : rows)
    out << r.p << ',' << r.n << ',' << r.order << ',' << format_double(r.eps) << ','
        << format_double(r.lower_bits) << ',' << format_double(r.upper_bits) << ','
        << format_double(r.log2_order) << ',' << format_double(r.log2_qn) << '\n';
}

void write_growth(std::ostream& out, const std::string& comment,
                  const std::vector<verify::TripleGrowthRow>& rows) {
  begin(out, comment, "p,trial,size_A,size_A2,size_A3,whole_group");
  for (const auto& r : rows)
    out << r.p << ',' << r.trial << ',' << r.size_a << ',' << r.size_a2 << ',' << r.size_a3
        << ',' << flag(r.whole_group) << '\n';
}

void write_suites(std::ostream& out, const std::string& comment,
                  const std::vector<verify::SuiteResult>& rows) {
  begin(out, comment, "suite,trials,violations,status,first_violation");
  for (const auto& r : rows) {
    std::string why = r.first_violation;
    for (char& c : why)
      if (c == ',' || c == '\n') c = ';';
    out << r.name << ',' << r.trials << ',' << r.violations << ','
         << (r.passed() ? "PASS" : "FAIL") << ',' << why << '\n';
  }
}

void write_file(const std::string& path, const std::string& body) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << body;
  if (!f) throw std::runtime_error("failed writing " + path);
}

}  // namespace entlab::io
