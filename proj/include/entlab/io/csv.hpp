#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "entlab/constructions/experiments.hpp"
#include "entlab/dynamics/averaging.hpp"
#include "entlab/dynamics/sequential.hpp"
#include "entlab/entropy/eps_entropy.hpp"
#include "entlab/verify/suites.hpp"

namespace entlab::io {

const char* version();

/// Shortest text that reads back to the same double ("%.17g"); infinities as
/// "inf" / "-inf".
std::string format_double(double v);

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

/// "# entlab <version> <command> key=value ..." with keys in the given order.
std::string comment_line(const std::string& command, const ConfigEcho& config);

// Every writer emits `comment` (when non-empty) followed by a header row.

/// Columns: atom, mass, then one distance column per atom.
void write_semimetric(std::ostream& out, const std::string& comment,
                      const spaces::Semimetric& rho);
/// Reads the format written above; masses are renormalized only through
/// FiniteProbSpace::from_masses. Lines starting with '#' are skipped.
spaces::Semimetric read_semimetric(std::istream& in);

/// Columns: atom, cell.
void write_partition(std::ostream& out, const std::string& comment,
                     const spaces::Partition& xi);
spaces::Partition read_partition(std::istream& in, const spaces::SpacePtr& space);

/// Columns: atom, cell; cell 0 is the exceptional set, cells 1..k the rest.
void write_witness(std::ostream& out, const std::string& comment,
                   const entropy::Decomposition& d, std::size_t atoms);

/// Columns: epsilon, lower_bits, upper_bits, lower_cells, upper_cells, exact_flag.
void write_entropy(std::ostream& out, const std::string& comment,
                   const std::vector<entropy::EpsEntropyResult>& rows);

/// Columns: n, |F_n|, epsilon, lower_bits, upper_bits, exact_flag.
void write_profile(std::ostream& out, const std::string& comment,
                   const std::vector<dynamics::PhiRow>& rows);

/// Columns: n, |F_n|, blocks, functional; `sets` gives |F_n|.
void write_sequential(std::ostream& out, const std::string& comment,
                      const std::vector<dynamics::SequentialRow>& rows,
                      const std::vector<std::vector<algebra::Element>>& sets);

/// Columns: q, recipe, epsilon, diam, lower_bits, upper_bits, log2_q.
void write_claim52(std::ostream& out, const std::string& comment,
                   const std::vector<constructions::Claim52Row>& rows);

/// Columns: p, n, order_Gn, epsilon, lower_bits, upper_bits, log2_order, log2_qn.
void write_gap(std::ostream& out, const std::string& comment,
               const std::vector<constructions::GapRow>& rows);

/// Columns: p, trial, size_A, size_A2, size_A3, whole_group.
void write_growth(std::ostream& out, const std::string& comment,
                  const std::vector<verify::TripleGrowthRow>& rows);

/// Columns: suite, trials, violations, status, first_violation. Timings are
/// left out so reruns compare byte for byte.
void write_suites(std::ostream& out, const std::string& comment,
                  const std::vector<verify::SuiteResult>& rows);

/// Writes `body` to `path`, creating parent directories; throws
/// std::runtime_error when the file cannot be written.
void write_file(const std::string& path, const std::string& body);

}  // namespace entlab::io
