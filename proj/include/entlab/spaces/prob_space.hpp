#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace entlab::spaces {

/// Atom index.
using Atom = std::int32_t;

/// Exact form of the strict test "mass(S) < eps": the sum of `weights` over S
/// must be <= limit (inclusive) or < limit (otherwise). In exact mode the
/// weights are integers and the test has no rounding.
struct MassBudget {
  std::vector<double> weights;
  double limit = 0.0;
  bool inclusive = false;

  bool fits(double weight_sum) const {
    return inclusive ? weight_sum <= limit : weight_sum < limit;
  }
};

/// Finite probability space on atoms 0..N-1.
///
/// Built either from integer weights (exact mode: mass_i = w_i / sum w, and
/// mass comparisons against a threshold are done in integers) or from real
/// masses summing to 1 within 1e-12.
class FiniteProbSpace {
 public:
  static std::shared_ptr<const FiniteProbSpace> uniform(std::size_t n);
  static std::shared_ptr<const FiniteProbSpace> from_weights(
      std::vector<std::uint64_t> weights);
  static std::shared_ptr<const FiniteProbSpace> from_masses(
      std::vector<double> masses);

  std::size_t size() const { return masses_.size(); }
  double mass(Atom a) const { return masses_[a]; }
  std::span<const double> masses() const { return masses_; }
  bool exact() const { return weights_.has_value(); }
  const std::optional<std::vector<std::uint64_t>>& weights() const {
    return weights_;
  }
  std::uint64_t total_weight() const { return total_weight_; }
  bool uniform_masses() const { return uniform_; }

  double mass_of(std::span<const Atom> atoms) const;
  /// mass(atoms) < eps, exactly in exact mode.
  bool mass_below(std::span<const Atom> atoms, double eps) const;
  MassBudget budget_below(double eps) const;

 private:
  FiniteProbSpace() = default;

  std::vector<double> masses_;
  std::optional<std::vector<std::uint64_t>> weights_;
  std::uint64_t total_weight_ = 0;
  bool uniform_ = false;
};

using SpacePtr = std::shared_ptr<const FiniteProbSpace>;

/// A partition given by a cell label per atom. Labels are canonicalized to
/// 0..m-1 in order of first appearance.
class Partition {
 public:
  Partition(SpacePtr space, std::vector<std::int32_t> labels);

  static Partition trivial(SpacePtr space);
  static Partition singletons(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t cell_count() const { return cells_; }
  std::int32_t cell(Atom a) const { return labels_[a]; }
  std::span<const std::int32_t> labels() const { return labels_; }
  std::vector<double> cell_masses() const;
  std::vector<std::vector<Atom>> cells() const;

  bool operator==(const Partition& o) const {
    return space_ == o.space_ && labels_ == o.labels_;
  }

 private:
  SpacePtr space_;
  std::vector<std::int32_t> labels_;
  std::size_t cells_ = 0;
};

/// Shannon entropy in bits, with 0 log 0 = 0.
double shannon_entropy(const Partition& xi);

/// Common refinement; cells are the non-empty intersections. Throws
/// InvalidInput for an empty list or mismatched spaces.
Partition refine(std::span<const Partition> parts);
Partition refine(const Partition& a, const Partition& b);

}  // namespace entlab::spaces
