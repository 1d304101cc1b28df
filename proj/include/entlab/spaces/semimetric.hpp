#pragma once

#include <span>
#include <vector>

#include "entlab/spaces/prob_space.hpp"

namespace entlab::spaces {

/// Dense symmetric N x N matrix with zero diagonal. Entries may be negative;
/// this is the domain of the m-norm.
class SymmetricKernel {
 public:
  explicit SymmetricKernel(std::size_t n) : n_(n), d_(n * n, 0.0) {}
  /// Throws InvalidInput unless `values` is N*N, symmetric with zero diagonal.
  SymmetricKernel(std::size_t n, std::vector<double> values);

  std::size_t size() const { return n_; }
  double operator()(Atom x, Atom y) const {
    return d_[static_cast<std::size_t>(x) * n_ + y];
  }
  /// Sets both (x, y) and (y, x).
  void set(Atom x, Atom y, double v) {
    d_[static_cast<std::size_t>(x) * n_ + y] = v;
    d_[static_cast<std::size_t>(y) * n_ + x] = v;
  }
  std::span<const double> values() const { return d_; }
  double max_abs() const;

 private:
  std::size_t n_;
  std::vector<double> d_;
};

/// Semimetric on a finite probability space: symmetric, zero diagonal,
/// non-negative, triangle inequality within 1e-9.
class Semimetric {
 public:
  static constexpr double kTriangleTolerance = 1e-9;

  /// Validates all invariants (O(N^3)); throws InvalidInput on violation.
  Semimetric(SpacePtr space, SymmetricKernel kernel);
  /// Skips the O(N^3) triangle scan; for results that are semimetrics by
  /// construction (averages, convex combinations, cut metrics).
  static Semimetric trusted(SpacePtr space, SymmetricKernel kernel);
  static Semimetric zero(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return kernel_.size(); }
  double operator()(Atom x, Atom y) const { return kernel_(x, y); }
  const SymmetricKernel& kernel() const { return kernel_; }

  /// Largest pairwise distance.
  double diameter() const;
  /// Largest distance within `atoms`.
  double diameter(std::span<const Atom> atoms) const;
  /// Throws InvalidInput describing the first violated invariant.
  void validate() const;
  /// c * rho for c >= 0.
  Semimetric scaled(double c) const;

 private:
  Semimetric(SpacePtr space, SymmetricKernel kernel, bool check);

  SpacePtr space_;
  SymmetricKernel kernel_;
};

/// rho(x, y) = 0 iff x and y share a cell of xi, else 1.
Semimetric cut_semimetric(const Partition& xi);

/// Pointwise sum of weights[i] * metrics[i]. Weights must be positive and sum
/// to 1 within 1e-12; all metrics on the same space.
Semimetric combine(std::span<const double> weights,
                   std::span<const Semimetric> metrics);

struct DyadicSum {
  Semimetric metric;
  /// True iff the partitions jointly separate atoms (so `metric` is a metric).
  bool separates;
};

/// sum_{i=1..r} 2^{-i} cut(xi_i).
DyadicSum dyadic_sum(std::span<const Partition> parts);

/// sum_{x,y} mu(x) mu(y) |f(x, y)|.
double l1_norm(const SpacePtr& space, const SymmetricKernel& f);
double l1_norm(const Semimetric& rho);

/// Pointwise a - b.
SymmetricKernel difference(const Semimetric& a, const Semimetric& b);

}  // namespace entlab::spaces
