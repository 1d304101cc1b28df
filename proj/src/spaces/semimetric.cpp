#include "entlab/spaces/semimetric.hpp"

#include <cmath>
#include <string>

#include "entlab/errors.hpp"

namespace entlab::spaces {

SymmetricKernel::SymmetricKernel(std::size_t n, std::vector<double> values)
    : n_(n), d_(std::move(values)) {
  if (d_.size() != n * n)
    throw InvalidInput("kernel: expected " + std::to_string(n * n) + " entries");
  for (std::size_t x = 0; x < n; ++x) {
    if (d_[x * n + x] != 0.0)
      throw InvalidInput("kernel: non-zero diagonal at atom " + std::to_string(x));
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!std::isfinite(d_[x * n + y]))
        throw InvalidInput("kernel: non-finite entry");
      if (d_[x * n + y] != d_[y * n + x])
        throw InvalidInput("kernel: asymmetric at (" + std::to_string(x) + ", " +
                           std::to_string(y) + ")");
    }
  }
}

double SymmetricKernel::max_abs() const {
  double m = 0.0;
  for (double v : d_) m = std::max(m, std::abs(v));
  return m;
}

Semimetric::Semimetric(SpacePtr space, SymmetricKernel kernel)
    : Semimetric(std::move(space), std::move(kernel), true) {}

Semimetric::Semimetric(SpacePtr space, SymmetricKernel kernel, bool check)
    : space_(std::move(space)), kernel_(std::move(kernel)) {
  if (!space_) throw InvalidInput("semimetric: null space");
  if (kernel_.size() != space_->size())
    throw InvalidInput("semimetric: matrix size does not match atom count");
  if (check) validate();
}

Semimetric Semimetric::trusted(SpacePtr space, SymmetricKernel kernel) {
  return Semimetric(std::move(space), std::move(kernel), false);
}

Semimetric Semimetric::zero(SpacePtr space) {
  const auto n = space->size();
  return trusted(std::move(space), SymmetricKernel(n));
}

void Semimetric::validate() const {
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const double v = kernel_(x, y);
      if (v < 0.0)
        throw InvalidInput("semimetric: negative distance at (" +
                           std::to_string(x) + ", " + std::to_string(y) + ")");
      if (v != kernel_(y, x)) throw InvalidInput("semimetric: asymmetric");
    }
  for (std::size_t x = 0; x < n; ++x) {
    if (kernel_(x, x) != 0.0) throw InvalidInput("semimetric: non-zero diagonal");
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (kernel_(x, z) > kernel_(x, y) + kernel_(y, z) + kTriangleTolerance)
          throw InvalidInput("semimetric: triangle inequality fails at (" +
                             std::to_string(x) + ", " + std::to_string(y) + ", " +
                             std::to_string(z) + ")");
  }
}

double Semimetric::diameter() const {
  double d = 0.0;
  for (double v : kernel_.values()) d = std::max(d, v);
  return d;
}

double Semimetric::diameter(std::span<const Atom> atoms) const {
  double d = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      d = std::max(d, kernel_(atoms[i], atoms[j]));
  return d;
}

Semimetric Semimetric::scaled(double c) const {
  if (!(c >= 0.0)) throw InvalidInput("semimetric: negative scale");
  std::vector<double> v(kernel_.values().begin(), kernel_.values().end());
  for (double& x : v) x *= c;
  return trusted(space_, SymmetricKernel(size(), std::move(v)));
}

Semimetric cut_semimetric(const Partition& xi) {
  const std::size_t n = xi.size();
  SymmetricKernel k(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (xi.cell(x) != xi.cell(y)) k.set(x, y, 1.0);
  return Semimetric::trusted(xi.space(), std::move(k));
}

Semimetric combine(std::span<const double> weights,
                   std::span<const Semimetric> metrics) {
  if (metrics.empty() || weights.size() != metrics.size())
    throw InvalidInput("combine: need one positive weight per metric");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw InvalidInput("combine: weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw InvalidInput("combine: weights sum to " + std::to_string(sum));
  const auto& space = metrics.front().space();
  const std::size_t n = space->size();
  std::vector<double> acc(n * n, 0.0);
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    if (metrics[i].space() != space) throw InvalidInput("combine: mismatched spaces");
    const auto v = metrics[i].kernel().values();
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += weights[i] * v[j];
  }
  return Semimetric::trusted(space, SymmetricKernel(n, std::move(acc)));
}

DyadicSum dyadic_sum(std::span<const Partition> parts) {
  if (parts.empty()) throw InvalidInput("dyadic_sum: no partitions");
  const auto& space = parts.front().space();
  const std::size_t n = space->size();
  std::vector<double> acc(n * n, 0.0);
  double w = 1.0;
  for (const auto& xi : parts) {
    if (xi.space() != space) throw InvalidInput("dyadic_sum: mismatched spaces");
    w *= 0.5;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (xi.cell(x) != xi.cell(y)) acc[x * n + y] += w;
  }
  bool separates = true;
  for (std::size_t x = 0; x < n && separates; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (acc[x * n + y] == 0.0) {
        separates = false;
        break;
      }
  return {Semimetric::trusted(space, SymmetricKernel(n, std::move(acc))),
          separates};
}

double l1_norm(const SpacePtr& space, const SymmetricKernel& f) {
  if (f.size() != space->size())
    throw InvalidInput("l1_norm: kernel size does not match atom count");
  const std::size_t n = f.size();
  double s = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    double row = 0.0;
    for (std::size_t y = 0; y < n; ++y) row += space->mass(y) * std::abs(f(x, y));
    s += space->mass(x) * row;
  }
  return s;
}

double l1_norm(const Semimetric& rho) { return l1_norm(rho.space(), rho.kernel()); }

SymmetricKernel difference(const Semimetric& a, const Semimetric& b) {
  if (a.space() != b.space()) throw InvalidInput("difference: mismatched spaces");
  std::vector<double> v(a.kernel().values().begin(), a.kernel().values().end());
  const auto w = b.kernel().values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
  return SymmetricKernel(a.size(), std::move(v));
}

}  // namespace entlab::spaces
