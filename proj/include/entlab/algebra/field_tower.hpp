#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace entlab::algebra {

/// Packed field value: the coefficient vector (c_0, ..., c_{2^k - 1}) over F_p
/// stored as sum c_i p^i. Level k-1 values are the level-k values below
/// q_{k-1}, so embedding up the tower does not change the packed value.
using FieldValue = std::uint64_t;

/// Iterated quadratic extensions F_p = L_0 < L_1 < ... < L_depth with
/// |L_k| = p^(2^k). L_k = L_{k-1}[t] / (t^2 - s_k) where s_k is the first
/// non-square of L_{k-1} in canonical (packed-value) order.
///
/// A level-k value x = a + b t is packed as a + b * |L_{k-1}|.
class FieldTower {
 public:
  /// Throws InvalidInput for p = 2, composite p, or orders that do not fit in
  /// 32 bits.
  static std::shared_ptr<const FieldTower> create(std::uint32_t p, int depth);

  std::uint32_t characteristic() const { return p_; }
  int depth() const { return static_cast<int>(orders_.size()) - 1; }
  /// |L_level| = p^(2^level).
  std::uint64_t order(int level) const;
  /// Number of F_p coefficients of a level element, 2^level.
  std::size_t degree(int level) const { return std::size_t{1} << level; }
  /// The non-square s_level of L_{level-1} adjoined at this level (level >= 1).
  FieldValue extension_constant(int level) const;

  FieldValue add(int level, FieldValue a, FieldValue b) const;
  FieldValue neg(int level, FieldValue a) const;
  FieldValue sub(int level, FieldValue a, FieldValue b) const;
  FieldValue mul(int level, FieldValue a, FieldValue b) const;
  /// Throws InvalidInput for a = 0.
  FieldValue inv(int level, FieldValue a) const;
  FieldValue pow(int level, FieldValue a, std::uint64_t e) const;
  bool is_square(int level, FieldValue a) const;

  std::vector<std::uint32_t> coefficients(int level, FieldValue a) const;
  FieldValue from_coefficients(int level,
                               const std::vector<std::uint32_t>& coeffs) const;

 private:
  struct Tables {
    std::vector<std::uint32_t> add, mul, neg, inv;
  };

  FieldTower(std::uint32_t p, int depth);

  FieldValue mul_raw(int level, FieldValue a, FieldValue b) const;
  FieldValue add_raw(int level, FieldValue a, FieldValue b) const;
  FieldValue neg_raw(int level, FieldValue a) const;
  FieldValue inv_raw(int level, FieldValue a) const;
  void check(int level, FieldValue a) const;

  std::uint32_t p_;
  std::vector<std::uint64_t> orders_;
  std::vector<FieldValue> nonsquares_;  // nonsquares_[k] used to build level k
  std::vector<Tables> tables_;          // empty Tables for levels too large
};

/// A value of a tower field together with its level.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const FieldTower> tower, int level,
               FieldValue value);

  const std::shared_ptr<const FieldTower>& tower() const { return tower_; }
  int level() const { return level_; }
  FieldValue value() const { return value_; }
  std::vector<std::uint32_t> coefficients() const {
    return tower_->coefficients(level_, value_);
  }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  /// Same tower, same level, same value.
  bool operator==(const FieldElement& o) const;

 private:
  void require_compatible(const FieldElement& o) const;

  std::shared_ptr<const FieldTower> tower_;
  int level_;
  FieldValue value_;
};

/// Image of x in level `target` (coefficient padding). Throws InvalidInput if
/// target < x.level() or the tower differs from `tower`.
FieldElement field_embed(const FieldElement& x, int target);
FieldElement field_embed(const FieldElement& x,
                         const std::shared_ptr<const FieldTower>& tower,
                         int target);

bool is_prime(std::uint64_t n);

}  // namespace entlab::algebra
