#include "entlab/algebra/field_tower.hpp"

#include <limits>
#include <string>

#include "entlab/errors.hpp"

namespace entlab::algebra {

namespace {

// Levels up to this order get full operation tables.
constexpr std::uint64_t kTableOrder = 256;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::shared_ptr<const FieldTower> FieldTower::create(std::uint32_t p,
                                                     int depth) {
  if (p == 2) throw InvalidInput("field tower: characteristic 2 unsupported");
  if (!is_prime(p))
    throw InvalidInput("field tower: " + std::to_string(p) + " is not prime");
  if (depth < 0) throw InvalidInput("field tower: negative depth");
  std::uint64_t q = p;
  for (int k = 0; k < depth; ++k) {
    if (q > std::numeric_limits<std::uint32_t>::max() / q)
      throw InvalidInput("field tower: p^(2^depth) exceeds 32 bits");
    q *= q;
  }
  return std::shared_ptr<const FieldTower>(new FieldTower(p, depth));
}

FieldTower::FieldTower(std::uint32_t p, int depth) : p_(p) {
  orders_.push_back(p);
  nonsquares_.push_back(0);
  for (int k = 1; k <= depth; ++k) orders_.push_back(orders_.back() * orders_.back());

  tables_.resize(orders_.size());
  for (int k = 0; k <= depth; ++k) {
    if (k >= 1) {
      FieldValue s = 1;
      while (is_square(k - 1, s)) ++s;
      nonsquares_.push_back(s);
    }
    const std::uint64_t q = orders_[k];
    if (q > kTableOrder) continue;
    Tables t;
    t.add.resize(q * q);
    t.mul.resize(q * q);
    t.neg.resize(q);
    t.inv.resize(q);
    for (FieldValue a = 0; a < q; ++a) {
      t.neg[a] = static_cast<std::uint32_t>(neg_raw(k, a));
      for (FieldValue b = 0; b < q; ++b) {
        t.add[a * q + b] = static_cast<std::uint32_t>(add_raw(k, a, b));
        t.mul[a * q + b] = static_cast<std::uint32_t>(mul_raw(k, a, b));
      }
    }
    for (FieldValue a = 1; a < q; ++a)
      for (FieldValue b = 1; b < q; ++b)
        if (t.mul[a * q + b] == 1) {
          t.inv[a] = static_cast<std::uint32_t>(b);
          break;
        }
    tables_[k] = std::move(t);
  }
}

std::uint64_t FieldTower::order(int level) const {
  if (level < 0 || level > depth())
    throw InvalidInput("field tower: level " + std::to_string(level) +
                       " out of range");
  return orders_[level];
}

FieldValue FieldTower::extension_constant(int level) const {
  if (level < 1 || level > depth())
    throw InvalidInput("field tower: no extension constant at level " +
                       std::to_string(level));
  return nonsquares_[level];
}

void FieldTower::check(int level, FieldValue a) const {
  if (a >= order(level))
    throw InvalidInput("field tower: value out of range for level");
}

FieldValue FieldTower::add_raw(int level, FieldValue a, FieldValue b) const {
  if (level == 0) return (a + b) % p_;
  if (!tables_[level].add.empty())
    return tables_[level].add[a * orders_[level] + b];
  const std::uint64_t h = orders_[level - 1];
  return add_raw(level - 1, a % h, b % h) +
         h * add_raw(level - 1, a / h, b / h);
}

FieldValue FieldTower::neg_raw(int level, FieldValue a) const {
  if (level == 0) return (p_ - a) % p_;
  if (!tables_[level].neg.empty()) return tables_[level].neg[a];
  const std::uint64_t h = orders_[level - 1];
  return neg_raw(level - 1, a % h) + h * neg_raw(level - 1, a / h);
}

FieldValue FieldTower::mul_raw(int level, FieldValue x, FieldValue y) const {
  if (level == 0) return (x * y) % p_;
  if (!tables_[level].mul.empty())
    return tables_[level].mul[x * orders_[level] + y];
  const int lo = level - 1;
  const std::uint64_t h = orders_[lo];
  const FieldValue a = x % h, b = x / h, c = y % h, d = y / h;
  // (a + bt)(c + dt) = (ac + s bd) + (ad + bc) t
  const FieldValue bd = mul_raw(lo, b, d);
  const FieldValue re =
      add_raw(lo, mul_raw(lo, a, c), mul_raw(lo, nonsquares_[level], bd));
  const FieldValue im = add_raw(lo, mul_raw(lo, a, d), mul_raw(lo, b, c));
  return re + h * im;
}

FieldValue FieldTower::inv_raw(int level, FieldValue x) const {
  if (level == 0) {
    FieldValue r = 1, base = x % p_;
    for (std::uint64_t e = p_ - 2; e; e >>= 1) {
      if (e & 1) r = r * base % p_;
      base = base * base % p_;
    }
    return r;
  }
  if (!tables_[level].inv.empty()) return tables_[level].inv[x];
  const int lo = level - 1;
  const std::uint64_t h = orders_[lo];
  const FieldValue a = x % h, b = x / h;
  // (a + bt)^{-1} = (a - bt) / (a^2 - s b^2); the norm vanishes only at 0.
  const FieldValue norm =
      add_raw(lo, mul_raw(lo, a, a),
              neg_raw(lo, mul_raw(lo, nonsquares_[level], mul_raw(lo, b, b))));
  const FieldValue ninv = inv_raw(lo, norm);
  return mul_raw(lo, a, ninv) + h * mul_raw(lo, neg_raw(lo, b), ninv);
}

FieldValue FieldTower::add(int level, FieldValue a, FieldValue b) const {
  check(level, a);
  check(level, b);
  return add_raw(level, a, b);
}

FieldValue FieldTower::neg(int level, FieldValue a) const {
  check(level, a);
  return neg_raw(level, a);
}

FieldValue FieldTower::sub(int level, FieldValue a, FieldValue b) const {
  check(level, a);
  check(level, b);
  return add_raw(level, a, neg_raw(level, b));
}

FieldValue FieldTower::mul(int level, FieldValue a, FieldValue b) const {
  check(level, a);
  check(level, b);
  return mul_raw(level, a, b);
}

FieldValue FieldTower::inv(int level, FieldValue a) const {
  check(level, a);
  if (a == 0) throw InvalidInput("field tower: inverse of zero");
  return inv_raw(level, a);
}

FieldValue FieldTower::pow(int level, FieldValue a, std::uint64_t e) const {
  check(level, a);
  FieldValue r = 1;
  while (e) {
    if (e & 1) r = mul_raw(level, r, a);
    a = mul_raw(level, a, a);
    e >>= 1;
  }
  return r;
}

bool FieldTower::is_square(int level, FieldValue a) const {
  check(level, a);
  if (a == 0) return true;
  return pow(level, a, (orders_[level] - 1) / 2) == 1;
}

std::vector<std::uint32_t> FieldTower::coefficients(int level,
                                                    FieldValue a) const {
  check(level, a);
  std::vector<std::uint32_t> out(degree(level));
  for (auto& c : out) {
    c = static_cast<std::uint32_t>(a % p_);
    a /= p_;
  }
  return out;
}

FieldValue FieldTower::from_coefficients(
    int level, const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() != degree(level))
    throw InvalidInput("field tower: coefficient vector has wrong length");
  FieldValue v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (*it >= p_) throw InvalidInput("field tower: coefficient not reduced");
    v = v * p_ + *it;
  }
  return v;
}

FieldElement::FieldElement(std::shared_ptr<const FieldTower> tower, int level,
                           FieldValue value)
    : tower_(std::move(tower)), level_(level), value_(value) {
  if (!tower_) throw InvalidInput("field element: null tower");
  if (value_ >= tower_->order(level_))
    throw InvalidInput("field element: value out of range");
}

void FieldElement::require_compatible(const FieldElement& o) const {
  if (tower_ != o.tower_)
    throw InvalidInput("field element: operands from different towers");
  if (level_ != o.level_)
    throw InvalidInput("field element: operands at different levels");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_compatible(o);
  return {tower_, level_, tower_->add(level_, value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_compatible(o);
  return {tower_, level_, tower_->sub(level_, value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_compatible(o);
  return {tower_, level_, tower_->mul(level_, value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
  return {tower_, level_, tower_->neg(level_, value_)};
}

FieldElement FieldElement::inverse() const {
  return {tower_, level_, tower_->inv(level_, value_)};
}

bool FieldElement::operator==(const FieldElement& o) const {
  return tower_ == o.tower_ && level_ == o.level_ && value_ == o.value_;
}

FieldElement field_embed(const FieldElement& x, int target) {
  if (target < x.level())
    throw InvalidInput("field_embed: target level below source level");
  return {x.tower(), target, x.value()};
}

FieldElement field_embed(const FieldElement& x,
                         const std::shared_ptr<const FieldTower>& tower,
                         int target) {
  if (tower != x.tower())
    throw InvalidInput("field_embed: element belongs to a different tower");
  return field_embed(x, target);
}

}  // namespace entlab::algebra
