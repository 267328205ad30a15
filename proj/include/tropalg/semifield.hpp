#pragma once

/**
 * Idempotent semifields (quasi-corps of characteristic 1).
 *
 * Addition is idempotent, the nonzero elements form a multiplicative group,
 * and the order a <= b  <=>  a + b == b  is total. Two instances are provided:
 *
 *   BoolF1   the two-element semifield {0, 1}
 *   MaxPlus  Q u {bottom} with  a + b = max(a, b),  a * b = a + b  (log domain)
 */

#include "tropalg/errors.hpp"
#include "tropalg/rational.hpp"

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>

namespace tropalg {

template <class K>
concept IdempotentSemifield = std::regular<K> && std::totally_ordered<K> &&
    requires(const K a, const K b) {
      { K::zero() } -> std::same_as<K>;
      { K::one() } -> std::same_as<K>;
      { a + b } -> std::same_as<K>;
      { a * b } -> std::same_as<K>;
      { a.inv() } -> std::same_as<K>;
      { a.is_zero() } -> std::convertible_to<bool>;
    };

class MaxPlus {
 public:
  /// The bottom element (semiring zero, -inf).
  MaxPlus() = default;
  explicit MaxPlus(Rational value) : value_(std::move(value)) {}

  static MaxPlus zero() { return MaxPlus(); }
  static MaxPlus bottom() { return MaxPlus(); }
  static MaxPlus one() { return MaxPlus(Rational(0)); }

  bool is_zero() const { return !value_.has_value(); }
  bool is_bottom() const { return !value_.has_value(); }

  /// Log-domain value; throws DomainError on bottom.
  const Rational& value() const;

  MaxPlus inv() const;
  MaxPlus pow(unsigned n) const;

  friend MaxPlus operator+(const MaxPlus& a, const MaxPlus& b);
  friend MaxPlus operator*(const MaxPlus& a, const MaxPlus& b);
  friend bool operator==(const MaxPlus& a, const MaxPlus& b) = default;
  friend std::strong_ordering operator<=>(const MaxPlus& a, const MaxPlus& b);

 private:
  std::optional<Rational> value_;
};

class BoolF1 {
 public:
  BoolF1() = default;
  explicit BoolF1(bool v) : v_(v) {}

  static BoolF1 zero() { return BoolF1(false); }
  static BoolF1 one() { return BoolF1(true); }

  bool is_zero() const { return !v_; }
  bool value() const { return v_; }

  BoolF1 inv() const {
    if (!v_) throw DomainError("zero has no inverse");
    return *this;
  }

  friend BoolF1 operator+(BoolF1 a, BoolF1 b) { return BoolF1(a.v_ || b.v_); }
  friend BoolF1 operator*(BoolF1 a, BoolF1 b) { return BoolF1(a.v_ && b.v_); }
  friend bool operator==(BoolF1 a, BoolF1 b) = default;
  friend std::strong_ordering operator<=>(BoolF1 a, BoolF1 b) { return a.v_ <=> b.v_; }

 private:
  bool v_ = false;
};

static_assert(IdempotentSemifield<MaxPlus>);
static_assert(IdempotentSemifield<BoolF1>);

std::string to_string(const MaxPlus& a);
std::string to_string(BoolF1 a);
std::ostream& operator<<(std::ostream& os, const MaxPlus& a);
std::ostream& operator<<(std::ostream& os, BoolF1 a);

template <IdempotentSemifield K>
K add(const K& a, const K& b) { return a + b; }

template <IdempotentSemifield K>
K mul(const K& a, const K& b) { return a * b; }

template <IdempotentSemifield K>
K inv(const K& a) { return a.inv(); }

template <IdempotentSemifield K>
K pow(const K& a, unsigned n) {
  if constexpr (std::same_as<K, MaxPlus>) {
    return a.pow(n);
  } else {
    K result = K::one();
    K base = a;
    while (n > 0) {
      if (n & 1u) result = result * base;
      base = base * base;
      n >>= 1u;
    }
    return result;
  }
}

/// The additive quasi-inverse x*. In characteristic 1 the quasi-inverse of
/// the unit is the unit itself, so x* = x.
template <IdempotentSemifield K>
K quasi_symmetric(const K& a) { return a; }

/// Whether k.1 + 1 == 1 holds in K.
template <IdempotentSemifield K>
bool char_set_member(unsigned k) {
  if (k == 0) throw UsageError("char_set_member requires k >= 1");
  K multiple = K::zero();
  for (unsigned i = 0; i < k; ++i) multiple = multiple + K::one();
  return multiple + K::one() == K::one();
}

}  // namespace tropalg
