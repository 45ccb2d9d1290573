#pragma once

#include <compare>
#include <cstdint>

namespace f5gb {

/// Residue of the prime field; always fully reduced into [0, p).
struct FieldElement {
  std::uint32_t value = 0;

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Z/pZ for an odd (or two) prime p below 2^31.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultCharacteristic = 32003;

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t characteristic = kDefaultCharacteristic);

  std::uint32_t characteristic() const { return p_; }

  /// Reduces an arbitrary signed integer into the field.
  FieldElement from_int(std::int64_t v) const;
  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint32_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FieldElement neg(FieldElement a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
  }
  /// Extended Euclid; throws DivisionByZero for a = 0.
  FieldElement inv(FieldElement a) const;

  FieldElement one() const { return {1}; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace f5gb
