#include "f5gb/field.hpp"

#include <stdexcept>
#include <string>

#include "f5gb/error.hpp"

namespace f5gb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t characteristic) : p_(characteristic) {
  if (characteristic >= (1u << 31)) {
    throw std::invalid_argument("characteristic " + std::to_string(characteristic) +
                                " does not fit the 31-bit residue representation");
  }
  if (!is_prime(characteristic)) {
    throw std::invalid_argument("characteristic " + std::to_string(characteristic) +
                                " is not prime");
  }
}

FieldElement PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

std::int64_t PrimeField::to_signed(FieldElement a) const {
  if (a.value > p_ / 2) return static_cast<std::int64_t>(a.value) - p_;
  return a.value;
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.value == 0) throw DivisionByZero();
  std::int64_t r0 = p_, r1 = a.value;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  // r0 == gcd == 1 since p is prime
  return from_int(s0);
}

}  // namespace f5gb
