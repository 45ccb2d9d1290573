#include <random>

#include "doctest.h"
#include "f5gb/error.hpp"
#include "f5gb/field.hpp"

using f5gb::FieldElement;
using f5gb::PrimeField;

TEST_SUITE("coeff_field") {
  TEST_CASE("wraparound and fixed values in F_32003") {
    PrimeField k;
    CHECK(k.characteristic() == 32003);
    CHECK(k.add({32002}, {1}) == FieldElement{0});
    CHECK(k.sub({5}, {7}) == FieldElement{32001});
    CHECK(k.mul({12345}, {0}) == FieldElement{0});
    CHECK(k.neg({0}) == FieldElement{0});
    CHECK(k.neg({1}) == FieldElement{32002});
  }

  TEST_CASE("inverses") {
    PrimeField k;
    CHECK(k.inv({1}) == FieldElement{1});
    CHECK(k.inv({2}) == FieldElement{16002});
    CHECK((2ull * 16002ull) % 32003ull == 1ull);
    CHECK_THROWS_AS(k.inv({0}), f5gb::DivisionByZero);
    PrimeField k7583(7583);
    CHECK(k7583.mul({5}, k7583.inv({5})) == FieldElement{1});
  }

  TEST_CASE("from_int and symmetric representatives") {
    PrimeField k;
    CHECK(k.from_int(-1) == FieldElement{32002});
    CHECK(k.from_int(32003) == FieldElement{0});
    CHECK(k.from_int(-64007) == FieldElement{32002});
    CHECK(k.to_signed({32002}) == -1);
    CHECK(k.to_signed({16001}) == 16001);
    CHECK(k.to_signed({16002}) == -16001);
  }

  TEST_CASE("constructor rejects non-primes and oversized characteristics") {
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(32001), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(2147483659u), std::invalid_argument);
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(2147483647u));
    CHECK(f5gb::is_prime(7583));
    CHECK_FALSE(f5gb::is_prime(7581));
  }

  TEST_CASE("ring axioms on random residues") {
    for (std::uint32_t p : {2u, 3u, 7583u, 32003u, 2147483647u}) {
      PrimeField k(p);
      std::mt19937_64 rng(p);
      std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
      for (int trial = 0; trial < 300; ++trial) {
        FieldElement a{dist(rng)}, b{dist(rng)}, c{dist(rng)};
        CHECK(k.add(a, b) == k.add(b, a));
        CHECK(k.mul(a, b) == k.mul(b, a));
        CHECK(k.add(k.add(a, b), c) == k.add(a, k.add(b, c)));
        CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
        CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
        CHECK(k.add(k.neg(a), a) == FieldElement{0});
        CHECK(k.sub(a, b) == k.add(a, k.neg(b)));
        CHECK(a.value < p);
        if (!a.is_zero()) CHECK(k.mul(a, k.inv(a)) == k.one());
      }
    }
  }
}
