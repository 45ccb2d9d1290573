#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "f5gb/polynomial.hpp"

namespace f5gb {

enum class SystemKind { katsura, cyclic, eco, random, file };

std::string_view to_string(SystemKind kind);

struct RandomParams {
  unsigned generators = 1;
  unsigned max_degree = 1;
  unsigned variables = 1;
  std::uint64_t seed = 0;
};

struct SystemSpec {
  SystemKind kind = SystemKind::katsura;
  unsigned n = 0;
  RandomParams random;
  std::string path;
  std::uint32_t characteristic = PrimeField::kDefaultCharacteristic;
  OrderKind order = OrderKind::degrevlex;
  bool homogenize = false;

  /// katsura:5, cyclic:6, eco:8, random:3,4,6,17 or file:PATH.
  std::string label() const;
};

/// Parses `katsura:9`, `cyclic:7`, `eco:10`, `random:a,b,c,seed` or
/// `file:PATH`; throws std::invalid_argument.
SystemSpec parse_system_spec(std::string_view text);

/// Katsura-n in variables x1..x(n+1), where x1 plays the role of u_0:
///   x1 + 2(x2 + ... + x(n+1)) - 1,
///   sum_{l=-n..n} u_l u_{m-l} - u_m  for m = 0..n-1,  with u_{-l} = u_l.
std::vector<Polynomial> katsura(const RingPtr& ring, unsigned n);
/// Cyclic-n: the cyclic elementary sums e_1..e_{n-1} and x1*...*xn - 1.
std::vector<Polynomial> cyclic(const RingPtr& ring, unsigned n);
/// Eco-n: x_n (x_k + sum_{i=1}^{n-k-1} x_i x_{i+k}) - k for k = 1..n-1, and
/// x_1 + ... + x_{n-1} + 1.
std::vector<Polynomial> eco(const RingPtr& ring, unsigned n);

/// Variable count of the named family at parameter n.
std::size_t named_variable_count(SystemKind kind, unsigned n);

/// Affine generators of a named family in a fresh ring x1..xk; throws
/// std::invalid_argument for n < 2.
std::vector<Polynomial> gen_named(SystemKind kind, unsigned n, std::uint32_t characteristic = PrimeField::kDefaultCharacteristic,
                                  OrderKind order = OrderKind::degrevlex);

/// Reproducible 64-bit generator (SplitMix64):
///   state += 0x9E3779B97F4A7C15; z = state;
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
///   return z ^ (z >> 31).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::uint64_t state_;
};

/// Number of monomials of degree d in c variables, C(d + c - 1, c - 1).
std::uint64_t monomial_count(unsigned degree, unsigned variables);
/// Every monomial of the given degree, in decreasing term order.
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, unsigned degree);

/// Terms drawn for a degree-d generator: uniform in [ceil(0.10 N), floor(0.15 N)]
/// for N = monomial_count(d, c); max(1, round(0.125 N)) when that band is empty.
std::pair<std::size_t, std::size_t> random_term_band(std::uint64_t count);

/// a homogeneous generators in x1..xc with degrees uniform in [1, b], support
/// drawn without replacement and nonzero coefficients.
std::vector<Polynomial> gen_random(const RandomParams& params, std::uint32_t characteristic = PrimeField::kDefaultCharacteristic,
                                   OrderKind order = OrderKind::degrevlex);

/// Appends a variable h, smallest in the order, and homogenizes every element.
std::vector<Polynomial> homogenize(std::span<const Polynomial> polys, std::string_view name = "h");
/// Sets the last variable to 1 and drops it from the ring.
std::vector<Polynomial> dehomogenize(std::span<const Polynomial> polys);

struct PolynomialSystem {
  RingPtr ring;
  std::vector<Polynomial> polys;
  std::string name;
};

/// Generates (or loads), optionally homogenizes, and interreduces. Named and
/// random systems come out sorted by leading monomial, largest first; file systems keep their
/// order when already interreduced.
PolynomialSystem make_system(const SystemSpec& spec);

}  // namespace f5gb
