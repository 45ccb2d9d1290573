#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>

#include "f5gb/error.hpp"

namespace f5gb {

/// Dense exponent vector x^a = x_1^a_1 ... x_n^a_n.
///
/// Exponents are stored in a fixed 32-slot byte array so that divisibility can
/// be tested word-at-a-time; unused slots stay zero. Individual exponents are
/// limited to 127.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 32;
  static constexpr unsigned kMaxExponent = 127;

  Monomial() = default;

  /// The monomial 1 in a ring with `nvars` variables.
  explicit Monomial(std::size_t nvars) : nvars_(check_nvars(nvars)) {}

  Monomial(std::size_t nvars, std::span<const unsigned> exponents) : nvars_(check_nvars(nvars)) {
    if (exponents.size() != nvars) throw StructuralError("exponent vector length mismatch");
    for (std::size_t k = 0; k < nvars; ++k) set(k, exponents[k]);
  }

  Monomial(std::initializer_list<unsigned> exponents)
      : Monomial(exponents.size(), std::span<const unsigned>(exponents.begin(), exponents.size())) {}

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t k) const { return exps_[k]; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t k, unsigned e) {
    if (k >= nvars_) throw StructuralError("variable index out of range");
    if (e > kMaxExponent) throw std::overflow_error("monomial exponent exceeds 127");
    degree_ = static_cast<std::uint16_t>(degree_ - exps_[k] + e);
    exps_[k] = static_cast<std::uint8_t>(e);
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.nvars_ == b.nvars_ &&
           std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVars) == 0;
  }

  /// True iff this | other.
  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    constexpr std::uint64_t kHigh = 0x8080808080808080ull;
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t a = word(w), b = other.word(w);
      if ((((b | kHigh) - a) & kHigh) != kHigh) return false;
    }
    return true;
  }

  /// Bit mask with one bit per variable present; a | b implies mask(a) ⊆ mask(b).
  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (exps_[k] != 0) m |= 1u << k;
    }
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    same_ring(a, b);
    Monomial r;
    r.nvars_ = a.nvars_;
    std::uint8_t overflow = 0;
    for (std::size_t k = 0; k < kMaxVars; ++k) {
      r.exps_[k] = static_cast<std::uint8_t>(a.exps_[k] + b.exps_[k]);
      overflow |= r.exps_[k];
    }
    if (overflow & 0x80) throw std::overflow_error("monomial exponent exceeds 127");
    r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return r;
  }

  Monomial& operator*=(const Monomial& b) { return *this = *this * b; }

  /// this / d, or nullopt when d does not divide this.
  std::optional<Monomial> try_div(const Monomial& d) const {
    same_ring(*this, d);
    if (!d.divides(*this)) return std::nullopt;
    return div_unchecked(d);
  }

  /// Precondition: d | this.
  Monomial div_unchecked(const Monomial& d) const {
    Monomial r;
    r.nvars_ = nvars_;
    for (std::size_t k = 0; k < kMaxVars; ++k) r.exps_[k] = static_cast<std::uint8_t>(exps_[k] - d.exps_[k]);
    r.degree_ = static_cast<std::uint16_t>(degree_ - d.degree_);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    same_ring(a, b);
    Monomial r;
    r.nvars_ = a.nvars_;
    unsigned deg = 0;
    for (std::size_t k = 0; k < kMaxVars; ++k) {
      r.exps_[k] = std::max(a.exps_[k], b.exps_[k]);
      deg += r.exps_[k];
    }
    r.degree_ = static_cast<std::uint16_t>(deg);
    return r;
  }

  /// Total degree first, then reverse lexicographic with the last variable
  /// deciding: a smaller exponent of the last differing variable is larger.
  friend int degrevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
    for (std::size_t k = a.nvars_; k-- > 0;) {
      if (a.exps_[k] != b.exps_[k]) return a.exps_[k] > b.exps_[k] ? -1 : 1;
    }
    return 0;
  }

  friend int lex_cmp(const Monomial& a, const Monomial& b) {
    for (std::size_t k = 0; k < a.nvars_; ++k) {
      if (a.exps_[k] != b.exps_[k]) return a.exps_[k] < b.exps_[k] ? -1 : 1;
    }
    return 0;
  }

  /// Embeds into a ring with more variables; the new trailing exponents are 0.
  Monomial extended(std::size_t nvars) const {
    if (nvars < nvars_) throw StructuralError("cannot shrink monomial");
    Monomial r = *this;
    r.nvars_ = check_nvars(nvars);
    return r;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull ^ nvars_;
    for (std::size_t w = 0; w < kWords; ++w) {
      h ^= word(w);
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  static void same_ring(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) throw StructuralError("monomials from rings with different variable counts");
  }

 private:
  static constexpr std::size_t kWords = kMaxVars / 8;

  static std::uint8_t check_nvars(std::size_t n) {
    if (n > kMaxVars) throw StructuralError("at most 32 variables are supported");
    return static_cast<std::uint8_t>(n);
  }

  std::uint64_t word(std::size_t w) const {
    std::uint64_t v;
    std::memcpy(&v, exps_.data() + 8 * w, sizeof v);
    return v;
  }

  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace f5gb
