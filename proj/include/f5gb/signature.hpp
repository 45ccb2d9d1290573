#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "f5gb/polynomial.hpp"

namespace f5gb {

/// Module monomial t*F_i; indices are 1-based.
struct Signature {
  Monomial term;
  std::size_t index = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature operator*(const Monomial& u, const Signature& s) { return {u * s.term, s.index}; }

/// Position-over-term order: a larger index is smaller; equal indices compare
/// terms. Returns -1 / 0 / +1 for a ≺ b / a = b / a ≻ b.
int sig_cmp(const Signature& a, const Signature& b, const TermOrder& order);

std::string format_signature(const Signature& s, const Ring& ring);

/// Cofactors h_1..h_m with poly = Σ h_k f_k.
struct CofactorVector {
  std::vector<Polynomial> h;

  /// this - c*u*other, component-wise.
  void sub_mul(FieldElement c, const Monomial& u, const CofactorVector& other);
  void scale(FieldElement c);
  Polynomial combine(std::span<const Polynomial> generators) const;
};

struct LabeledPolynomial {
  Signature sig;
  Polynomial poly;
  /// Set when every reducer of the leading term was rejected by the criteria.
  bool redundant = false;
  /// Creation stamp; "computed after" means a larger serial.
  std::uint64_t serial = 0;
  std::optional<CofactorVector> cofactors;

  std::size_t index() const { return sig.index; }
  const Monomial& lm() const { return poly.lm(); }
};

struct Rule {
  Monomial term;
  std::uint64_t serial;
};

/// Per-index append-only rule lists, each in creation order.
class RuleList {
 public:
  explicit RuleList(std::size_t generator_count = 0) : rules_(generator_count) {}

  /// Throws StructuralError when serials do not strictly increase.
  void add(std::size_t index, const Monomial& term, std::uint64_t serial);
  std::span<const Rule> rules(std::size_t index) const;
  std::size_t size() const;

 private:
  std::vector<std::vector<Rule>> rules_;
};

/// Leading monomials of completed elements tagged with their index; answers
/// "is m divisible by the head of some element of index > i".
class LeadTermIndex {
 public:
  void add(std::size_t index, const Monomial& lm);
  bool divisible_above(std::size_t index, const Monomial& m) const;
  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    std::size_t index;
    Monomial lm;
    std::uint32_t mask;
  };
  std::vector<Entry> entries_;
};

/// u*r is detected by Faugère's criterion: some element of higher index has a
/// head dividing u*sm(r).
bool faugere_detected(const Monomial& u, const LabeledPolynomial& r, const LeadTermIndex& previous);

/// u*r is detected by the Rewritten criterion: a rule of the same index created
/// after r has a term dividing u*sm(r).
bool rewritten_detected(const Monomial& u, const LabeledPolynomial& r, const RuleList& rules);

}  // namespace f5gb
