#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "f5gb/ring.hpp"

namespace f5gb {

struct Term {
  FieldElement coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in canonical form: nonzero coefficients, monomials strictly
/// decreasing in the ring's term order. The empty term list is zero.
class Polynomial {
 public:
  /// Unbound zero; most operations require a ring.
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// The caller guarantees canonical order; checked only in debug builds.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial monomial(RingPtr ring, const Monomial& m, FieldElement c = {1});
  static Polynomial constant(RingPtr ring, FieldElement c);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& operator[](std::size_t k) const { return terms_[k]; }

  /// Leading monomial / coefficient; StructuralError on zero.
  const Monomial& lm() const;
  FieldElement lc() const;
  /// Maximal total degree, -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  Polynomial monic() const;
  void make_monic();

  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator-() const;
  Polynomial scaled(FieldElement c) const;
  /// c * m * this.
  Polynomial term_mul(FieldElement c, const Monomial& m) const;
  /// this - c * m * q in one merge pass.
  Polynomial sub_mul(FieldElement c, const Monomial& m, const Polynomial& q) const;

  /// Full product; only needed by audits and tests.
  Polynomial operator*(const Polynomial& q) const;

  /// Image in a larger ring whose first variables coincide with this ring's.
  Polynomial embedded(RingPtr target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_same_ring(const Polynomial& q) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Polynomials consulted as reducers, scanned in insertion order. Holds
/// non-owning pointers; the referenced polynomials must outlive the set.
class ReducerSet {
 public:
  ReducerSet() = default;
  explicit ReducerSet(std::span<const Polynomial> polys);

  void add(const Polynomial& p);
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Polynomial& at(std::size_t k) const { return *entries_[k].poly; }

  /// First reducer whose leading monomial divides m, or -1.
  long find_divisor(const Monomial& m) const;
  bool any_divides(const Monomial& m) const { return find_divisor(m) >= 0; }

 private:
  struct Entry {
    Monomial lm;
    std::uint32_t mask;
    const Polynomial* poly;
  };
  std::vector<Entry> entries_;
};

/// Called once per reduction step with (reducer index, coefficient, multiplier):
/// the step subtracted coefficient * multiplier * reducer.
using ReductionObserver = std::function<void(std::size_t, FieldElement, const Monomial&)>;

enum class ReductionScope { full, top };

/// Reduces p by the set: `full` cancels every reducible term (largest first,
/// earliest reducer wins); `top` stops once the leading term is irreducible.
/// The result is not normalized.
Polynomial reduce(const Polynomial& p, const ReducerSet& reducers, ReductionScope scope,
                  const ReductionObserver& observer = {});

/// Full normal form, made monic if nonzero.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis);
Polynomial normal_form(const Polynomial& p, const ReducerSet& basis);

/// lc(q)(γ/lm p) p - lc(p)(γ/lm q) q, monic; StructuralError on zero input.
Polynomial spol(const Polynomial& p, const Polynomial& q);

/// Removes redundancy: repeatedly top-reduces until no leading monomial divides
/// another; output monic, sorted by leading monomial ascending. Tails are left
/// as they are.
std::vector<Polynomial> interreduce(std::span<const Polynomial> polys);

/// True iff no leading monomial divides another and no element is zero.
bool is_lm_interreduced(std::span<const Polynomial> polys);

int total_degree_sum(std::span<const Polynomial> polys);

}  // namespace f5gb
