#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "f5gb/event_log.hpp"
#include "f5gb/signature.hpp"

namespace f5gb {

struct CriteriaConfig {
  /// Also reject pairs in CritPair when a side is rewritable.
  bool rewritten_in_critpair = false;
  /// Track cofactor vectors and check them after every completion.
  bool cofactor_audit = false;
};

using ElementId = std::size_t;

struct LabeledCriticalPair {
  Monomial gamma;
  unsigned degree = 0;
  /// The side whose multiplied signature is the ≺-maximum labels the s-polynomial.
  ElementId hi = 0, lo = 0;
  Monomial u_hi, u_lo;
  /// Neither generator redundant.
  bool gb_flag = false;
};

struct CritPairResult {
  std::optional<LabeledCriticalPair> pair;
  PairOutcome outcome = PairOutcome::kept;
  Monomial gamma;
  unsigned degree = 0;
  bool gb_flag = false;
  /// Criterion outcomes evaluated independently of the rejection decision.
  bool faugere_hit = false;
  bool rewritten_hit = false;
  bool equal_signature = false;
};

struct CofactorAudit {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct IsReducibleResult {
  std::optional<ElementId> reducer;
  bool flag = false;
};

/// State of the incremental signature algorithm: every labeled polynomial ever
/// created, the rule lists, the previous-iteration basis G_{i+1} and the basis
/// slice of the current index.
///
/// Generators are indexed 1..m; iterations run from m down to 1.
class F5Core {
 public:
  /// Throws NonHomogeneousInput for inhomogeneous generators and
  /// StructuralError for zero, mixed-ring or non-interreduced input.
  F5Core(std::vector<Polynomial> generators, CriteriaConfig config = {}, const EventLog* log = nullptr);

  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const RingPtr& ring() const { return ring_; }
  const CriteriaConfig& config() const { return config_; }

  const LabeledPolynomial& element(ElementId id) const { return store_[id]; }
  std::size_t element_count() const { return store_.size(); }
  const RuleList& rules() const { return rules_; }

  /// Starts iteration i: creates r_i = (F_i, f_i, 0) and fixes φ = NF(., G_{i+1}).
  ElementId begin_iteration(std::size_t i);
  /// Moves the current basis into G_{i+1} for the next iteration.
  void end_iteration();

  std::size_t current_index() const { return index_; }
  /// G_{i+1}: elements of completed iterations, in insertion order.
  const std::vector<ElementId>& previous_basis() const { return previous_; }
  /// Elements of index i in G_i, in insertion order (r_i first).
  const std::vector<ElementId>& slice() const { return slice_; }
  /// G_i = G_{i+1} followed by the slice.
  std::vector<ElementId> current_basis() const;

  /// Appends a completed element to G_i.
  void add_to_basis(ElementId id);

  CritPairResult crit_pair(ElementId a, ElementId b);
  /// Labeled s-polynomials of the pairs, in increasing signature order; pairs
  /// with a rewritable side are dropped.
  std::vector<ElementId> spol(std::vector<LabeledCriticalPair> pairs);
  /// Completed nonzero elements, in completion order.
  std::vector<ElementId> reduction(std::span<const ElementId> todo);

  /// IsReducible against the slice followed by `done`.
  IsReducibleResult is_reducible(ElementId r0, std::span<const ElementId> done) const;

  bool faugere(const Monomial& u, ElementId id) const { return faugere_detected(u, store_[id], leads_); }
  bool rewritten(const Monomial& u, ElementId id) const { return rewritten_detected(u, store_[id], rules_); }

  std::size_t zero_reductions() const { return zero_reductions_; }
  const CofactorAudit& cofactor_audit() const { return audit_; }

  /// poly(G_1) once every iteration has finished; the current G_i otherwise.
  std::vector<Polynomial> basis_polynomials() const;

 private:
  ElementId create(Signature sig, Polynomial poly, std::optional<CofactorVector> cof);
  void add_rule(ElementId id);
  void apply_phi(LabeledPolynomial& r) const;
  void emit(Event e) const;
  Event element_event(EventKind kind, const LabeledPolynomial& r) const;
  void check_cofactors(const LabeledPolynomial& r);
  int sig_compare(const Signature& a, const Signature& b) const { return sig_cmp(a, b, ring_->order()); }

  /// TopReduction. Returns a completed element, if any, and pushes
  /// re-queued elements onto `requeue`.
  std::optional<ElementId> top_reduction(ElementId r0, std::span<const ElementId> done,
                                         std::vector<ElementId>& requeue);

  std::vector<Polynomial> generators_;
  RingPtr ring_;
  CriteriaConfig config_;
  const EventLog* log_;

  std::deque<LabeledPolynomial> store_;
  RuleList rules_;
  LeadTermIndex leads_;
  // Reduced basis of G_{i+1} for plain runs; the raw elements when cofactors
  // are tracked, since each step must map back to an element.
  std::vector<Polynomial> phi_polys_;
  ReducerSet phi_;
  std::vector<ElementId> previous_;
  std::vector<ElementId> slice_;
  std::size_t index_ = 0;
  std::uint64_t next_serial_ = 1;
  std::size_t zero_reductions_ = 0;
  CofactorAudit audit_;
};

/// Checks the driver preconditions; throws as the F5Core constructor does.
void validate_f5_input(std::span<const Polynomial> generators);

}  // namespace f5gb
