#include "f5gb/f5_core.hpp"

#include <algorithm>
#include <set>

#include "f5gb/buchberger.hpp"

namespace f5gb {

void validate_f5_input(std::span<const Polynomial> generators) {
  if (generators.empty()) throw StructuralError("empty generator list");
  for (const auto& g : generators) {
    if (g.is_zero()) throw StructuralError("zero generator");
    if (!same_ring(g.ring(), generators.front().ring())) throw StructuralError("generators from different rings");
    if (!g.is_homogeneous()) throw NonHomogeneousInput("generator is not homogeneous: " + g.to_string());
  }
  if (!is_lm_interreduced(generators)) throw StructuralError("generators are not interreduced");
}

F5Core::F5Core(std::vector<Polynomial> generators, CriteriaConfig config, const EventLog* log)
    : generators_(std::move(generators)), config_(config), log_(log) {
  validate_f5_input(generators_);
  for (auto& g : generators_) g.make_monic();
  ring_ = generators_.front().ring();
  rules_ = RuleList(generators_.size());
}

void F5Core::emit(Event e) const {
  if (log_ && log_->active()) {
    e.iteration = index_;
    log_->emit(e);
  }
}

Event F5Core::element_event(EventKind kind, const LabeledPolynomial& r) const {
  Event e;
  e.kind = kind;
  e.serial = r.serial;
  e.sig = r.sig;
  if (!r.poly.is_zero()) {
    e.degree = r.poly.degree();
    e.lm = r.poly.lm();
  } else {
    e.degree = static_cast<int>(r.sig.term.degree() + generators_[r.sig.index - 1].degree());
  }
  e.flag = r.redundant;
  return e;
}

ElementId F5Core::create(Signature sig, Polynomial poly, std::optional<CofactorVector> cof) {
  LabeledPolynomial r;
  r.sig = std::move(sig);
  r.poly = std::move(poly);
  r.serial = next_serial_++;
  r.cofactors = std::move(cof);
  store_.push_back(std::move(r));
  return store_.size() - 1;
}

void F5Core::add_rule(ElementId id) {
  const LabeledPolynomial& r = store_[id];
  rules_.add(r.sig.index, r.sig.term, r.serial);
  if (log_ && log_->active()) {
    Event e;
    e.kind = EventKind::rule;
    e.serial = r.serial;
    e.sig = r.sig;
    emit(std::move(e));
  }
}

ElementId F5Core::begin_iteration(std::size_t i) {
  if (i == 0 || i > generators_.size()) throw StructuralError("iteration index out of range");
  index_ = i;
  slice_.clear();
  std::optional<CofactorVector> cof;
  if (config_.cofactor_audit) {
    CofactorVector h;
    h.h.assign(generators_.size(), Polynomial(ring_));
    h.h[i - 1] = Polynomial::constant(ring_, ring_->field().one());
    cof = std::move(h);
  }
  ElementId id = create({ring_->one(), i}, generators_[i - 1], std::move(cof));
  add_rule(id);
  emit(element_event(EventKind::input, store_[id]));
  slice_.push_back(id);
  return id;
}

void F5Core::end_iteration() {
  for (ElementId id : slice_) {
    const LabeledPolynomial& r = store_[id];
    previous_.push_back(id);
    leads_.add(r.sig.index, r.poly.lm());
    if (config_.cofactor_audit) phi_.add(r.poly);
  }
  slice_.clear();
  if (!config_.cofactor_audit) {
    // Normal forms modulo a Groebner basis do not depend on the basis chosen.
    std::vector<Polynomial> prev;
    for (ElementId id : previous_) prev.push_back(store_[id].poly);
    phi_polys_ = reduced_basis(prev);
    phi_ = ReducerSet(phi_polys_);
  }
}

std::vector<ElementId> F5Core::current_basis() const {
  std::vector<ElementId> out = previous_;
  out.insert(out.end(), slice_.begin(), slice_.end());
  return out;
}

void F5Core::add_to_basis(ElementId id) {
  if (store_[id].index() != index_) throw StructuralError("basis element of a different index");
  slice_.push_back(id);
}

std::vector<Polynomial> F5Core::basis_polynomials() const {
  std::vector<Polynomial> out;
  for (ElementId id : current_basis()) out.push_back(store_[id].poly);
  return out;
}

// -- CritPair -------------------------------------------------------------------

CritPairResult F5Core::crit_pair(ElementId a, ElementId b) {
  if (a == b) throw StructuralError("critical pair of an element with itself");
  const LabeledPolynomial& ra = store_[a];
  const LabeledPolynomial& rb = store_[b];
  if (ra.poly.is_zero() || rb.poly.is_zero()) throw StructuralError("critical pair with a zero polynomial");

  CritPairResult res;
  res.gamma = lcm(ra.lm(), rb.lm());
  res.degree = res.gamma.degree();
  res.gb_flag = !ra.redundant && !rb.redundant;
  Monomial ua = res.gamma.div_unchecked(ra.lm());
  Monomial ub = res.gamma.div_unchecked(rb.lm());
  Signature sa = ua * ra.sig, sb = ub * rb.sig;
  int c = sig_compare(sa, sb);

  res.faugere_hit = faugere(ua, a) || faugere(ub, b);
  res.rewritten_hit = rewritten(ua, a) || rewritten(ub, b);
  res.equal_signature = c == 0;

  LabeledCriticalPair pair;
  pair.gamma = res.gamma;
  pair.degree = res.degree;
  pair.gb_flag = res.gb_flag;
  if (c >= 0) {
    pair.hi = a, pair.lo = b, pair.u_hi = ua, pair.u_lo = ub;
  } else {
    pair.hi = b, pair.lo = a, pair.u_hi = ub, pair.u_lo = ua;
  }

  if (store_[pair.hi].index() != index_) {
    res.outcome = PairOutcome::completed_index;
  } else if (res.faugere_hit) {
    res.outcome = PairOutcome::faugere;
  } else if (res.equal_signature || (config_.rewritten_in_critpair && res.rewritten_hit)) {
    res.outcome = PairOutcome::rewritten;
  } else {
    res.outcome = PairOutcome::kept;
  }

  if (log_ && log_->active()) {
    Event e;
    e.kind = EventKind::pair;
    e.serial = store_[pair.hi].serial;
    e.other = store_[pair.lo].serial;
    e.sig = pair.u_hi * store_[pair.hi].sig;
    e.degree = static_cast<int>(res.degree);
    e.lm = res.gamma;
    e.flag = res.gb_flag;
    e.outcome = res.outcome;
    e.faugere_hit = res.faugere_hit;
    e.rewritten_hit = res.rewritten_hit;
    e.equal_signature = res.equal_signature;
    emit(std::move(e));
  }
  if (res.outcome == PairOutcome::kept) res.pair = std::move(pair);
  return res;
}

// -- Spol -----------------------------------------------------------------------

std::vector<ElementId> F5Core::spol(std::vector<LabeledCriticalPair> pairs) {
  auto label = [&](const LabeledCriticalPair& p) { return p.u_hi * store_[p.hi].sig; };
  std::stable_sort(pairs.begin(), pairs.end(), [&](const LabeledCriticalPair& x, const LabeledCriticalPair& y) {
    int c = sig_compare(label(x), label(y));
    if (c != 0) return c < 0;
    if (store_[x.hi].serial != store_[y.hi].serial) return store_[x.hi].serial < store_[y.hi].serial;
    return store_[x.lo].serial < store_[y.lo].serial;
  });

  const PrimeField& k = ring_->field();
  std::vector<ElementId> out;
  for (const auto& p : pairs) {
    const LabeledPolynomial& hi = store_[p.hi];
    const LabeledPolynomial& lo = store_[p.lo];
    if (rewritten(p.u_hi, p.hi) || rewritten(p.u_lo, p.lo)) {
      if (log_ && log_->active()) {
        Event e;
        e.kind = EventKind::spol_rejected;
        e.serial = hi.serial;
        e.other = lo.serial;
        e.sig = label(p);
        e.degree = static_cast<int>(p.degree);
        emit(std::move(e));
      }
      continue;
    }
    // hi and lo are monic, so the leading terms cancel exactly.
    Polynomial s = hi.poly.term_mul(k.one(), p.u_hi).sub_mul(k.one(), p.u_lo, lo.poly);
    std::optional<CofactorVector> cof;
    if (hi.cofactors && lo.cofactors) {
      CofactorVector h;
      h.h.assign(generators_.size(), Polynomial(ring_));
      h.sub_mul(k.neg(k.one()), p.u_hi, *hi.cofactors);
      h.sub_mul(k.one(), p.u_lo, *lo.cofactors);
      cof = std::move(h);
    }
    if (!s.is_zero() && s.lc() != k.one()) {
      FieldElement inv = k.inv(s.lc());
      s = s.scaled(inv);
      if (cof) cof->scale(inv);
    }
    ElementId id = create(label(p), std::move(s), std::move(cof));
    emit([&] {
      Event e = element_event(EventKind::spol, store_[id]);
      e.other = lo.serial;
      return e;
    }());
    add_rule(id);
    out.push_back(id);
  }
  return out;
}

// -- Reduction ------------------------------------------------------------------

void F5Core::apply_phi(LabeledPolynomial& r) const {
  if (r.poly.is_zero() || phi_.empty()) return;
  if (r.cofactors) {
    CofactorVector& h = *r.cofactors;
    r.poly = reduce(r.poly, phi_, ReductionScope::full, [&](std::size_t idx, FieldElement c, const Monomial& m) {
      const LabeledPolynomial& g = store_[previous_[idx]];
      h.sub_mul(c, m, *g.cofactors);
    });
  } else {
    r.poly = reduce(r.poly, phi_, ReductionScope::full);
  }
}

IsReducibleResult F5Core::is_reducible(ElementId r0, std::span<const ElementId> done) const {
  const LabeledPolynomial& r = store_[r0];
  const Monomial& m = r.poly.lm();
  const std::uint32_t mask = m.support_mask();
  IsReducibleResult res;
  auto scan = [&](ElementId cand) {
    const LabeledPolynomial& c = store_[cand];
    const Monomial& lm = c.poly.lm();
    if ((lm.support_mask() & ~mask) != 0 || !lm.divides(m)) return false;
    Monomial u = m.div_unchecked(lm);
    if (!faugere(u, cand) && !rewritten(u, cand) && !(u * c.sig == r.sig)) {
      res.reducer = cand;
      res.flag = false;
      return true;
    }
    res.flag = true;
    return false;
  };
  for (ElementId cand : slice_) {
    if (scan(cand)) return res;
  }
  for (ElementId cand : done) {
    if (scan(cand)) return res;
  }
  return res;
}

std::optional<ElementId> F5Core::top_reduction(ElementId id0, std::span<const ElementId> done,
                                               std::vector<ElementId>& requeue) {
  const PrimeField& k = ring_->field();
  if (store_[id0].poly.is_zero()) {
    ++zero_reductions_;
    emit(element_event(EventKind::zero, store_[id0]));
    return std::nullopt;
  }
  IsReducibleResult red = is_reducible(id0, done);
  if (!red.reducer) {
    LabeledPolynomial& r0 = store_[id0];
    FieldElement lc = r0.poly.lc();
    if (lc != k.one()) {
      FieldElement inv = k.inv(lc);
      r0.poly = r0.poly.scaled(inv);
      if (r0.cofactors) r0.cofactors->scale(inv);
    }
    r0.redundant = red.flag;
    if (r0.cofactors) check_cofactors(r0);
    emit(element_event(EventKind::complete, r0));
    return id0;
  }

  const ElementId id1 = *red.reducer;
  const Monomial u = store_[id0].poly.lm().div_unchecked(store_[id1].poly.lm());
  const Signature usig = u * store_[id1].sig;
  if (sig_compare(usig, store_[id0].sig) < 0) {
    LabeledPolynomial& r0 = store_[id0];
    const LabeledPolynomial& r1 = store_[id1];
    FieldElement c = r0.poly.lc();
    r0.poly = r0.poly.sub_mul(c, u, r1.poly);
    if (r0.cofactors && r1.cofactors) r0.cofactors->sub_mul(c, u, *r1.cofactors);
    if (log_ && log_->active()) {
      Event e = element_event(EventKind::reduce, r0);
      e.other = r1.serial;
      emit(std::move(e));
    }
    requeue.push_back(id0);
    return std::nullopt;
  }

  // u*sig(r1) ≻ sig(r0): the reduction would raise the signature, so the
  // roles swap and a new element u*r1 - r0/lc(r0) carries the larger label.
  const LabeledPolynomial& r0 = store_[id0];
  const LabeledPolynomial& r1 = store_[id1];
  FieldElement inv = k.inv(r0.poly.lc());
  Polynomial p = r1.poly.term_mul(k.one(), u).sub_mul(inv, ring_->one(), r0.poly);
  std::optional<CofactorVector> cof;
  if (r0.cofactors && r1.cofactors) {
    CofactorVector h;
    h.h.assign(generators_.size(), Polynomial(ring_));
    h.sub_mul(k.neg(k.one()), u, *r1.cofactors);
    h.sub_mul(inv, ring_->one(), *r0.cofactors);
    cof = std::move(h);
  }
  const std::uint64_t r0_serial = r0.serial;
  ElementId idn = create(usig, std::move(p), std::move(cof));
  store_[idn].redundant = red.flag;
  if (log_ && log_->active()) {
    Event e = element_event(EventKind::swap, store_[idn]);
    e.other = r0_serial;
    emit(std::move(e));
  }
  add_rule(idn);
  requeue.push_back(idn);
  requeue.push_back(id0);
  return std::nullopt;
}

std::vector<ElementId> F5Core::reduction(std::span<const ElementId> todo_in) {
  auto less = [this](ElementId a, ElementId b) {
    int c = sig_compare(store_[a].sig, store_[b].sig);
    if (c != 0) return c < 0;
    return store_[a].serial < store_[b].serial;
  };
  std::set<ElementId, decltype(less)> todo(less);
  todo.insert(todo_in.begin(), todo_in.end());

  std::vector<ElementId> done;
  std::vector<ElementId> requeue;
  while (!todo.empty()) {
    ElementId id = *todo.begin();
    todo.erase(todo.begin());
    apply_phi(store_[id]);
    requeue.clear();
    if (auto completed = top_reduction(id, done, requeue)) done.push_back(*completed);
    todo.insert(requeue.begin(), requeue.end());
  }
  return done;
}

// -- cofactor audit -------------------------------------------------------------

void F5Core::check_cofactors(const LabeledPolynomial& r) {
  ++audit_.checked;
  std::string failure;
  const CofactorVector& h = *r.cofactors;
  for (std::size_t k = 0; k + 1 < r.sig.index && failure.empty(); ++k) {
    if (!h.h[k].is_zero()) failure = "nonzero cofactor below the index";
  }
  if (failure.empty()) {
    const Polynomial& hi = h.h[r.sig.index - 1];
    if (hi.is_zero() || !(hi.lm() == r.sig.term)) failure = "leading cofactor term differs from the signature";
  }
  if (failure.empty() && !(h.combine(generators_) == r.poly)) failure = "cofactor combination differs";
  if (!failure.empty()) {
    if (audit_.failures++ == 0) {
      audit_.first_failure = "serial " + std::to_string(r.serial) + " sig " + format_signature(r.sig, *ring_) +
                             ": " + failure;
    }
  }
}

}  // namespace f5gb
