#include "f5gb/polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace f5gb {

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// -- construction ------------------------------------------------------------

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  if (!ring) throw StructuralError("polynomial needs a ring");
  const TermOrder& ord = ring->order();
  for (const auto& t : terms) {
    if (t.mono.nvars() != ring->nvars()) throw StructuralError("term has wrong variable count");
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare_unchecked(a.mono, b.mono) > 0; });
  const PrimeField& k = ring->field();
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = k.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  Polynomial p(std::move(ring));
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
#ifndef NDEBUG
  for (std::size_t k = 0; k < terms.size(); ++k) {
    assert(!terms[k].coeff.is_zero());
    assert(k == 0 || p.ring_->order().compare(terms[k - 1].mono, terms[k].mono) > 0);
  }
#endif
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, FieldElement c) {
  return from_terms(std::move(ring), {Term{c, m}});
}

Polynomial Polynomial::constant(RingPtr ring, FieldElement c) {
  Monomial one = ring->one();
  return monomial(std::move(ring), one, c);
}

// -- accessors ---------------------------------------------------------------

const Monomial& Polynomial::lm() const {
  if (terms_.empty()) throw StructuralError("leading monomial of the zero polynomial");
  return terms_.front().mono;
}

FieldElement Polynomial::lc() const {
  if (terms_.empty()) throw StructuralError("leading coefficient of the zero polynomial");
  return terms_.front().coeff;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

Polynomial Polynomial::monic() const {
  Polynomial p = *this;
  p.make_monic();
  return p;
}

void Polynomial::make_monic() {
  if (terms_.empty() || terms_.front().coeff.value == 1) return;
  const PrimeField& k = ring_->field();
  FieldElement inv = k.inv(terms_.front().coeff);
  for (auto& t : terms_) t.coeff = k.mul(t.coeff, inv);
}

void Polynomial::check_same_ring(const Polynomial& q) const {
  if (!ring_ || !q.ring_) throw StructuralError("polynomial without a ring");
  if (!same_ring(ring_, q.ring_)) throw StructuralError("polynomials from different rings");
}

// -- arithmetic --------------------------------------------------------------

Polynomial Polynomial::sub_mul(FieldElement c, const Monomial& m, const Polynomial& q) const {
  check_same_ring(q);
  const PrimeField& k = ring_->field();
  const TermOrder& ord = ring_->order();
  FieldElement negc = k.neg(c);
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  const bool unit = m.is_one();
  auto a = terms_.begin(), ae = terms_.end();
  auto b = q.terms_.begin(), be = q.terms_.end();
  Monomial bm;
  if (b != be) bm = unit ? b->mono : b->mono * m;
  while (a != ae && b != be) {
    int cmp = ord.compare_unchecked(a->mono, bm);
    if (cmp > 0) {
      out.push_back(*a++);
    } else {
      FieldElement bc = k.mul(negc, b->coeff);
      if (cmp == 0) {
        FieldElement s = k.add(a->coeff, bc);
        if (!s.is_zero()) out.push_back({s, a->mono});
        ++a;
      } else {
        if (!bc.is_zero()) out.push_back({bc, bm});
      }
      if (++b != be) bm = unit ? b->mono : b->mono * m;
    }
  }
  out.insert(out.end(), a, ae);
  for (; b != be; ++b) {
    FieldElement bc = k.mul(negc, b->coeff);
    if (!bc.is_zero()) out.push_back({bc, unit ? b->mono : b->mono * m});
  }
  Polynomial r(ring_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
  return sub_mul(FieldElement{1}, q.ring_ ? q.ring_->one() : Monomial(), q);
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  check_same_ring(q);
  return sub_mul(ring_->field().neg(FieldElement{1}), ring_->one(), q);
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(FieldElement{1})); }

Polynomial Polynomial::scaled(FieldElement c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  const PrimeField& k = ring_->field();
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = k.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::term_mul(FieldElement c, const Monomial& m) const {
  if (!ring_) throw StructuralError("polynomial without a ring");
  if (m.nvars() != ring_->nvars()) throw StructuralError("multiplier has wrong variable count");
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  const PrimeField& k = ring_->field();
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({k.mul(t.coeff, c), t.mono * m});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
  check_same_ring(q);
  Polynomial acc(ring_);
  for (const auto& t : terms_) acc = acc.sub_mul(ring_->field().neg(t.coeff), t.mono, q);
  return acc;
}

Polynomial Polynomial::embedded(RingPtr target) const {
  if (!ring_ || !target) throw StructuralError("polynomial without a ring");
  if (target->nvars() < ring_->nvars() ||
      !std::equal(ring_->variables().begin(), ring_->variables().end(), target->variables().begin()) ||
      target->field() != ring_->field()) {
    throw StructuralError("target ring does not extend the source ring");
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.coeff, t.mono.extended(target->nvars())});
  return from_terms(std::move(target), std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const PrimeField& k = ring_->field();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::int64_t c = k.to_signed(terms_[i].coeff);
    bool negative = c < 0;
    std::uint64_t mag = negative ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (i == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Monomial& m = terms_[i].mono;
    if (m.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + '*';
      out += ring_->format(m);
    }
  }
  return out;
}

// -- reducer set ---------------------------------------------------------------

ReducerSet::ReducerSet(std::span<const Polynomial> polys) {
  for (const auto& p : polys) add(p);
}

void ReducerSet::add(const Polynomial& p) {
  if (p.is_zero()) return;
  entries_.push_back({p.lm(), p.lm().support_mask(), &p});
}

long ReducerSet::find_divisor(const Monomial& m) const {
  const std::uint32_t mask = m.support_mask();
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const Entry& e = entries_[k];
    if ((e.mask & ~mask) == 0 && e.lm.divides(m)) return static_cast<long>(k);
  }
  return -1;
}

// -- reduction -----------------------------------------------------------------

namespace {

// One lazily expanded summand coeff * mult * (terms in [pos, end)).
struct Stream {
  const Term* pos;
  const Term* end;
  FieldElement coeff;
  Monomial mult;
  Monomial cur;
  bool unit;
};

}  // namespace

Polynomial reduce(const Polynomial& p, const ReducerSet& reducers, ReductionScope scope,
                  const ReductionObserver& observer) {
  if (p.is_zero() || reducers.empty()) return p;
  const RingPtr& ring = p.ring();
  const PrimeField& k = ring->field();
  const TermOrder& ord = ring->order();

  std::vector<Stream> streams;
  std::vector<std::uint32_t> heap;
  auto heap_less = [&](std::uint32_t a, std::uint32_t b) {
    return ord.compare_unchecked(streams[a].cur, streams[b].cur) < 0;
  };
  auto push = [&](std::uint32_t idx) {
    heap.push_back(idx);
    std::push_heap(heap.begin(), heap.end(), heap_less);
  };

  auto pt = p.terms();
  streams.push_back({pt.data(), pt.data() + pt.size(), FieldElement{1}, ring->one(), pt.front().mono, true});
  push(0);

  std::vector<Term> out;
  bool top_done = false;
  while (!heap.empty()) {
    const Monomial m = streams[heap.front()].cur;
    FieldElement c{0};
    while (!heap.empty() && streams[heap.front()].cur == m) {
      std::pop_heap(heap.begin(), heap.end(), heap_less);
      std::uint32_t idx = heap.back();
      heap.pop_back();
      Stream& s = streams[idx];
      c = k.add(c, k.mul(s.coeff, s.pos->coeff));
      if (++s.pos != s.end) {
        s.cur = s.unit ? s.pos->mono : s.mult * s.pos->mono;
        push(idx);
      }
    }
    if (c.is_zero()) continue;
    long r = top_done ? -1 : reducers.find_divisor(m);
    if (r < 0) {
      out.push_back({c, m});
      if (scope == ReductionScope::top) top_done = true;
      continue;
    }
    const Polynomial& g = reducers.at(static_cast<std::size_t>(r));
    FieldElement factor = k.mul(c, k.inv(g.lc()));
    Monomial mult = m.div_unchecked(g.lm());
    if (observer) observer(static_cast<std::size_t>(r), factor, mult);
    if (g.size() > 1) {
      auto gt = g.terms();
      bool unit = mult.is_one();
      Monomial first = unit ? gt[1].mono : mult * gt[1].mono;
      streams.push_back({gt.data() + 1, gt.data() + gt.size(), k.neg(factor), mult, first, unit});
      push(static_cast<std::uint32_t>(streams.size() - 1));
    }
  }
  return Polynomial::from_sorted_terms(ring, std::move(out));
}

Polynomial normal_form(const Polynomial& p, const ReducerSet& basis) {
  Polynomial r = reduce(p, basis, ReductionScope::full);
  r.make_monic();
  return r;
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis) {
  for (const auto& g : basis) {
    if (!g.is_zero() && !same_ring(g.ring(), p.ring()) && !p.is_zero()) {
      throw StructuralError("normal form across different rings");
    }
  }
  return normal_form(p, ReducerSet(basis));
}

Polynomial spol(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) throw StructuralError("s-polynomial of a zero polynomial");
  if (!same_ring(p.ring(), q.ring())) throw StructuralError("s-polynomial across different rings");
  Monomial gamma = lcm(p.lm(), q.lm());
  Polynomial a = p.term_mul(q.lc(), gamma.div_unchecked(p.lm()));
  Polynomial s = a.sub_mul(p.lc(), gamma.div_unchecked(q.lm()), q);
  s.make_monic();
  return s;
}

bool is_lm_interreduced(std::span<const Polynomial> polys) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].is_zero()) return false;
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (i != j && polys[j].lm().divides(polys[i].lm())) return false;
    }
  }
  return true;
}

std::vector<Polynomial> interreduce(std::span<const Polynomial> polys) {
  std::vector<Polynomial> queue;
  for (const auto& p : polys) {
    if (!p.is_zero()) queue.push_back(p.monic());
  }
  if (queue.empty()) return {};
  const TermOrder& ord = queue.front().ring()->order();
  auto by_lm_desc = [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare_unchecked(a.lm(), b.lm()) > 0;
  };
  std::vector<Polynomial> kept;
  // queue is kept sorted descending so that back() has the smallest lm
  std::stable_sort(queue.begin(), queue.end(), by_lm_desc);
  while (!queue.empty()) {
    Polynomial f = std::move(queue.back());
    queue.pop_back();
    f = reduce(f, ReducerSet(kept), ReductionScope::top);
    if (f.is_zero()) continue;
    f.make_monic();
    std::vector<Polynomial> still;
    for (auto& g : kept) {
      if (f.lm().divides(g.lm())) {
        queue.push_back(std::move(g));
      } else {
        still.push_back(std::move(g));
      }
    }
    kept = std::move(still);
    kept.push_back(std::move(f));
    std::stable_sort(queue.begin(), queue.end(), by_lm_desc);
  }
  std::sort(kept.begin(), kept.end(),
            [&](const Polynomial& a, const Polynomial& b) { return ord.compare_unchecked(a.lm(), b.lm()) < 0; });
  return kept;
}

int total_degree_sum(std::span<const Polynomial> polys) {
  int s = 0;
  for (const auto& p : polys) s += std::max(p.degree(), 0);
  return s;
}

}  // namespace f5gb
