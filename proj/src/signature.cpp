#include "f5gb/signature.hpp"

namespace f5gb {

int sig_cmp(const Signature& a, const Signature& b, const TermOrder& order) {
  if (a.index != b.index) return a.index > b.index ? -1 : 1;
  return order.compare(a.term, b.term);
}

std::string format_signature(const Signature& s, const Ring& ring) {
  return ring.format(s.term) + "#" + std::to_string(s.index);
}

void CofactorVector::sub_mul(FieldElement c, const Monomial& u, const CofactorVector& other) {
  if (h.size() != other.h.size()) throw StructuralError("cofactor vectors of different length");
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (!other.h[k].is_zero()) h[k] = h[k].sub_mul(c, u, other.h[k]);
  }
}

void CofactorVector::scale(FieldElement c) {
  for (auto& p : h) p = p.scaled(c);
}

Polynomial CofactorVector::combine(std::span<const Polynomial> generators) const {
  if (generators.size() != h.size()) throw StructuralError("cofactor vector length mismatch");
  Polynomial acc(generators.front().ring());
  for (std::size_t k = 0; k < h.size(); ++k) acc = acc + h[k] * generators[k];
  return acc;
}

void RuleList::add(std::size_t index, const Monomial& term, std::uint64_t serial) {
  if (index == 0) throw StructuralError("rule indices are 1-based");
  if (index > rules_.size()) rules_.resize(index);
  auto& list = rules_[index - 1];
  if (!list.empty() && list.back().serial >= serial) throw StructuralError("rule serials must increase");
  list.push_back({term, serial});
}

std::span<const Rule> RuleList::rules(std::size_t index) const {
  if (index == 0 || index > rules_.size()) return {};
  return rules_[index - 1];
}

std::size_t RuleList::size() const {
  std::size_t n = 0;
  for (const auto& l : rules_) n += l.size();
  return n;
}

void LeadTermIndex::add(std::size_t index, const Monomial& lm) {
  entries_.push_back({index, lm, lm.support_mask()});
}

bool LeadTermIndex::divisible_above(std::size_t index, const Monomial& m) const {
  const std::uint32_t mask = m.support_mask();
  for (const auto& e : entries_) {
    if (e.index > index && (e.mask & ~mask) == 0 && e.lm.divides(m)) return true;
  }
  return false;
}

bool faugere_detected(const Monomial& u, const LabeledPolynomial& r, const LeadTermIndex& previous) {
  return previous.divisible_above(r.index(), u * r.sig.term);
}

bool rewritten_detected(const Monomial& u, const LabeledPolynomial& r, const RuleList& rules) {
  const Monomial target = u * r.sig.term;
  const std::uint32_t mask = target.support_mask();
  auto list = rules.rules(r.index());
  for (std::size_t k = list.size(); k-- > 0;) {
    const Rule& rule = list[k];
    if (rule.serial <= r.serial) break;
    if (rule.term.degree() <= target.degree() && (rule.term.support_mask() & ~mask) == 0 &&
        rule.term.divides(target)) {
      return true;
    }
  }
  return false;
}

}  // namespace f5gb
