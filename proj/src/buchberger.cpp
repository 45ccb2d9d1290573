#include "f5gb/buchberger.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <tuple>

namespace f5gb {

// -- ledger --------------------------------------------------------------------

void PairLedger::add_element(std::size_t n) {
  if (n != rows_.size()) throw StructuralError("ledger elements must be added in order");
  rows_.emplace_back(n);
}

PairLedger::Cell& PairLedger::cell(std::size_t i, std::size_t j) {
  if (i == j || std::max(i, j) >= rows_.size()) throw StructuralError("no such pair in ledger");
  if (i > j) std::swap(i, j);
  return rows_[j][i];
}

const PairLedger::Cell& PairLedger::cell(std::size_t i, std::size_t j) const {
  if (i == j || std::max(i, j) >= rows_.size()) throw StructuralError("no such pair in ledger");
  if (i > j) std::swap(i, j);
  return rows_[j][i];
}

PairStatus PairLedger::status(std::size_t i, std::size_t j) const { return cell(i, j).status; }

Certificate PairLedger::certificate(std::size_t i, std::size_t j) const { return cell(i, j).cert; }

void PairLedger::mark_treated(std::size_t i, std::size_t j) {
  Cell& c = cell(i, j);
  if (c.status != PairStatus::pending) throw StructuralError("pair already settled");
  c.status = PairStatus::treated;
}

void PairLedger::mark_eliminated(std::size_t i, std::size_t j, Certificate cert, std::size_t witness) {
  Cell& c = cell(i, j);
  if (c.status != PairStatus::pending) throw StructuralError("pair already settled");
  if (cert == Certificate::chain && (!citable(i, witness) || !citable(j, witness))) {
    throw StructuralError("chain certificate cites an unsettled pair");
  }
  c.status = PairStatus::eliminated;
  c.cert = cert;
  c.witness = static_cast<std::uint32_t>(witness);
}

// -- criteria --------------------------------------------------------------------

std::optional<std::size_t> find_chain_witness(std::size_t i, std::size_t j, const Monomial& gamma,
                                              std::span<const Monomial> lms, const CitablePair& citable) {
  const std::uint32_t mask = gamma.support_mask();
  for (std::size_t k = 0; k < lms.size(); ++k) {
    if (k == i || k == j) continue;
    if ((lms[k].support_mask() & ~mask) != 0 || !lms[k].divides(gamma)) continue;
    if (citable(i, k) && citable(j, k)) return k;
  }
  return std::nullopt;
}

bool lcm_criterion(const PairRecord& pair, std::span<const Monomial> lms, const PairLedger& ledger) {
  return find_chain_witness(pair.i, pair.j, pair.gamma, lms,
                            [&](std::size_t a, std::size_t b) { return ledger.citable(a, b); })
      .has_value();
}

// -- Buchberger ------------------------------------------------------------------

std::vector<Polynomial> buchberger(std::span<const Polynomial> generators, const BuchbergerOptions& options,
                                   BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  std::vector<Polynomial> basis = interreduce(generators);
  if (basis.empty()) return basis;

  // deque keeps element addresses stable for the reducer set
  std::deque<Polynomial> store;
  ReducerSet reducers;
  std::vector<Monomial> lms;
  PairLedger ledger;

  using Key = std::tuple<unsigned, std::size_t, std::size_t>;  // degree, i, j
  std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;

  auto insert = [&](Polynomial p) {
    std::size_t n = store.size();
    ledger.add_element(n);
    lms.push_back(p.lm());
    for (std::size_t i = 0; i < n; ++i) {
      queue.emplace(lcm(lms[i], lms[n]).degree(), i, n);
      ++st.pairs;
    }
    store.push_back(std::move(p));
    reducers.add(store.back());
  };
  for (auto& g : basis) insert(std::move(g));

  while (!queue.empty()) {
    if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
      st.aborted = true;
      break;
    }
    auto [deg, i, j] = queue.top();
    queue.pop();
    Monomial gamma = lcm(lms[i], lms[j]);
    if (options.use_criteria) {
      if (gamma == lms[i] * lms[j]) {
        ledger.mark_eliminated(i, j, Certificate::product);
        ++st.product_eliminated;
        continue;
      }
      auto witness = find_chain_witness(i, j, gamma, lms,
                                        [&](std::size_t a, std::size_t b) { return ledger.citable(a, b); });
      if (witness) {
        ledger.mark_eliminated(i, j, Certificate::chain, *witness);
        ++st.chain_eliminated;
        continue;
      }
    }
    Polynomial h = normal_form(spol(store[i], store[j]), reducers);
    ledger.mark_treated(i, j);
    ++st.reductions;
    if (h.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    insert(std::move(h));
  }
  return {store.begin(), store.end()};
}

std::vector<Polynomial> reduced_basis(std::span<const Polynomial> basis) {
  std::vector<Polynomial> sorted;
  for (const auto& g : basis) {
    if (!g.is_zero()) sorted.push_back(g.monic());
  }
  if (sorted.empty()) return sorted;
  const TermOrder& ord = sorted.front().ring()->order();
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare_unchecked(a.lm(), b.lm()) < 0;
  });
  std::vector<Polynomial> minimal;
  ReducerSet lead;
  minimal.reserve(sorted.size());
  for (auto& g : sorted) {
    if (lead.any_divides(g.lm())) continue;
    minimal.push_back(std::move(g));
    lead.add(minimal.back());
  }
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    ReducerSet others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.add(minimal[l]);
    }
    // the leading term is irreducible by a minimal basis, so only tails change
    out.push_back(normal_form(minimal[k], others));
  }
  return out;
}

bool is_groebner(std::span<const Polynomial> basis) {
  ReducerSet reducers(basis);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[j].is_zero()) continue;
      if (!reduce(spol(basis[i], basis[j]), reducers, ReductionScope::top).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace f5gb
