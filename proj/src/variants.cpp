#include "f5gb/variants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "f5gb/buchberger.hpp"

namespace f5gb {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::f5: return "f5";
    case Mode::f5plus: return "f5plus";
    case Mode::f5b: return "f5b";
    case Mode::naive_discard: return "naive-discard";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  if (name == "f5") return Mode::f5;
  if (name == "f5plus") return Mode::f5plus;
  if (name == "f5b") return Mode::f5b;
  if (name == "naive-discard" || name == "naive_discard") return Mode::naive_discard;
  throw std::invalid_argument("unknown mode: " + std::string(name));
}

unsigned default_degree_cap(std::span<const Polynomial> generators) {
  return 3 + 2 * static_cast<unsigned>(total_degree_sum(generators));
}

// -- metrics --------------------------------------------------------------------

void MetricsAccumulator::consume(const Event& e) {
  switch (e.kind) {
    case EventKind::pair: {
      DegreeCounts& c = m_.per_degree[e.degree];
      ++c.pairs;
      if (!e.flag) break;
      ++c.gb_pairs;
      m_.d_GB_pair = std::max(m_.d_GB_pair, e.degree);
      if (!e.faugere_hit && !e.equal_signature) {
        m_.d_F = std::max(m_.d_F, e.degree);
        if (!e.rewritten_hit) m_.d_FR = std::max(m_.d_FR, e.degree);
      }
      break;
    }
    case EventKind::spol: ++m_.per_degree[e.degree].spols; break;
    case EventKind::zero:
      ++m_.zero_reductions;
      ++m_.per_degree[e.degree].zero_reductions;
      break;
    case EventKind::complete: {
      DegreeCounts& c = m_.per_degree[e.degree];
      ++c.completed;
      if (e.flag) ++c.redundant;
      break;
    }
    case EventKind::degree_step: m_.d_term = std::max(m_.d_term, e.degree); break;
    case EventKind::bound:
      if (e.note == "d_B") m_.d_B = std::max(m_.d_B, e.value);
      break;
    default: break;
  }
}

RunMetrics collect_metrics(const std::vector<Event>& events, std::span<const Polynomial> basis,
                           std::span<const Polynomial> reduced) {
  MetricsAccumulator acc;
  for (const auto& e : events) acc.consume(e);
  RunMetrics m = acc.metrics();
  m.basis_size = basis.size();
  m.reduced_basis_size = reduced.size();
  for (const auto& g : reduced) m.d_maxGB = std::max(m.d_maxGB, g.degree());
  return m;
}

// -- main loop ------------------------------------------------------------------

namespace {

struct StarPair {
  std::size_t a, b;  // positions in G_i, a < b
  Monomial gamma;
  unsigned degree;
};

std::uint64_t pair_key(std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(b) << 32) | a;
}

class Driver {
 public:
  Driver(std::span<const Polynomial> generators, const VariantConfig& cfg, const EventLog& log)
      : cfg_(cfg),
        log_(log),
        core_(std::vector<Polynomial>(generators.begin(), generators.end()),
              CriteriaConfig{cfg.rewritten_in_critpair, cfg.cofactor_audit}, &log) {
    cap_ = cfg.degree_cap ? *cfg.degree_cap : default_degree_cap(generators);
  }

  RunStatus run() {
    for (std::size_t i = core_.generator_count(); i >= 1; --i) {
      if (!iteration(i)) return RunStatus::degree_cap;
      core_.end_iteration();
    }
    return RunStatus::terminated;
  }

  F5Core& core() { return core_; }
  bool conjecture_stop() const { return conjecture_stop_; }

 private:
  void emit(Event e) {
    e.iteration = core_.current_index();
    log_.emit(e);
  }

  void emit_step(EventKind kind, int degree, std::string note = {}, int value = -1, bool flag = false) {
    Event e;
    e.kind = kind;
    e.degree = degree;
    e.note = std::move(note);
    e.value = value;
    e.flag = flag;
    emit(std::move(e));
  }

  std::size_t position(ElementId id) const { return pos_of_.at(id); }

  void insert_position(ElementId id) {
    pos_of_[id] = ids_.size();
    ids_.push_back(id);
    lms_.push_back(core_.element(id).lm());
  }

  /// Routes one CritPair outcome into P or P*.
  void route(ElementId r, ElementId other) {
    CritPairResult res = core_.crit_pair(r, other);
    if (res.pair) {
      if (res.gb_flag) {
        d0_ = std::max(d0_, static_cast<int>(res.degree));
      }
      queue_[res.degree].push_back(std::move(*res.pair));
    } else if (cfg_.mode == Mode::f5plus && res.gb_flag && res.outcome != PairOutcome::completed_index) {
      star_.push_back({position(r), position(other), res.gamma, res.degree});
      if (star_.back().a > star_.back().b) std::swap(star_.back().a, star_.back().b);
    }
    if (res.gb_flag && !res.faugere_hit && !res.equal_signature && !res.rewritten_hit) {
      dfr_ = std::max(dfr_, static_cast<int>(res.degree));
    }
  }

  /// Inserts r into G_i, generating its pairs with every earlier element.
  void insert(ElementId r, int step_degree) {
    std::vector<ElementId> partners = core_.current_basis();
    insert_position(r);
    for (ElementId other : partners) route(r, other);
    core_.add_to_basis(r);
    if (cfg_.mode == Mode::f5b) f5b_update(step_degree);
  }

  bool settled(std::size_t a, std::size_t b, int step_degree) const {
    if (a < prev_count_ && b < prev_count_) return true;
    return static_cast<int>(lcm(lms_[a], lms_[b]).degree()) < step_degree;
  }

  // F5B: every new pair not detected by the lcm criterion is stored; stored
  // pairs that the new element now detects are removed for good. A stored
  // pair may be cited only when its lcm strictly divides the detected one,
  // which rules out circular certificates.
  void f5b_update(int step_degree) {
    const std::size_t n = ids_.size() - 1;
    auto citer = [&](const Monomial& gamma) {
      return [&, gamma](std::size_t a, std::size_t b) {
        if (settled(a, b, step_degree)) return true;
        return bstar_keys_.count(pair_key(a, b)) != 0 && !(lcm(lms_[a], lms_[b]) == gamma);
      };
    };
    const std::span<const Monomial> lms(lms_);
    if (!core_.element(ids_[n]).redundant) {
      std::vector<StarPair> fresh;
      for (std::size_t j = 0; j < n; ++j) {
        if (core_.element(ids_[j]).redundant) continue;
        Monomial gamma = lcm(lms_[j], lms_[n]);
        const unsigned deg = gamma.degree();
        fresh.push_back({j, n, std::move(gamma), deg});
      }
      std::stable_sort(fresh.begin(), fresh.end(),
                       [](const StarPair& x, const StarPair& y) { return x.degree < y.degree; });
      for (auto& p : fresh) {
        if (find_chain_witness(p.a, p.b, p.gamma, lms, citer(p.gamma))) continue;
        bstar_keys_.insert(pair_key(p.a, p.b));
        bstar_.push_back(std::move(p));
      }
    }
    const Monomial& ln = lms_[n];
    for (auto& p : bstar_) {
      if (p.b == n || bstar_dead(p)) continue;
      if (!ln.divides(p.gamma)) continue;
      auto citable = citer(p.gamma);
      if (citable(p.a, n) && citable(p.b, n)) bstar_keys_.erase(pair_key(p.a, p.b));
    }
    std::erase_if(bstar_, [&](const StarPair& p) { return bstar_dead(p); });
    int db = -1;
    for (const auto& p : bstar_) db = std::max(db, static_cast<int>(p.degree));
    dB_ = db;
  }

  bool bstar_dead(const StarPair& p) const { return bstar_keys_.count(pair_key(p.a, p.b)) == 0; }

  // F5+: true when every stored GB pair of degree >= d has an lcm certificate
  // citing only pairs that already have standard representations.
  bool f5plus_verified(int d) {
    std::stable_sort(star_.begin(), star_.end(),
                     [](const StarPair& x, const StarPair& y) { return x.degree < y.degree; });
    std::unordered_set<std::uint64_t> verified;
    auto citable = [&](std::size_t a, std::size_t b) {
      return settled(a, b, d) || verified.count(pair_key(a, b)) != 0;
    };
    for (const auto& p : star_) {
      if (!find_chain_witness(p.a, p.b, p.gamma, lms_, citable)) return false;
      verified.insert(pair_key(p.a, p.b));
    }
    return true;
  }

  /// Decides whether degree d is processed; false stops the iteration.
  bool guard(int d) {
    if (cfg_.conjecture_mode && d > dfr_) {
      conjecture_stop_ = true;
      emit_step(EventKind::bound, d, "conjecture_stop", dfr_);
      return false;
    }
    switch (cfg_.mode) {
      case Mode::f5plus: {
        std::erase_if(star_, [&](const StarPair& p) { return static_cast<int>(p.degree) < d; });
        if (d <= d0_) return true;
        bool ok = f5plus_verified(d);
        emit_step(EventKind::bound, d, "lcm_check", d0_, ok);
        return !ok;
      }
      case Mode::f5b:
        if (d > dB_) {
          emit_step(EventKind::bound, d, "d_B_stop", dB_);
          return false;
        }
        return true;
      default: return true;
    }
  }

  bool iteration(std::size_t i) {
    queue_.clear();
    star_.clear();
    bstar_.clear();
    bstar_keys_.clear();
    d0_ = -1;
    dfr_ = -1;
    dB_ = -1;
    ids_ = core_.previous_basis();
    pos_of_.clear();
    lms_.clear();
    for (std::size_t k = 0; k < ids_.size(); ++k) {
      pos_of_[ids_[k]] = k;
      lms_.push_back(core_.element(ids_[k]).lm());
    }
    prev_count_ = ids_.size();

    ElementId ri = core_.begin_iteration(i);
    // r_i itself is in the slice already; pair it with G_{i+1} only.
    insert_position(ri);
    for (ElementId other : core_.previous_basis()) route(ri, other);
    if (cfg_.mode == Mode::f5b) f5b_update(static_cast<int>(core_.element(ri).poly.degree()));

    int last = -1;
    while (!queue_.empty()) {
      const int d = static_cast<int>(queue_.begin()->first);
      if (d < last) throw StructuralError("degree steps out of order");
      last = d;
      if (!guard(d)) {
        queue_.clear();
        break;
      }
      if (d > static_cast<int>(cap_)) {
        emit_step(EventKind::terminate, d, "degree_cap", static_cast<int>(cap_));
        return false;
      }
      emit_step(EventKind::degree_step, d);
      std::vector<LabeledCriticalPair> pd = std::move(queue_.begin()->second);
      queue_.erase(queue_.begin());
      if (cfg_.mode == Mode::naive_discard) {
        std::erase_if(pd, [](const LabeledCriticalPair& p) { return !p.gb_flag; });
      }
      std::vector<ElementId> f = core_.spol(std::move(pd));
      std::vector<ElementId> rd = core_.reduction(f);
      for (ElementId r : rd) insert(r, d);
    }
    if (cfg_.mode == Mode::f5b) {
      dB_run_ = std::max(dB_run_, dB_);
      emit_step(EventKind::bound, last, "d_B", dB_run_);
    }
    emit_step(EventKind::terminate, last, "complete");
    return true;
  }

  VariantConfig cfg_;
  const EventLog& log_;
  F5Core core_;
  unsigned cap_ = 0;

  std::map<unsigned, std::vector<LabeledCriticalPair>> queue_;
  std::vector<ElementId> ids_;
  std::unordered_map<ElementId, std::size_t> pos_of_;
  std::vector<Monomial> lms_;
  std::size_t prev_count_ = 0;

  std::vector<StarPair> star_;
  std::vector<StarPair> bstar_;
  std::unordered_set<std::uint64_t> bstar_keys_;
  int d0_ = -1;
  int dfr_ = -1;
  int dB_ = -1;
  int dB_run_ = -1;
  bool conjecture_stop_ = false;
};

}  // namespace

RunResult run_variant(std::span<const Polynomial> generators, const VariantConfig& config, const EventLog* log) {
  if (config.mode == Mode::naive_discard && !config.degree_cap) {
    throw std::invalid_argument("naive-discard requires a degree cap");
  }
  MetricsAccumulator acc;
  EventLog local;
  local.attach(acc.sink());
  if (log && log->active()) local.attach([log](const Event& e) { log->emit(e); });

  Driver driver(generators, config, local);
  RunResult result;
  result.status = driver.run();
  F5Core& core = driver.core();
  result.basis = core.basis_polynomials();
  result.cofactors = core.cofactor_audit();
  result.elements_created = core.element_count();
  if (result.terminated()) result.reduced = reduced_basis(result.basis);

  RunMetrics m = acc.metrics();
  m.basis_size = result.basis.size();
  m.reduced_basis_size = result.reduced.size();
  for (const auto& g : result.reduced) m.d_maxGB = std::max(m.d_maxGB, g.degree());
  result.metrics = m;

  if (config.conjecture_mode) {
    result.warnings.push_back(
        "WARNING: conjecture mode stops at d_FR without a termination proof; the output is unverified");
  }
  if (result.terminated()) {
    if (!(m.d_FR <= m.d_F)) result.violations.push_back("d_FR <= d_F fails");
    // Pairs that only pass Faugere's criterion reach a degree step only when
    // CritPair ignores the Rewritten criterion and no early stop is active.
    // F5B and conjecture mode both stop before the remaining pairs are entered.
    const bool early_stop = config.conjecture_mode || config.mode == Mode::f5b;
    if (!config.rewritten_in_critpair && !early_stop) {
      if (!(m.d_F <= m.d_term)) result.violations.push_back("d_F <= d_term fails");
    } else if (!early_stop && !(m.d_FR <= m.d_term)) {
      result.violations.push_back("d_FR <= d_term fails");
    }
    if (!(m.d_maxGB <= m.d_term) && m.d_term >= 0) result.violations.push_back("d_maxGB <= d_term fails");
    if (config.mode != Mode::naive_discard && !config.conjecture_mode) {
      // Inputs are in the basis from the start, so only degrees above the
      // largest input degree can depend on the stop rule.
      int bound = m.d_FR;
      for (const auto& g : generators) bound = std::max(bound, static_cast<int>(g.degree()));
      result.conjecture_holds = m.d_maxGB <= bound;
      if (!result.conjecture_holds) {
        result.warnings.push_back("possible counterexample to the d_FR termination conjecture: d_maxGB=" + std::to_string(m.d_maxGB) +
                                  " > d_FR=" + std::to_string(m.d_FR));
      }
    }
  }
  return result;
}

RunResult run_f5(std::span<const Polynomial> generators, VariantConfig config, const EventLog* log) {
  config.mode = Mode::f5;
  return run_variant(generators, config, log);
}

RunResult run_f5plus(std::span<const Polynomial> generators, VariantConfig config, const EventLog* log) {
  config.mode = Mode::f5plus;
  return run_variant(generators, config, log);
}

RunResult run_f5b(std::span<const Polynomial> generators, VariantConfig config, const EventLog* log) {
  config.mode = Mode::f5b;
  return run_variant(generators, config, log);
}

RunResult run_naive_discard(std::span<const Polynomial> generators, VariantConfig config, const EventLog* log) {
  config.mode = Mode::naive_discard;
  return run_variant(generators, config, log);
}

std::string metrics_csv_header() {
  return "system,mode,char,order,terminated,d_maxGB,d_term,d_GB_pair,d_B,d_F,d_FR,zero_reductions,basis_size,"
         "reduced_basis_size,wall_time_ms";
}

std::string metrics_csv_row(std::string_view system, std::string_view mode, std::uint32_t characteristic,
                            OrderKind order, const RunResult& r, long long wall_time_ms) {
  const RunMetrics& m = r.metrics;
  std::ostringstream out;
  out << system << ',' << mode << ',' << characteristic << ',' << to_string(order) << ','
      << (r.terminated() ? 1 : 0) << ',' << m.d_maxGB << ',' << m.d_term << ',' << m.d_GB_pair << ',' << m.d_B << ','
      << m.d_F << ',' << m.d_FR << ',' << m.zero_reductions << ',' << m.basis_size << ',' << m.reduced_basis_size
      << ',' << wall_time_ms;
  return out.str();
}

}  // namespace f5gb
