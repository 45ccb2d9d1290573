#include "f5gb/event_log.hpp"

#include <ostream>
#include <sstream>

namespace f5gb {

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::input: return "input";
    case EventKind::pair: return "pair";
    case EventKind::spol: return "spol";
    case EventKind::spol_rejected: return "spol_rejected";
    case EventKind::rule: return "rule";
    case EventKind::reduce: return "reduce";
    case EventKind::swap: return "swap";
    case EventKind::zero: return "zero";
    case EventKind::complete: return "complete";
    case EventKind::degree_step: return "degree";
    case EventKind::bound: return "bound";
    case EventKind::terminate: return "terminate";
  }
  return "?";
}

std::string_view to_string(PairOutcome outcome) {
  switch (outcome) {
    case PairOutcome::kept: return "kept";
    case PairOutcome::faugere: return "faugere";
    case PairOutcome::rewritten: return "rewritten";
    case PairOutcome::completed_index: return "completed_index";
  }
  return "?";
}

std::string format_event(const Event& e, const Ring& ring) {
  std::ostringstream out;
  out << "event=" << to_string(e.kind) << " serial=" << e.serial;
  if (e.sig) out << " sig=" << format_signature(*e.sig, ring);
  if (e.degree >= 0) out << " deg=" << e.degree;
  if (e.lm) out << " lm=" << ring.format(*e.lm);
  switch (e.kind) {
    case EventKind::complete: out << " redundant=" << (e.flag ? 1 : 0); break;
    case EventKind::pair:
      out << " other=" << e.other << " gb=" << (e.flag ? 1 : 0) << " outcome=" << to_string(e.outcome)
          << " faugere=" << (e.faugere_hit ? 1 : 0) << " rewritten=" << (e.rewritten_hit ? 1 : 0)
          << " equal_sig=" << (e.equal_signature ? 1 : 0);
      break;
    case EventKind::reduce:
    case EventKind::swap:
    case EventKind::spol:
    case EventKind::spol_rejected: out << " other=" << e.other; break;
    default: break;
  }
  if (e.value >= 0) out << " value=" << e.value;
  if (e.iteration) out << " iter=" << e.iteration;
  if (!e.note.empty()) out << " note=" << e.note;
  return out.str();
}

EventSink stream_sink(std::ostream& out, const Ring& ring) {
  return [&out, &ring](const Event& e) { out << format_event(e, ring) << '\n'; };
}

RedundancyAudit audit_redundancy(const std::vector<Event>& events, const Ring& ring) {
  RedundancyAudit audit;
  std::vector<Monomial> heads;
  for (const auto& e : events) {
    if ((e.kind != EventKind::input && e.kind != EventKind::complete) || !e.lm) continue;
    if (e.kind == EventKind::complete && e.flag) {
      ++audit.checked;
      bool found = false;
      for (const auto& h : heads) {
        if (h.divides(*e.lm)) {
          found = true;
          break;
        }
      }
      if (!found && audit.ok) {
        audit.ok = false;
        audit.failure = "redundant element serial=" + std::to_string(e.serial) + " lm=" + ring.format(*e.lm) +
                        " has no earlier divisor";
      }
    }
    heads.push_back(*e.lm);
  }
  return audit;
}

}  // namespace f5gb
