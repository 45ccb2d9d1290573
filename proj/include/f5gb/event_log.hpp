#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "f5gb/signature.hpp"

namespace f5gb {

enum class EventKind {
  input,          // generator entered as (F_i, f_i)
  pair,           // critical pair classified by CritPair
  spol,           // labeled s-polynomial created
  spol_rejected,  // pair dropped by the Rewritten criterion in Spol
  rule,           // rule appended
  reduce,         // signature-safe top-reduction step
  swap,           // new element u*r_red - r created by TopReduction
  zero,           // reduction to zero
  complete,       // element returned by Reduction
  degree_step,    // main loop entered a degree
  bound,          // F5B degree bound / F5+ check outcome
  terminate,      // iteration finished
};

std::string_view to_string(EventKind kind);

/// Why CritPair kept or rejected a pair.
enum class PairOutcome { kept, faugere, rewritten, completed_index };

std::string_view to_string(PairOutcome outcome);

struct Event {
  EventKind kind = EventKind::input;
  std::uint64_t serial = 0;
  std::optional<Signature> sig;
  int degree = -1;
  std::optional<Monomial> lm;
  /// Redundant flag for complete; GB flag for pair.
  bool flag = false;
  PairOutcome outcome = PairOutcome::kept;
  bool faugere_hit = false;
  bool rewritten_hit = false;
  /// Pair whose two sides carry the same signature.
  bool equal_signature = false;
  /// Serial of the reducer, or of the other pair member.
  std::uint64_t other = 0;
  std::size_t iteration = 0;
  int value = -1;
  std::string note;
};

/// Line-delimited `event=<kind> serial=<n> sig=<term>#<index> ...`.
std::string format_event(const Event& e, const Ring& ring);

using EventSink = std::function<void(const Event&)>;

/// Fans events out to any number of sinks; emission is skipped entirely when no
/// sink is attached.
class EventLog {
 public:
  void attach(EventSink sink) { sinks_.push_back(std::move(sink)); }
  bool active() const { return !sinks_.empty(); }
  void emit(const Event& e) const {
    for (const auto& s : sinks_) s(e);
  }

 private:
  std::vector<EventSink> sinks_;
};

/// Sink that keeps every event in memory.
class EventRecorder {
 public:
  EventSink sink() {
    return [this](const Event& e) { events_.push_back(e); };
  }
  const std::vector<Event>& events() const { return events_; }

 private:
  std::vector<Event> events_;
};

/// Sink writing formatted lines to a stream.
EventSink stream_sink(std::ostream& out, const Ring& ring);

struct RedundancyAudit {
  bool ok = true;
  std::size_t checked = 0;
  std::string failure;
};

/// Replays input/complete events: every completed element flagged redundant
/// must have its head divisible by the head of an element completed earlier.
RedundancyAudit audit_redundancy(const std::vector<Event>& events, const Ring& ring);

}  // namespace f5gb
