#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "f5gb/event_log.hpp"
#include "f5gb/f5_core.hpp"

namespace f5gb {

enum class Mode { f5, f5plus, f5b, naive_discard };

std::string_view to_string(Mode mode);
/// Accepts f5, f5plus, f5b and naive-discard; throws std::invalid_argument.
Mode parse_mode(std::string_view name);

struct VariantConfig {
  Mode mode = Mode::f5;
  bool rewritten_in_critpair = false;
  /// Required for naive_discard; defaults to default_degree_cap otherwise.
  std::optional<unsigned> degree_cap;
  /// Experimental: stop an iteration once the degree exceeds the running d_FR.
  bool conjecture_mode = false;
  bool cofactor_audit = false;
};

/// 3 + 2 * (sum of input degrees).
unsigned default_degree_cap(std::span<const Polynomial> generators);

struct DegreeCounts {
  std::size_t pairs = 0;
  std::size_t gb_pairs = 0;
  std::size_t spols = 0;
  std::size_t zero_reductions = 0;
  std::size_t completed = 0;
  std::size_t redundant = 0;
};

/// Degree columns; -1 when undefined.
struct RunMetrics {
  int d_maxGB = -1;
  int d_term = -1;
  int d_GB_pair = -1;
  int d_B = -1;
  int d_F = -1;
  int d_FR = -1;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
  std::size_t reduced_basis_size = 0;
  std::map<int, DegreeCounts> per_degree;
};

/// Folds the event stream into the event-derived metric columns.
class MetricsAccumulator {
 public:
  void consume(const Event& e);
  EventSink sink() {
    return [this](const Event& e) { consume(e); };
  }
  const RunMetrics& metrics() const { return m_; }

 private:
  RunMetrics m_;
};

/// Event-derived columns from the log; d_maxGB and the sizes from the bases.
RunMetrics collect_metrics(const std::vector<Event>& events, std::span<const Polynomial> basis,
                           std::span<const Polynomial> reduced);

enum class RunStatus { terminated, degree_cap };

struct RunResult {
  RunStatus status = RunStatus::terminated;
  /// poly(G_1) on termination; the partial basis of the interrupted iteration otherwise.
  std::vector<Polynomial> basis;
  /// reduced_basis(basis); empty for capped runs.
  std::vector<Polynomial> reduced;
  RunMetrics metrics;
  /// Conjecture-mode banner and notes from the d_maxGB <= d_FR monitor.
  std::vector<std::string> warnings;
  /// Broken metric inequalities; a nonempty list fails the run.
  std::vector<std::string> violations;
  bool conjecture_holds = true;
  CofactorAudit cofactors;
  std::size_t elements_created = 0;

  bool terminated() const { return status == RunStatus::terminated; }
};

RunResult run_variant(std::span<const Polynomial> generators, const VariantConfig& config,
                      const EventLog* log = nullptr);

RunResult run_f5(std::span<const Polynomial> generators, VariantConfig config = {}, const EventLog* log = nullptr);
RunResult run_f5plus(std::span<const Polynomial> generators, VariantConfig config = {},
                     const EventLog* log = nullptr);
RunResult run_f5b(std::span<const Polynomial> generators, VariantConfig config = {}, const EventLog* log = nullptr);
RunResult run_naive_discard(std::span<const Polynomial> generators, VariantConfig config,
                            const EventLog* log = nullptr);

std::string metrics_csv_header();
std::string metrics_csv_row(std::string_view system, std::string_view mode, std::uint32_t characteristic,
                            OrderKind order, const RunResult& result, long long wall_time_ms);

}  // namespace f5gb
