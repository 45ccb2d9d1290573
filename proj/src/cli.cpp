#include "f5gb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

#include "f5gb/buchberger.hpp"
#include "f5gb/io.hpp"
#include "f5gb/variants.hpp"

namespace f5gb {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SystemOptions {
  std::string system;
  std::optional<std::uint32_t> characteristic;
  bool homogenize = false;
};

void add_system_options(CLI::App* cmd, SystemOptions& o) {
  cmd->add_option("--system", o.system, "katsura:N | cyclic:N | eco:N | random:a,b,c,seed | file:PATH")
      ->required();
  cmd->add_option("--char", o.characteristic, "field characteristic (default 32003)");
  cmd->add_flag("--homogenize", o.homogenize, "append a homogenizing variable h");
}

PolynomialSystem load_system(const SystemOptions& o) {
  SystemSpec spec;
  try {
    spec = parse_system_spec(o.system);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.characteristic) {
    if (spec.kind == SystemKind::file) throw UsageError("--char does not apply to file systems");
    if (*o.characteristic >= (1u << 31) || !is_prime(*o.characteristic)) {
      throw UsageError("--char must be a prime below 2^31");
    }
    spec.characteristic = *o.characteristic;
  }
  spec.homogenize = o.homogenize;
  return make_system(spec);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

std::string basis_file(const RingPtr& ring, std::span<const Polynomial> reduced) {
  return format_system(ring, reduced, {"reduced-groebner-basis"});
}

void print_metrics(std::ostream& out, const RunMetrics& m) {
  out << "basis_size " << m.basis_size << '\n'
      << "reduced_basis_size " << m.reduced_basis_size << '\n'
      << "d_maxGB " << m.d_maxGB << '\n'
      << "d_term " << m.d_term << '\n'
      << "d_GB_pair " << m.d_GB_pair << '\n'
      << "d_B " << m.d_B << '\n'
      << "d_F " << m.d_F << '\n'
      << "d_FR " << m.d_FR << '\n'
      << "zero_reductions " << m.zero_reductions << '\n';
}

// -- run ------------------------------------------------------------------------

struct RunOptions {
  SystemOptions sys;
  std::string mode = "f5";
  std::optional<unsigned> degree_cap;
  std::string rewritten_critpair = "off";
  bool conjecture_mode = false;
  bool cofactor_audit = false;
  std::string trace, metrics, basis_out;
};

int cmd_run(const RunOptions& o, std::ostream& out, std::ostream& err) {
  PolynomialSystem sys = load_system(o.sys);
  const auto start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return static_cast<long long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  };

  if (o.mode == "buchberger") {
    BuchbergerStats stats;
    std::vector<Polynomial> g = buchberger(sys.polys, {}, &stats);
    std::vector<Polynomial> red = reduced_basis(g);
    RunResult r;
    r.basis = g;
    r.reduced = red;
    r.metrics.basis_size = g.size();
    r.metrics.reduced_basis_size = red.size();
    r.metrics.zero_reductions = stats.zero_reductions;
    for (const auto& p : red) r.metrics.d_maxGB = std::max(r.metrics.d_maxGB, p.degree());
    out << "system " << sys.name << "\nmode buchberger\nstatus terminated\n";
    print_metrics(out, r.metrics);
    if (!o.metrics.empty()) {
      write_text(o.metrics, metrics_csv_header() + "\n" +
                                metrics_csv_row(sys.name, "buchberger", sys.ring->field().characteristic(),
                                                sys.ring->order().kind(), r, elapsed_ms()) +
                                "\n");
    }
    if (!o.basis_out.empty()) write_text(o.basis_out, basis_file(sys.ring, red));
    return exit_code::ok;
  }

  VariantConfig cfg;
  try {
    cfg.mode = parse_mode(o.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cfg.degree_cap = o.degree_cap;
  cfg.rewritten_in_critpair = o.rewritten_critpair == "on";
  cfg.conjecture_mode = o.conjecture_mode;
  cfg.cofactor_audit = o.cofactor_audit;
  if (cfg.mode == Mode::naive_discard && !cfg.degree_cap) throw UsageError("naive-discard requires --degree-cap");

  EventLog log;
  std::ofstream trace;
  if (!o.trace.empty()) {
    trace.open(o.trace, std::ios::binary);
    if (!trace) throw std::runtime_error("cannot write '" + o.trace + "'");
    log.attach(stream_sink(trace, *sys.ring));
  }
  RunResult r = run_variant(sys.polys, cfg, &log);
  const long long ms = elapsed_ms();

  for (const auto& w : r.warnings) err << w << '\n';
  out << "system " << sys.name << "\nmode " << to_string(cfg.mode) << "\nstatus "
      << (r.terminated() ? "terminated" : "degree_cap") << '\n';
  print_metrics(out, r.metrics);
  if (cfg.cofactor_audit) {
    out << "cofactor_checks " << r.cofactors.checked << "\ncofactor_failures " << r.cofactors.failures << '\n';
  }
  if (!o.metrics.empty()) {
    write_text(o.metrics, metrics_csv_header() + "\n" +
                              metrics_csv_row(sys.name, to_string(cfg.mode), sys.ring->field().characteristic(),
                                              sys.ring->order().kind(), r, ms) +
                              "\n");
  }
  if (!o.basis_out.empty() && r.terminated()) write_text(o.basis_out, basis_file(sys.ring, r.reduced));

  if (!r.terminated()) {
    if (cfg.mode == Mode::f5plus) err << "diagnostic: F5+ exceeded the degree cap\n";
    return exit_code::degree_cap;
  }
  if (!r.violations.empty() || r.cofactors.failures != 0) {
    for (const auto& v : r.violations) err << "invariant violation: " << v << '\n';
    if (r.cofactors.failures) err << "cofactor audit failed: " << r.cofactors.first_failure << '\n';
    return exit_code::verification_failed;
  }
  return exit_code::ok;
}

// -- verify ---------------------------------------------------------------------

struct VerifyOptions {
  SystemOptions sys;
  std::string basis;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  PolynomialSystem sys = load_system(o.sys);
  PolynomialSystem b = parse_system(read_file(o.basis));
  if (!(*b.ring == *sys.ring)) {
    err << "basis ring does not match the system ring\n";
    return exit_code::verification_failed;
  }
  std::vector<Polynomial> basis;
  for (const auto& p : b.polys) {
    if (!p.is_zero()) basis.push_back(p);
  }
  bool gb = is_groebner(basis);
  std::vector<Polynomial> mine = reduced_basis(basis);
  std::vector<Polynomial> oracle = reduced_basis(buchberger(sys.polys));
  bool same = mine == oracle;
  out << "is_groebner " << (gb ? "yes" : "no") << "\nsame_ideal_basis " << (same ? "yes" : "no") << '\n';
  if (!gb) err << "check failed: not a Groebner basis\n";
  if (!same) err << "check failed: reduced basis differs from the Buchberger reduced basis\n";
  return gb && same ? exit_code::ok : exit_code::verification_failed;
}

// -- bench ----------------------------------------------------------------------

struct BenchOptions {
  std::string suite;
  std::string out;
  unsigned jobs = 1;
  std::vector<std::string> modes{"f5", "f5plus", "f5b"};
  bool no_timing = false;
  double oracle_budget_s = 120;
};

struct CellOutcome {
  std::string row;
  bool verified = false;
  bool failed = false;
  std::string note;
};

template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < n;) body(k);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<SystemSpec> systems;
  try {
    systems = bench_suite(o.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<Mode> modes;
  for (const auto& m : o.modes) {
    try {
      modes.push_back(parse_mode(m));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (systems.empty() || modes.empty()) throw UsageError("empty suite selection");

  std::vector<PolynomialSystem> built(systems.size());
  std::vector<std::optional<std::vector<Polynomial>>> oracle(systems.size());
  parallel_for(systems.size(), o.jobs, [&](std::size_t k) {
    built[k] = make_system(systems[k]);
    BuchbergerOptions bo;
    bo.deadline = std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(static_cast<long long>(o.oracle_budget_s * 1000));
    BuchbergerStats st;
    std::vector<Polynomial> g = buchberger(built[k].polys, bo, &st);
    if (!st.aborted) oracle[k] = reduced_basis(g);
  });

  const std::size_t ncells = systems.size() * modes.size();
  std::vector<CellOutcome> cells(ncells);
  parallel_for(ncells, o.jobs, [&](std::size_t c) {
    const std::size_t s = c / modes.size();
    const Mode mode = modes[c % modes.size()];
    const PolynomialSystem& sys = built[s];
    CellOutcome& cell = cells[c];
    VariantConfig cfg;
    cfg.mode = mode;
    auto t0 = std::chrono::steady_clock::now();
    RunResult r = run_variant(sys.polys, cfg);
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    cell.row = metrics_csv_row(sys.name, to_string(mode), sys.ring->field().characteristic(),
                               sys.ring->order().kind(), r, o.no_timing ? 0 : ms);
    if (!r.terminated()) {
      cell.failed = true;
      cell.note = "degree cap";
    } else if (!r.violations.empty()) {
      cell.failed = true;
      cell.note = r.violations.front();
    } else if (oracle[s]) {
      cell.verified = true;
      if (!(r.reduced == *oracle[s]) || !is_groebner(r.reduced)) {
        cell.failed = true;
        cell.note = "oracle mismatch";
      }
    } else {
      cell.note = "oracle over budget";
    }
  });

  std::string csv = metrics_csv_header() + "\n";
  for (const auto& c : cells) csv += c.row + "\n";
  write_text(o.out, csv);

  int failures = 0;
  for (std::size_t c = 0; c < ncells; ++c) {
    const CellOutcome& cell = cells[c];
    const std::string label = built[c / modes.size()].name + " " + std::string(to_string(modes[c % modes.size()]));
    out << (cell.failed ? "FAIL " : "ok   ") << label;
    if (cell.verified && !cell.failed) out << " (verified)";
    if (!cell.note.empty()) out << " (" << cell.note << ")";
    out << '\n';
    if (cell.failed) {
      err << "failing cell: " << label << ": " << cell.note << '\n';
      ++failures;
    }
  }
  return failures ? exit_code::verification_failed : exit_code::ok;
}

}  // namespace

std::vector<SystemSpec> bench_suite(const std::string& name) {
  if (name != "smoke" && name != "desk" && name != "full") {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  std::vector<SystemSpec> out;
  auto named = [&](SystemKind kind, unsigned n) {
    SystemSpec s;
    s.kind = kind;
    s.n = n;
    s.homogenize = true;
    out.push_back(s);
  };
  auto random = [&](unsigned a, unsigned b, unsigned c, std::uint64_t seed) {
    SystemSpec s;
    s.kind = SystemKind::random;
    s.random = {a, b, c, seed};
    out.push_back(s);
  };
  if (name == "smoke") {
    named(SystemKind::katsura, 4);
    named(SystemKind::cyclic, 4);
    named(SystemKind::eco, 6);
    random(4, 3, 6, 1);
    return out;
  }
  for (unsigned n = 4; n <= 7; ++n) named(SystemKind::katsura, n);
  for (unsigned n = 4; n <= 6; ++n) named(SystemKind::cyclic, n);
  for (unsigned n = 6; n <= 8; ++n) named(SystemKind::eco, n);
  random(4, 3, 6, 1);
  random(5, 3, 6, 2);
  random(7, 4, 8, 6);
  if (name == "full") {
    named(SystemKind::cyclic, 7);
    named(SystemKind::eco, 10);
    named(SystemKind::katsura, 8);
    named(SystemKind::katsura, 9);
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signature-based Groebner basis computation over prime fields", "f5gb"};
  app.require_subcommand(1);

  RunOptions run;
  CLI::App* run_cmd = app.add_subcommand("run", "compute a Groebner basis");
  add_system_options(run_cmd, run.sys);
  run_cmd->add_option("--mode", run.mode, "f5 | f5plus | f5b | naive-discard | buchberger")
      ->check(CLI::IsMember({"f5", "f5plus", "f5b", "naive-discard", "buchberger"}));
  run_cmd->add_option("--degree-cap", run.degree_cap, "stop once a degree step exceeds N")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--rewritten-critpair", run.rewritten_critpair, "apply the Rewritten criterion in CritPair")
      ->check(CLI::IsMember({"on", "off"}));
  run_cmd->add_flag("--conjecture-mode", run.conjecture_mode, "stop at d_FR (unverified output)");
  run_cmd->add_flag("--cofactor-audit", run.cofactor_audit, "track and check cofactor vectors");
  run_cmd->add_option("--trace", run.trace, "write the event log");
  run_cmd->add_option("--metrics", run.metrics, "write a metrics CSV row");
  run_cmd->add_option("--basis-out", run.basis_out, "write the reduced Groebner basis");

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a basis against a system");
  add_system_options(verify_cmd, verify.sys);
  verify_cmd->add_option("--basis", verify.basis, "basis file")->required();

  BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "run a benchmark suite");
  bench_cmd->add_option("--suite", bench.suite, "smoke | desk | full")->required();
  bench_cmd->add_option("--out", bench.out, "CSV output path")->required();
  bench_cmd->add_option("--jobs", bench.jobs, "parallel runs")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--modes", bench.modes, "modes to run")->delimiter(',');
  bench_cmd->add_flag("--no-timing", bench.no_timing, "write 0 for wall_time_ms");
  bench_cmd->add_option("--oracle-budget", bench.oracle_budget_s, "seconds per Buchberger oracle run");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return exit_code::usage;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
    return cmd_bench(bench, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_code::io_error;
  } catch (const NonHomogeneousInput& e) {
    err << "error: " << e.what() << " (try --homogenize)\n";
    return exit_code::io_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::io_error;
  }
}

}  // namespace f5gb
