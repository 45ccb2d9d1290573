#include "f5gb/systems.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "f5gb/io.hpp"

namespace f5gb {

std::string_view to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::katsura: return "katsura";
    case SystemKind::cyclic: return "cyclic";
    case SystemKind::eco: return "eco";
    case SystemKind::random: return "random";
    case SystemKind::file: return "file";
  }
  return "?";
}

std::string SystemSpec::label() const {
  switch (kind) {
    case SystemKind::random:
      return "random:" + std::to_string(random.generators) + "," + std::to_string(random.max_degree) + "," +
             std::to_string(random.variables) + "," + std::to_string(random.seed);
    case SystemKind::file: return "file:" + path;
    default: return std::string(to_string(kind)) + ":" + std::to_string(n);
  }
}

namespace {

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

SystemSpec parse_system_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("system spec needs '<kind>:<args>'");
  std::string_view kind = text.substr(0, colon);
  std::string_view args = text.substr(colon + 1);
  SystemSpec spec;
  if (kind == "file") {
    if (args.empty()) throw std::invalid_argument("file: needs a path");
    spec.kind = SystemKind::file;
    spec.path = std::string(args);
    return spec;
  }
  if (kind == "random") {
    spec.kind = SystemKind::random;
    std::vector<std::uint64_t> v;
    std::size_t start = 0;
    while (start <= args.size()) {
      auto comma = args.find(',', start);
      if (comma == std::string_view::npos) comma = args.size();
      v.push_back(parse_uint(args.substr(start, comma - start), "random parameter"));
      start = comma + 1;
    }
    if (v.size() != 4) throw std::invalid_argument("random: needs a,b,c,seed");
    if (v[0] == 0 || v[1] == 0 || v[2] == 0) throw std::invalid_argument("random: a, b and c must be positive");
    spec.random = {static_cast<unsigned>(v[0]), static_cast<unsigned>(v[1]), static_cast<unsigned>(v[2]), v[3]};
    return spec;
  }
  if (kind == "katsura") {
    spec.kind = SystemKind::katsura;
  } else if (kind == "cyclic") {
    spec.kind = SystemKind::cyclic;
  } else if (kind == "eco") {
    spec.kind = SystemKind::eco;
  } else {
    throw std::invalid_argument("unknown system kind '" + std::string(kind) + "'");
  }
  spec.n = static_cast<unsigned>(parse_uint(args, "system size"));
  if (spec.n < 2) throw std::invalid_argument("named systems need n >= 2");
  return spec;
}

// -- named families -------------------------------------------------------------

namespace {

Monomial mono(const RingPtr& ring, std::initializer_list<std::size_t> vars) {
  Monomial m = ring->one();
  for (std::size_t v : vars) m.set(v, m[v] + 1);
  return m;
}

void add_term(std::vector<Term>& terms, const RingPtr& ring, std::int64_t c, const Monomial& m) {
  terms.push_back({ring->field().from_int(c), m});
}

void require_vars(const RingPtr& ring, std::size_t n) {
  if (ring->nvars() < n) throw std::invalid_argument("ring has too few variables for the system");
}

}  // namespace

std::vector<Polynomial> katsura(const RingPtr& ring, unsigned n) {
  if (n < 2) throw std::invalid_argument("katsura needs n >= 2");
  require_vars(ring, n + 1);
  // u_l for |l| <= n maps to variable |l|, nothing otherwise
  auto u = [n](long l) -> long { return std::labs(l) <= static_cast<long>(n) ? std::labs(l) : -1; };
  std::vector<Polynomial> out;
  {
    std::vector<Term> t;
    add_term(t, ring, 1, mono(ring, {0}));
    for (unsigned k = 1; k <= n; ++k) add_term(t, ring, 2, mono(ring, {k}));
    add_term(t, ring, -1, ring->one());
    out.push_back(Polynomial::from_terms(ring, std::move(t)));
  }
  for (long m = 0; m < static_cast<long>(n); ++m) {
    std::vector<Term> t;
    for (long l = -static_cast<long>(n); l <= static_cast<long>(n); ++l) {
      long a = u(l), b = u(m - l);
      if (a < 0 || b < 0) continue;
      add_term(t, ring, 1, mono(ring, {static_cast<std::size_t>(a), static_cast<std::size_t>(b)}));
    }
    add_term(t, ring, -1, mono(ring, {static_cast<std::size_t>(m)}));
    out.push_back(Polynomial::from_terms(ring, std::move(t)));
  }
  return out;
}

std::vector<Polynomial> cyclic(const RingPtr& ring, unsigned n) {
  if (n < 2) throw std::invalid_argument("cyclic needs n >= 2");
  require_vars(ring, n);
  std::vector<Polynomial> out;
  for (unsigned k = 1; k < n; ++k) {
    std::vector<Term> t;
    for (unsigned i = 0; i < n; ++i) {
      Monomial m = ring->one();
      for (unsigned j = 0; j < k; ++j) m.set((i + j) % n, m[(i + j) % n] + 1);
      add_term(t, ring, 1, m);
    }
    out.push_back(Polynomial::from_terms(ring, std::move(t)));
  }
  Monomial all = ring->one();
  for (unsigned i = 0; i < n; ++i) all.set(i, 1);
  std::vector<Term> t;
  add_term(t, ring, 1, all);
  add_term(t, ring, -1, ring->one());
  out.push_back(Polynomial::from_terms(ring, std::move(t)));
  return out;
}

std::vector<Polynomial> eco(const RingPtr& ring, unsigned n) {
  if (n < 2) throw std::invalid_argument("eco needs n >= 2");
  require_vars(ring, n);
  const std::size_t xn = n - 1;
  std::vector<Polynomial> out;
  for (unsigned k = 1; k < n; ++k) {
    std::vector<Term> t;
    add_term(t, ring, 1, mono(ring, {k - 1, xn}));
    for (unsigned i = 1; i + k + 1 <= n; ++i) {
      add_term(t, ring, 1, mono(ring, {i - 1, i + k - 1, xn}));
    }
    add_term(t, ring, -static_cast<std::int64_t>(k), ring->one());
    out.push_back(Polynomial::from_terms(ring, std::move(t)));
  }
  std::vector<Term> t;
  for (unsigned i = 0; i + 1 < n; ++i) add_term(t, ring, 1, mono(ring, {i}));
  add_term(t, ring, 1, ring->one());
  out.push_back(Polynomial::from_terms(ring, std::move(t)));
  return out;
}

std::size_t named_variable_count(SystemKind kind, unsigned n) {
  switch (kind) {
    case SystemKind::katsura: return n + 1;
    case SystemKind::cyclic:
    case SystemKind::eco: return n;
    default: throw std::invalid_argument("not a named system family");
  }
}

std::vector<Polynomial> gen_named(SystemKind kind, unsigned n, std::uint32_t characteristic, OrderKind order) {
  if (n < 2) throw std::invalid_argument("named systems need n >= 2");
  RingPtr ring = make_ring(characteristic, indexed_variables(named_variable_count(kind, n)), order);
  switch (kind) {
    case SystemKind::katsura: return katsura(ring, n);
    case SystemKind::cyclic: return cyclic(ring, n);
    case SystemKind::eco: return eco(ring, n);
    default: throw std::invalid_argument("not a named system family");
  }
}

// -- random systems -------------------------------------------------------------

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t v = next();
    if (v < limit) return v % bound;
  }
}

std::uint64_t monomial_count(unsigned degree, unsigned variables) {
  if (variables == 0) return degree == 0 ? 1 : 0;
  // C(degree + variables - 1, variables - 1), computed incrementally
  std::uint64_t r = 1;
  for (unsigned k = 1; k < variables; ++k) r = r * (degree + k) / k;
  return r;
}

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, unsigned degree) {
  const std::size_t n = ring->nvars();
  std::vector<Monomial> out;
  Monomial m = ring->one();
  // exponent vectors in lexicographically decreasing order, then sorted
  auto rec = [&](auto&& self, std::size_t k, unsigned left) -> void {
    if (k + 1 == n) {
      m.set(k, left);
      out.push_back(m);
      m.set(k, 0);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(k, e);
      self(self, k + 1, left - e);
    }
    m.set(k, 0);
  };
  if (n > 0) rec(rec, 0, degree);
  const TermOrder& ord = ring->order();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.less(b, a); });
  return out;
}

std::pair<std::size_t, std::size_t> random_term_band(std::uint64_t count) {
  auto lo = static_cast<std::size_t>(std::ceil(0.10 * static_cast<double>(count) - 1e-9));
  auto hi = static_cast<std::size_t>(std::floor(0.15 * static_cast<double>(count) + 1e-9));
  lo = std::max<std::size_t>(lo, 1);
  if (lo > hi) {
    auto k = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(0.125 * static_cast<double>(count))));
    return {k, k};
  }
  return {lo, hi};
}

std::vector<Polynomial> gen_random(const RandomParams& params, std::uint32_t characteristic, OrderKind order) {
  if (params.generators == 0 || params.max_degree == 0 || params.variables == 0) {
    throw std::invalid_argument("random systems need positive a, b and c");
  }
  RingPtr ring = make_ring(characteristic, indexed_variables(params.variables), order);
  const PrimeField& k = ring->field();
  SplitMix64 rng(params.seed);
  std::vector<Polynomial> out;
  for (unsigned g = 0; g < params.generators; ++g) {
    const auto d = static_cast<unsigned>(rng.between(1, params.max_degree));
    std::vector<Monomial> all = monomials_of_degree(ring, d);
    auto [lo, hi] = random_term_band(all.size());
    const std::size_t count = static_cast<std::size_t>(rng.between(lo, hi));
    // partial Fisher-Yates: the first `count` slots become the sample
    for (std::size_t s = 0; s < count; ++s) {
      std::size_t pick = s + static_cast<std::size_t>(rng.below(all.size() - s));
      std::swap(all[s], all[pick]);
    }
    std::vector<Term> terms;
    for (std::size_t s = 0; s < count; ++s) {
      FieldElement c{static_cast<std::uint32_t>(1 + rng.below(k.characteristic() - 1))};
      terms.push_back({c, all[s]});
    }
    Polynomial p = Polynomial::from_terms(ring, std::move(terms));
    if (!p.is_homogeneous()) throw StructuralError("random generator is not homogeneous");
    out.push_back(std::move(p));
  }
  return out;
}

// -- homogenization -------------------------------------------------------------

std::vector<Polynomial> homogenize(std::span<const Polynomial> polys, std::string_view name) {
  if (polys.empty()) return {};
  const RingPtr& src = polys.front().ring();
  std::vector<std::string> vars = src->variables();
  std::string h(name);
  while (src->variable_index(h) >= 0) h += "_";
  vars.push_back(h);
  RingPtr dst = std::make_shared<const Ring>(src->field(), std::move(vars), src->order().kind());
  const std::size_t hv = dst->nvars() - 1;
  std::vector<Polynomial> out;
  for (const auto& f : polys) {
    if (!same_ring(f.ring(), src) && !f.is_zero()) throw StructuralError("homogenize across different rings");
    const int d = f.degree();
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      Monomial m = t.mono.extended(dst->nvars());
      m.set(hv, static_cast<unsigned>(d) - t.mono.degree());
      terms.push_back({t.coeff, m});
    }
    out.push_back(Polynomial::from_terms(dst, std::move(terms)));
  }
  return out;
}

std::vector<Polynomial> dehomogenize(std::span<const Polynomial> polys) {
  if (polys.empty()) return {};
  const RingPtr& src = polys.front().ring();
  if (src->nvars() < 2) throw StructuralError("cannot drop the only variable");
  std::vector<std::string> vars = src->variables();
  vars.pop_back();
  RingPtr dst = std::make_shared<const Ring>(src->field(), std::move(vars), src->order().kind());
  std::vector<Polynomial> out;
  for (const auto& f : polys) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      Monomial m = dst->one();
      for (std::size_t k = 0; k < dst->nvars(); ++k) m.set(k, t.mono[k]);
      terms.push_back({t.coeff, m});
    }
    out.push_back(Polynomial::from_terms(dst, std::move(terms)));
  }
  return out;
}

// -- pipeline -------------------------------------------------------------------

PolynomialSystem make_system(const SystemSpec& spec) {
  PolynomialSystem sys;
  sys.name = spec.label();
  std::vector<Polynomial> polys;
  bool keep_order = false;
  switch (spec.kind) {
    case SystemKind::katsura:
    case SystemKind::cyclic:
    case SystemKind::eco: polys = gen_named(spec.kind, spec.n, spec.characteristic, spec.order); break;
    case SystemKind::random: polys = gen_random(spec.random, spec.characteristic, spec.order); break;
    case SystemKind::file: {
      PolynomialSystem loaded = parse_system(read_file(spec.path));
      sys.ring = loaded.ring;
      polys = std::move(loaded.polys);
      keep_order = true;
      break;
    }
  }
  if (!polys.empty()) sys.ring = polys.front().ring();
  if (spec.homogenize && !polys.empty()) {
    polys = homogenize(polys);
    sys.ring = polys.front().ring();
  }
  std::erase_if(polys, [](const Polynomial& p) { return p.is_zero(); });
  if (keep_order && is_lm_interreduced(polys)) {
    for (auto& p : polys) p.make_monic();
    sys.polys = std::move(polys);
  } else {
    // Descending lm order: the incremental driver starts from the last
    // generator, so the smallest one enters first.
    sys.polys = interreduce(polys);
    std::reverse(sys.polys.begin(), sys.polys.end());
  }
  if (!is_lm_interreduced(sys.polys)) throw StructuralError("system is not interreduced");
  return sys;
}

}  // namespace f5gb
