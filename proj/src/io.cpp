#include "f5gb/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace f5gb {

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text, std::size_t line, std::size_t column0)
      : ring_(ring), s_(text), line_(line), col0_(column0) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(terms, negative);
      skip_ws();
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col0_ + pos_); }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
  }

  std::uint64_t number() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (~std::uint64_t{0} - 9) / 10) fail("number too large");
      v = v * 10 + static_cast<unsigned>(peek() - '0');
      ++pos_;
    }
    return v;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  // term := factor ('*' factor)*, factor := number | var ('^' number)?
  void parse_term(std::vector<Term>& terms, bool negative) {
    const PrimeField& k = ring_->field();
    FieldElement coeff = k.one();
    Monomial m = ring_->one();
    for (;;) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::uint64_t v = number();
        coeff = k.mul(coeff, k.from_int(static_cast<std::int64_t>(v % k.characteristic())));
      } else if (ident_start(peek())) {
        std::size_t start = pos_;
        while (!at_end() && ident_char(peek())) ++pos_;
        std::string_view name = s_.substr(start, pos_ - start);
        int var = ring_->variable_index(name);
        if (var < 0) {
          pos_ = start;
          fail("unknown variable '" + std::string(name) + "'");
        }
        unsigned e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          std::uint64_t v = number();
          if (v > Monomial::kMaxExponent) fail("exponent too large");
          e = static_cast<unsigned>(v);
        }
        unsigned total = m[static_cast<std::size_t>(var)] + e;
        if (total > Monomial::kMaxExponent) fail("exponent too large");
        m.set(static_cast<std::size_t>(var), total);
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (negative) coeff = k.neg(coeff);
    terms.push_back({coeff, m});
  }

  const RingPtr& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col0_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

RingPtr parse_header(std::string_view line, std::size_t lineno) {
  std::size_t pos = 0;
  auto word = [&]() -> std::pair<std::string_view, std::size_t> {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    return {line.substr(start, pos - start), start + 1};
  };
  auto [kw, kwcol] = word();
  if (kw != "ring") throw ParseError("expected header 'ring char=<p> vars=<...> order=<...>'", lineno, kwcol);

  std::optional<std::uint32_t> characteristic;
  std::vector<std::string> vars;
  OrderKind order = OrderKind::degrevlex;
  bool have_vars = false, have_order = false;
  for (;;) {
    auto [w, col] = word();
    if (w.empty()) break;
    auto eq = w.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value", lineno, col);
    std::string_view key = w.substr(0, eq), value = w.substr(eq + 1);
    const std::size_t vcol = col + eq + 1;
    if (key == "char") {
      std::uint64_t p = 0;
      for (char c : value) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || p > (1ull << 32)) {
          throw ParseError("invalid characteristic", lineno, vcol);
        }
        p = p * 10 + static_cast<unsigned>(c - '0');
      }
      if (value.empty() || p >= (1ull << 31) || !is_prime(p)) {
        throw ParseError("characteristic must be a prime below 2^31", lineno, vcol);
      }
      characteristic = static_cast<std::uint32_t>(p);
    } else if (key == "vars") {
      std::size_t start = 0;
      while (start <= value.size()) {
        auto comma = value.find(',', start);
        if (comma == std::string_view::npos) comma = value.size();
        std::string_view v = value.substr(start, comma - start);
        bool ok = !v.empty() && (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_');
        for (char c : v) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        if (!ok) throw ParseError("invalid variable name", lineno, vcol + start);
        vars.emplace_back(v);
        start = comma + 1;
      }
      have_vars = true;
    } else if (key == "order") {
      if (value == "degrevlex") {
        order = OrderKind::degrevlex;
      } else if (value == "lex") {
        order = OrderKind::lex;
      } else {
        throw ParseError("order must be degrevlex or lex", lineno, vcol);
      }
      have_order = true;
    } else {
      throw ParseError("unknown header key '" + std::string(key) + "'", lineno, col);
    }
  }
  if (!characteristic) throw ParseError("header lacks char=", lineno, 1);
  if (!have_vars) throw ParseError("header lacks vars=", lineno, 1);
  if (!have_order) throw ParseError("header lacks order=", lineno, 1);
  try {
    return make_ring(*characteristic, std::move(vars), order);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), lineno, 1);
  }
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line, std::size_t column0) {
  return PolyParser(ring, text, line, column0).parse();
}

PolynomialSystem parse_system(std::string_view text) {
  PolynomialSystem sys;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(start, nl - start);
    start = nl + 1;
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!sys.ring) {
      sys.ring = parse_header(raw, lineno);
      continue;
    }
    const std::size_t offset = static_cast<std::size_t>(line.data() - raw.data());
    sys.polys.push_back(parse_polynomial(sys.ring, line, lineno, offset + 1));
  }
  if (!sys.ring) throw ParseError("missing ring header", lineno == 0 ? 1 : lineno, 1);
  return sys;
}

std::string format_system(const RingPtr& ring, std::span<const Polynomial> polys,
                          const std::vector<std::string>& comments) {
  std::ostringstream out;
  out << "ring char=" << ring->field().characteristic() << " vars=";
  for (std::size_t k = 0; k < ring->nvars(); ++k) out << (k ? "," : "") << ring->variables()[k];
  out << " order=" << to_string(ring->order().kind()) << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const auto& p : polys) out << p.to_string() << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace f5gb
