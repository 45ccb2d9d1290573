#include "f5gb/ring.hpp"

#include <set>
#include <stdexcept>

namespace f5gb {

std::string_view to_string(OrderKind kind) {
  return kind == OrderKind::degrevlex ? "degrevlex" : "lex";
}

OrderKind parse_order(std::string_view name) {
  if (name == "degrevlex") return OrderKind::degrevlex;
  if (name == "lex") return OrderKind::lex;
  throw std::invalid_argument("unknown term order '" + std::string(name) + "'");
}

Ring::Ring(PrimeField field, std::vector<std::string> variables, OrderKind order)
    : field_(field), vars_(std::move(variables)), order_(order, vars_.size()) {
  if (vars_.empty()) throw std::invalid_argument("a ring needs at least one variable");
  if (vars_.size() > Monomial::kMaxVars) throw std::invalid_argument("at most 32 variables are supported");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty() || !seen.insert(v).second) {
      throw std::invalid_argument("variable names must be nonempty and distinct");
    }
  }
}

int Ring::variable_index(std::string_view name) const {
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    if (vars_[k] == name) return static_cast<int>(k);
  }
  return -1;
}

Monomial Ring::variable(std::size_t k) const {
  Monomial m(nvars());
  m.set(k, 1);
  return m;
}

std::string Ring::format(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t k = 0; k < nvars(); ++k) {
    unsigned e = m[k];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += vars_[k];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

RingPtr make_ring(std::uint32_t characteristic, std::vector<std::string> variables, OrderKind order) {
  return std::make_shared<const Ring>(PrimeField(characteristic), std::move(variables), order);
}

std::vector<std::string> indexed_variables(std::size_t n, std::string_view prefix) {
  std::vector<std::string> v;
  v.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) v.push_back(std::string(prefix) + std::to_string(k));
  return v;
}

}  // namespace f5gb
