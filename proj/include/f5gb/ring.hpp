#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "f5gb/field.hpp"
#include "f5gb/monomial.hpp"

namespace f5gb {

enum class OrderKind { degrevlex, lex };

std::string_view to_string(OrderKind kind);
OrderKind parse_order(std::string_view name);

/// Admissible term order on monomials with a fixed variable count.
class TermOrder {
 public:
  TermOrder(OrderKind kind, std::size_t nvars) : kind_(kind), nvars_(nvars) {}

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }

  /// -1, 0, +1. Throws StructuralError when a monomial has the wrong variable count.
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != nvars_ || b.nvars() != nvars_) {
      throw StructuralError("monomial variable count does not match the term order");
    }
    return compare_unchecked(a, b);
  }

  int compare_unchecked(const Monomial& a, const Monomial& b) const {
    return kind_ == OrderKind::degrevlex ? degrevlex_cmp(a, b) : lex_cmp(a, b);
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare_unchecked(a, b) < 0; }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  OrderKind kind_;
  std::size_t nvars_;
};

/// Coefficient field, term order and variable names; shared by every
/// polynomial of the ring.
class Ring {
 public:
  Ring(PrimeField field, std::vector<std::string> variables, OrderKind order = OrderKind::degrevlex);

  const PrimeField& field() const { return field_; }
  const TermOrder& order() const { return order_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }

  /// Index of a variable name, or -1.
  int variable_index(std::string_view name) const;

  Monomial one() const { return Monomial(nvars()); }
  /// The variable x_k as a monomial.
  Monomial variable(std::size_t k) const;

  std::string format(const Monomial& m) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.order_ == b.order_ && a.vars_ == b.vars_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  TermOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint32_t characteristic, std::vector<std::string> variables,
                  OrderKind order = OrderKind::degrevlex);

/// Variable names x1, ..., xn.
std::vector<std::string> indexed_variables(std::size_t n, std::string_view prefix = "x");

}  // namespace f5gb
