#pragma once

#include <string>
#include <vector>

#include "f5gb/io.hpp"
#include "f5gb/polynomial.hpp"
#include "f5gb/ring.hpp"

namespace testing {

inline f5gb::RingPtr ring(std::vector<std::string> vars, std::uint32_t p = 32003,
                          f5gb::OrderKind order = f5gb::OrderKind::degrevlex) {
  return f5gb::make_ring(p, std::move(vars), order);
}

inline f5gb::RingPtr xyz() { return ring({"x", "y", "z"}); }

inline f5gb::Polynomial poly(const f5gb::RingPtr& r, const std::string& text) {
  return f5gb::parse_polynomial(r, text);
}

inline std::vector<f5gb::Polynomial> polys(const f5gb::RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<f5gb::Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(r, t));
  return out;
}

inline f5gb::Monomial mono(const f5gb::RingPtr& r, const std::string& text) { return poly(r, text).lm(); }

inline std::string data_path(const std::string& name) { return std::string(F5GB_TEST_DATA) + "/" + name; }

inline f5gb::PolynomialSystem load(const std::string& name) {
  return f5gb::parse_system(f5gb::read_file(data_path(name)));
}

inline std::vector<std::string> strings(const std::vector<f5gb::Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace testing
