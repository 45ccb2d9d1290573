#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "f5gb/systems.hpp"

namespace f5gb {

/// Reads `ring char=<p> vars=<v1,...> order=<degrevlex|lex>` followed by one
/// polynomial per line; blank lines and lines starting with `#` are skipped.
/// Throws ParseError with a 1-based line and column.
PolynomialSystem parse_system(std::string_view text);

/// Parses a single polynomial such as `x^2*y - 3*z^2*t`; columns in errors
/// are offset by `column0`.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line = 1,
                            std::size_t column0 = 1);

/// Header, optional comment lines, then one polynomial per line with
/// symmetric coefficients.
std::string format_system(const RingPtr& ring, std::span<const Polynomial> polys,
                          const std::vector<std::string>& comments = {});

/// Throws std::runtime_error when the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace f5gb
