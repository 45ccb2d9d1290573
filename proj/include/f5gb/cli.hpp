#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "f5gb/systems.hpp"

namespace f5gb {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int io_error = 1;
inline constexpr int degree_cap = 2;
inline constexpr int verification_failed = 3;
inline constexpr int usage = 64;
}  // namespace exit_code

/// One (system, mode) cell of a benchmark suite.
struct BenchCell {
  SystemSpec system;
  std::string mode;
};

/// Systems of the `smoke`, `desk` or `full` suite in their fixed order; throws
/// std::invalid_argument for an unknown suite name.
std::vector<SystemSpec> bench_suite(const std::string& name);

/// Entry point of the f5gb tool; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace f5gb
