// Writes the affine named systems used by the tests as .sys files.
// Usage: gen_golden OUTDIR

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "f5gb/io.hpp"
#include "f5gb/systems.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_golden OUTDIR\n";
    return 64;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  struct Family {
    f5gb::SystemKind kind;
    unsigned lo, hi;
  };
  const Family families[] = {
      {f5gb::SystemKind::katsura, 2, 9},
      {f5gb::SystemKind::cyclic, 2, 7},
      {f5gb::SystemKind::eco, 3, 10},
  };
  for (const auto& f : families) {
    for (unsigned n = f.lo; n <= f.hi; ++n) {
      auto polys = f5gb::gen_named(f.kind, n);
      const std::string name = std::string(f5gb::to_string(f.kind)) + std::to_string(n);
      std::ofstream out(dir / (name + ".sys"));
      out << f5gb::format_system(polys.front().ring(), polys, {name + ", affine, as generated"});
      if (!out) {
        std::cerr << "cannot write " << name << "\n";
        return 1;
      }
    }
  }
  return 0;
}
