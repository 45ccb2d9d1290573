#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "f5gb/cli.hpp"
#include "f5gb/io.hpp"
#include "support.hpp"

using namespace f5gb;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("f5gb_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

const std::string ex23 = "file:" + testing::data_path("example23.sys");

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("run on the three-generator example") {
    auto r = cli({"run", "--system", ex23, "--mode", "f5"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.find("basis_size 4\n") != std::string::npos);
    CHECK(r.out.find("zero_reductions 1\n") != std::string::npos);
    CHECK(r.out.find("status terminated\n") != std::string::npos);
  }

  TEST_CASE("input errors") {
    CHECK(cli({"run", "--system", "file:" + testing::data_path("missing.sys")}).code == exit_code::io_error);
    TempDir tmp;
    write(tmp.file("bad.sys"), "ring char=32003 vars=x,y order=degrevlex\nx^\n");
    auto bad = cli({"run", "--system", "file:" + tmp.file("bad.sys")});
    CHECK(bad.code == exit_code::io_error);
    CHECK(bad.err.find("line 2, column 3") != std::string::npos);
    write(tmp.file("affine.sys"), "ring char=32003 vars=x,y order=degrevlex\nx^2 - y\n");
    CHECK(cli({"run", "--system", "file:" + tmp.file("affine.sys")}).code == exit_code::io_error);
    CHECK(cli({"run", "--system", "file:" + tmp.file("affine.sys"), "--homogenize"}).code == exit_code::ok);
  }

  TEST_CASE("usage errors") {
    CHECK(cli({}).code == exit_code::usage);
    CHECK(cli({"run"}).code == exit_code::usage);
    CHECK(cli({"run", "--system", ex23, "--mode", "f4"}).code == exit_code::usage);
    CHECK(cli({"run", "--system", "katsura:3", "--homogenize", "--mode", "naive-discard"}).code == exit_code::usage);
    CHECK(cli({"run", "--system", ex23, "--char", "7583"}).code == exit_code::usage);
    CHECK(cli({"run", "--system", "katsura:3", "--char", "100"}).code == exit_code::usage);
    CHECK(cli({"run", "--system", "banana:3"}).code == exit_code::usage);
    CHECK(cli({"bench", "--suite", "none", "--out", "x.csv"}).code == exit_code::usage);
    CHECK(cli({"bench", "--suite", "smoke", "--out", "x.csv", "--modes", "f4"}).code == exit_code::usage);
    CHECK(cli({"frobnicate"}).code == exit_code::usage);
  }

  TEST_CASE("degree cap exit code") {
    auto r = cli({"run", "--system", "cyclic:5", "--homogenize", "--mode", "f5", "--degree-cap", "6"});
    CHECK(r.code == exit_code::degree_cap);
    CHECK(r.out.find("status degree_cap") != std::string::npos);
  }

  TEST_CASE("verify") {
    TempDir tmp;
    const std::string basis = tmp.file("basis.sys");
    REQUIRE(cli({"run", "--system", ex23, "--mode", "f5plus", "--basis-out", basis}).code == exit_code::ok);
    CHECK(read_file(basis).find("# reduced-groebner-basis") != std::string::npos);
    CHECK(cli({"verify", "--system", ex23, "--basis", basis}).code == exit_code::ok);

    auto sys = parse_system(read_file(basis));
    REQUIRE(sys.polys.size() == 4);
    std::vector<Polynomial> fewer(sys.polys.begin(), sys.polys.end() - 1);
    write(tmp.file("fewer.sys"), format_system(sys.ring, fewer));
    auto v = cli({"verify", "--system", ex23, "--basis", tmp.file("fewer.sys")});
    CHECK(v.code == exit_code::verification_failed);
    CHECK(v.out.find("is_groebner no") != std::string::npos);

    const std::string two = "ring char=32003 vars=x,y,z order=degrevlex\nx^2 - y*z\ny^2 - x*z\n";
    write(tmp.file("two.sys"), two);
    CHECK(cli({"verify", "--system", "file:" + tmp.file("two.sys"), "--basis", tmp.file("two.sys")}).code ==
          exit_code::ok);
    CHECK(cli({"verify", "--system", ex23, "--basis", tmp.file("two.sys")}).code == exit_code::verification_failed);
    CHECK(cli({"verify", "--system", ex23, "--basis", tmp.file("nothing.sys")}).code == exit_code::io_error);
  }

  TEST_CASE("output files are deterministic") {
    TempDir tmp;
    for (int k = 0; k < 2; ++k) {
      const std::string n = std::to_string(k);
      REQUIRE(cli({"run", "--system", "katsura:4", "--homogenize", "--mode", "f5b", "--basis-out",
                   tmp.file("b" + n), "--trace", tmp.file("t" + n)})
                  .code == exit_code::ok);
    }
    CHECK(read_file(tmp.file("b0")) == read_file(tmp.file("b1")));
    CHECK(read_file(tmp.file("t0")) == read_file(tmp.file("t1")));
    CHECK(read_file(tmp.file("t0")).find("event=input serial=1 sig=1#5 deg=1") != std::string::npos);
  }

  TEST_CASE("metrics file") {
    TempDir tmp;
    REQUIRE(cli({"run", "--system", ex23, "--metrics", tmp.file("m.csv")}).code == exit_code::ok);
    std::string csv = read_file(tmp.file("m.csv"));
    CHECK(csv.rfind("system,mode,char,order,terminated,", 0) == 0);
    CHECK(csv.find(",f5,32003,degrevlex,1,4,5,6,-1,5,4,1,4,4,") != std::string::npos);
  }

  TEST_CASE("buchberger mode and cofactor audit") {
    auto b = cli({"run", "--system", ex23, "--mode", "buchberger"});
    CHECK(b.code == exit_code::ok);
    CHECK(b.out.find("reduced_basis_size 4") != std::string::npos);
    auto c = cli({"run", "--system", ex23, "--cofactor-audit"});
    CHECK(c.code == exit_code::ok);
    CHECK(c.out.find("cofactor_failures 0") != std::string::npos);
  }

  TEST_CASE("bench rows do not depend on the job count") {
    TempDir tmp;
    auto one = cli({"bench", "--suite", "smoke", "--out", tmp.file("j1.csv"), "--jobs", "1", "--no-timing"});
    auto four = cli({"bench", "--suite", "smoke", "--out", tmp.file("j4.csv"), "--jobs", "4", "--no-timing"});
    CHECK(one.code == exit_code::ok);
    CHECK(four.code == exit_code::ok);
    std::string a = read_file(tmp.file("j1.csv"));
    CHECK(a == read_file(tmp.file("j4.csv")));
    CHECK(std::count(a.begin(), a.end(), '\n') == 1 + 4 * 3);
    CHECK(one.out.find("FAIL") == std::string::npos);
  }
}
