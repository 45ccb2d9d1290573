#include <set>

#include "doctest.h"
#include "f5gb/buchberger.hpp"
#include "f5gb/io.hpp"
#include "f5gb/systems.hpp"
#include "support.hpp"

using namespace f5gb;

TEST_SUITE("systems") {
  TEST_CASE("cyclic definitions") {
    auto c2 = gen_named(SystemKind::cyclic, 2);
    auto r2 = c2.front().ring();
    CHECK(c2 == testing::polys(r2, {"x1 + x2", "x1*x2 - 1"}));
    auto c3 = gen_named(SystemKind::cyclic, 3);
    auto r3 = c3.front().ring();
    CHECK(r3->variables() == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(c3 == testing::polys(r3, {"x1 + x2 + x3", "x1*x2 + x2*x3 + x3*x1", "x1*x2*x3 - 1"}));
  }

  TEST_CASE("katsura definition") {
    auto k2 = gen_named(SystemKind::katsura, 2);
    auto r = k2.front().ring();
    CHECK(r->nvars() == 3);
    std::set<std::string> got, want;
    for (const auto& p : k2) got.insert(p.to_string());
    for (const auto& p : testing::polys(r, {"x1 + 2*x2 + 2*x3 - 1", "x1^2 + 2*x2^2 + 2*x3^2 - x1",
                                            "2*x1*x2 + 2*x2*x3 - x2"})) {
      want.insert(p.to_string());
    }
    CHECK(got == want);
  }

  TEST_CASE("eco definition") {
    auto e3 = gen_named(SystemKind::eco, 3);
    auto r = e3.front().ring();
    std::set<std::string> got, want;
    for (const auto& p : e3) got.insert(p.to_string());
    for (const auto& p : testing::polys(r, {"x1*x3 + x1*x2*x3 - 1", "x2*x3 - 2", "x1 + x2 + 1"})) {
      want.insert(p.to_string());
    }
    CHECK(got == want);
  }

  TEST_CASE("parameters below two are rejected") {
    CHECK_THROWS_AS(gen_named(SystemKind::katsura, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_named(SystemKind::cyclic, 0), std::invalid_argument);
  }

  TEST_CASE("frozen named systems match the generators") {
    struct Family {
      SystemKind kind;
      unsigned lo, hi;
    };
    for (const Family f : {Family{SystemKind::katsura, 2, 9}, Family{SystemKind::cyclic, 2, 7},
                           Family{SystemKind::eco, 3, 10}}) {
      for (unsigned n = f.lo; n <= f.hi; ++n) {
        const std::string name = std::string(to_string(f.kind)) + std::to_string(n);
        CAPTURE(name);
        auto frozen = testing::load("golden/" + name + ".sys");
        auto fresh = gen_named(f.kind, n);
        CHECK(*frozen.ring == *fresh.front().ring());
        CHECK(testing::strings(frozen.polys) == testing::strings(fresh));
      }
    }
  }

  TEST_CASE("homogenize and dehomogenize") {
    auto r = testing::ring({"x", "y", "z"});
    auto h = homogenize(testing::polys(r, {"x^2 - y", "x*y*z - 1", "x*y - z^2"}));
    auto rh = h.front().ring();
    CHECK(rh->variables() == std::vector<std::string>{"x", "y", "z", "h"});
    CHECK(h[0] == testing::poly(rh, "x^2 - y*h"));
    CHECK(h[1] == testing::poly(rh, "x*y*z - h^3"));
    CHECK(h[2] == testing::poly(rh, "x*y - z^2"));
    for (const auto& p : h) CHECK(p.is_homogeneous());
    auto back = dehomogenize(h);
    CHECK(*back.front().ring() == *r);
    CHECK(back == testing::polys(r, {"x^2 - y", "x*y*z - 1", "x*y - z^2"}));
  }

  TEST_CASE("homogenized bases generate the affine ideal") {
    for (const char* spec : {"katsura:3", "cyclic:4", "eco:4"}) {
      CAPTURE(spec);
      SystemSpec s = parse_system_spec(spec);
      auto affine = make_system(s);
      s.homogenize = true;
      auto homog = make_system(s);
      auto gh = reduced_basis(buchberger(homog.polys));
      auto back = dehomogenize(gh);
      CHECK(reduced_basis(buchberger(back)) == reduced_basis(buchberger(affine.polys)));
    }
  }

  TEST_CASE("SplitMix64 reference outputs") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFull);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
    CHECK(rng.next() == 0x06C45D188009454Full);
    SplitMix64 bounded(7);
    for (int k = 0; k < 1000; ++k) CHECK(bounded.below(10) < 10);
  }

  TEST_CASE("monomial counts") {
    CHECK(monomial_count(3, 3) == 10);
    CHECK(monomial_count(0, 5) == 1);
    CHECK(monomial_count(6, 8) == 1716);
    auto r = testing::ring({"a", "b", "c"});
    auto ms = monomials_of_degree(r, 3);
    REQUIRE(ms.size() == 10);
    for (std::size_t k = 1; k < ms.size(); ++k) CHECK(r->order().compare(ms[k - 1], ms[k]) > 0);
    CHECK(random_term_band(100) == std::pair<std::size_t, std::size_t>{10, 15});
    CHECK(random_term_band(4) == std::pair<std::size_t, std::size_t>{1, 1});
  }

  TEST_CASE("random systems") {
    RandomParams params{.generators = 5, .max_degree = 4, .variables = 6, .seed = 17};
    auto a = gen_random(params);
    auto b = gen_random(params);
    CHECK(a == b);
    REQUIRE(a.size() == 5);
    for (const auto& p : a) {
      CHECK(p.is_homogeneous());
      auto count = monomial_count(static_cast<unsigned>(p.degree()), 6);
      auto [lo, hi] = random_term_band(count);
      CHECK(p.size() >= lo);
      CHECK(p.size() <= hi);
      CHECK(p.degree() >= 1);
      CHECK(p.degree() <= 4);
    }
    params.seed = 18;
    CHECK_FALSE(gen_random(params) == a);
  }

  TEST_CASE("system specs") {
    auto k = parse_system_spec("katsura:9");
    CHECK(k.kind == SystemKind::katsura);
    CHECK(k.n == 9);
    auto r = parse_system_spec("random:3,4,6,17");
    CHECK(r.kind == SystemKind::random);
    CHECK(r.random.generators == 3);
    CHECK(r.random.seed == 17);
    CHECK(r.label() == "random:3,4,6,17");
    CHECK(parse_system_spec("file:a/b.sys").path == "a/b.sys");
    CHECK_THROWS_AS(parse_system_spec("katsura"), std::invalid_argument);
    CHECK_THROWS_AS(parse_system_spec("groebner:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_system_spec("random:1,2"), std::invalid_argument);
  }

  TEST_CASE("made systems are interreduced") {
    for (const char* spec : {"katsura:5", "cyclic:5", "eco:6", "random:4,3,6,1"}) {
      CAPTURE(spec);
      SystemSpec s = parse_system_spec(spec);
      s.homogenize = s.kind != SystemKind::random;
      auto sys = make_system(s);
      CHECK(is_lm_interreduced(sys.polys));
      for (const auto& p : sys.polys) CHECK(p.is_homogeneous());
      for (std::size_t i = 1; i < sys.polys.size(); ++i) {
        CHECK(sys.ring->order().compare(sys.polys[i - 1].lm(), sys.polys[i].lm()) > 0);
      }
    }
  }

  TEST_CASE("file systems keep their order") {
    SystemSpec s = parse_system_spec("file:" + testing::data_path("example23.sys"));
    auto sys = make_system(s);
    CHECK(testing::strings(sys.polys) == std::vector<std::string>{"x*y*z - y^2*z", "x^2 - y*z", "y^2 - x*z"});
  }
}
