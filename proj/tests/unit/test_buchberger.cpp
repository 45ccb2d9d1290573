#include <algorithm>
#include <random>

#include "doctest.h"
#include "f5gb/buchberger.hpp"
#include "f5gb/systems.hpp"
#include "f5gb/variants.hpp"
#include "support.hpp"

using namespace f5gb;
using testing::poly;
using testing::polys;

namespace {

std::vector<std::string> lm_strings(const RingPtr& r, const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(r->format(p.lm()));
  return out;
}

PairLedger three_element_ledger() {
  PairLedger ledger;
  for (std::size_t k = 0; k < 3; ++k) ledger.add_element(k);
  return ledger;
}

// Random dense-ish polynomial with degree at most max_deg.
Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r, unsigned max_deg) {
  std::uniform_int_distribution<unsigned> nterms(1, 4), exp(0, max_deg);
  std::uniform_int_distribution<std::uint32_t> coeff(1, r->field().characteristic() - 1);
  std::vector<Term> ts;
  unsigned n = nterms(rng);
  for (unsigned t = 0; t < n; ++t) {
    Monomial m(r->nvars());
    unsigned left = max_deg;
    for (std::size_t k = 0; k < r->nvars(); ++k) {
      unsigned e = std::min(left, exp(rng));
      m.set(k, e);
      left -= e;
    }
    ts.push_back({FieldElement{coeff(rng)}, m});
  }
  return Polynomial::from_terms(r, std::move(ts));
}

}  // namespace

TEST_SUITE("buchberger_oracle") {
  TEST_CASE("already a basis") {
    auto r = testing::xyz();
    auto g = polys(r, {"x^2 - y*z", "y^2 - x*z"});
    CHECK(is_groebner(g));
    CHECK(reduced_basis(buchberger(g)) == reduced_basis(g));
    CHECK(lm_strings(r, reduced_basis(buchberger(g))) == std::vector<std::string>{"y^2", "x^2"});
  }

  TEST_CASE("single generator") {
    auto r = testing::xyz();
    auto g = polys(r, {"x"});
    CHECK(buchberger(g) == g);
    CHECK(is_groebner(polys(r, {"x^3*y - z^2 + 1"})));
  }

  TEST_CASE("three-element example") {
    auto r = testing::xyz();
    auto g = polys(r, {"x*y*z - y^2*z", "x^2 - y*z", "y^2 - x*z"});
    for (bool criteria : {true, false}) {
      BuchbergerOptions opts;
      opts.use_criteria = criteria;
      auto red = reduced_basis(buchberger(g, opts));
      CHECK(lm_strings(r, red) == std::vector<std::string>{"y^2", "x^2", "x*y*z", "x*z^3"});
      CHECK(testing::strings(red) ==
            std::vector<std::string>{"y^2 - x*z", "x^2 - y*z", "x*y*z - x*z^2", "x*z^3 - y*z^3"});
    }
    CHECK_FALSE(is_groebner(g));
  }

  TEST_CASE("non-basis detection") {
    auto r = testing::ring({"x", "y"});
    CHECK_FALSE(is_groebner(polys(r, {"x*y - 1", "x^2"})));
  }

  TEST_CASE("reduced basis") {
    auto r = testing::ring({"x", "y"});
    auto red = reduced_basis(polys(r, {"x^2", "x^2*y", "y"}));
    CHECK(testing::strings(red) == std::vector<std::string>{"y", "x^2"});
    CHECK(reduced_basis(red) == red);
  }

  TEST_CASE("chain criterion cases") {
    auto r = testing::ring({"x", "y"});
    std::vector<Monomial> lms = {testing::mono(r, "x^2"), testing::mono(r, "y^2"), testing::mono(r, "x*y")};
    PairRecord pair{.i = 0, .j = 1, .gamma = testing::mono(r, "x^2*y^2"), .degree = 4};

    auto ledger = three_element_ledger();
    ledger.mark_treated(0, 2);
    ledger.mark_treated(1, 2);
    CHECK(lcm_criterion(pair, lms, ledger));

    auto pending = three_element_ledger();
    pending.mark_treated(1, 2);
    CHECK_FALSE(lcm_criterion(pair, lms, pending));

    auto via_elimination = three_element_ledger();
    via_elimination.mark_treated(0, 2);
    via_elimination.mark_eliminated(1, 2, Certificate::product);
    CHECK(lcm_criterion(pair, lms, via_elimination));

    std::vector<Monomial> no_divisor = {lms[0], lms[1], testing::mono(r, "x^3")};
    CHECK_FALSE(lcm_criterion(pair, no_divisor, ledger));
  }

  TEST_CASE("chain witness considers every cited-pair combination") {
    auto r = testing::ring({"x", "y"});
    std::vector<Monomial> lms = {testing::mono(r, "x^2"), testing::mono(r, "y^2"), testing::mono(r, "x*y")};
    const Monomial gamma = testing::mono(r, "x^2*y^2");
    for (int mask = 0; mask < 4; ++mask) {
      auto citable = [mask](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        if (a == 0 && b == 2) return (mask & 1) != 0;
        if (a == 1 && b == 2) return (mask & 2) != 0;
        return false;
      };
      auto w = find_chain_witness(0, 1, gamma, lms, citable);
      CHECK(w.has_value() == (mask == 3));
      if (w) CHECK(*w == 2);
    }
  }

  TEST_CASE("ledger transitions") {
    PairLedger ledger = three_element_ledger();
    CHECK(ledger.status(0, 1) == PairStatus::pending);
    ledger.mark_treated(0, 1);
    CHECK(ledger.status(0, 1) == PairStatus::treated);
    CHECK_THROWS(ledger.mark_eliminated(0, 1, Certificate::chain, 2));
    CHECK_THROWS(ledger.mark_eliminated(0, 2, Certificate::chain, 1));
    ledger.mark_treated(1, 2);
    ledger.mark_eliminated(0, 2, Certificate::chain, 1);
    CHECK(ledger.certificate(0, 2) == Certificate::chain);
    CHECK(ledger.citable(0, 2));
  }

  TEST_CASE("randomized small systems") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<int> nv(2, 4), ng(1, 4), deg(1, 3);
      std::vector<std::string> vars;
      int n = nv(rng);
      for (int k = 0; k < n; ++k) vars.push_back("v" + std::to_string(k));
      auto r = testing::ring(vars, 32003);
      std::vector<Polynomial> gens;
      int m = ng(rng);
      for (int k = 0; k < m; ++k) {
        Polynomial p = random_poly(rng, r, static_cast<unsigned>(deg(rng)));
        if (!p.is_zero()) gens.push_back(p);
      }
      if (gens.empty()) continue;
      auto g = buchberger(gens);
      BuchbergerOptions naive;
      naive.use_criteria = false;
      auto h = buchberger(gens, naive);
      CHECK(is_groebner(g));
      CHECK(reduced_basis(g) == reduced_basis(h));

      // Ideal membership of a random combination.
      Polynomial combo(r);
      for (const auto& f : gens) combo = combo + random_poly(rng, r, 2) * f;
      CHECK(normal_form(combo, g).is_zero());

      // Independent of generator order.
      std::vector<Polynomial> shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(reduced_basis(buchberger(shuffled)) == reduced_basis(g));
    }
  }

  TEST_CASE("agrees with the signature algorithm on homogenized Katsura-3") {
    SystemSpec spec = parse_system_spec("katsura:3");
    spec.homogenize = true;
    auto sys = make_system(spec);
    auto f5p = run_f5plus(sys.polys);
    REQUIRE(f5p.terminated());
    CHECK(reduced_basis(buchberger(sys.polys)) == reduced_basis(f5p.basis));
  }

  TEST_CASE("deadline aborts") {
    SystemSpec spec = parse_system_spec("cyclic:6");
    spec.homogenize = true;
    auto sys = make_system(spec);
    BuchbergerOptions opts;
    opts.deadline = std::chrono::steady_clock::now();
    BuchbergerStats stats;
    buchberger(sys.polys, opts, &stats);
    CHECK(stats.aborted);
  }
}
