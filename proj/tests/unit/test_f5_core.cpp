#include <set>

#include "doctest.h"
#include "f5gb/buchberger.hpp"
#include "f5gb/error.hpp"
#include "f5gb/f5_core.hpp"
#include "f5gb/variants.hpp"
#include "support.hpp"

using namespace f5gb;
using testing::mono;
using testing::poly;

namespace {

struct Example23 {
  RingPtr r = testing::xyz();
  std::vector<Polynomial> gens = testing::polys(r, {"x*y*z - y^2*z", "x^2 - y*z", "y^2 - x*z"});
};

std::string sig_string(const F5Core& core, ElementId id) {
  return format_signature(core.element(id).sig, *core.ring());
}

}  // namespace

TEST_SUITE("f5_core") {
  TEST_CASE("signature order") {
    auto r = testing::xyz();
    const TermOrder& ord = r->order();
    Signature y2f2{mono(r, "y^2"), 2}, x2f3{mono(r, "x^2"), 3};
    CHECK(sig_cmp(y2f2, x2f3, ord) == 1);
    CHECK(sig_cmp(x2f3, y2f2, ord) == -1);
    CHECK(sig_cmp(y2f2, y2f2, ord) == 0);
    CHECK(sig_cmp({mono(r, "x"), 1}, {mono(r, "x*y"), 1}, ord) == -1);
    Signature a{mono(r, "x*z"), 1}, b{mono(r, "y^2"), 1};
    CHECK(sig_cmp(a, b, ord) == -1);
    Monomial v = mono(r, "x*y*z^2");
    CHECK(sig_cmp(v * a, v * b, ord) == -1);
    CHECK(format_signature(y2f2, *r) == "y^2#2");
  }

  TEST_CASE("Faugere criterion") {
    auto r = testing::xyz();
    LeadTermIndex prev;
    LabeledPolynomial r2{.sig = {r->one(), 2}, .poly = poly(r, "x^2 - y*z"), .serial = 2};
    CHECK_FALSE(faugere_detected(mono(r, "y^2"), r2, prev));
    prev.add(3, mono(r, "y^2"));
    CHECK(faugere_detected(mono(r, "y^2"), r2, prev));
    LabeledPolynomial r4{.sig = {mono(r, "y"), 1}, .poly = poly(r, "x*z^3 - y*z^3"), .serial = 4};
    CHECK(faugere_detected(mono(r, "y"), r4, prev));
    CHECK_FALSE(faugere_detected(mono(r, "x"), r4, prev));
    LabeledPolynomial r3{.sig = {r->one(), 3}, .poly = poly(r, "y^2 - x*z"), .serial = 1};
    CHECK_FALSE(faugere_detected(mono(r, "y^2"), r3, prev));
  }

  TEST_CASE("Rewritten criterion") {
    auto r = testing::xyz();
    RuleList rules(3);
    LabeledPolynomial r4{.sig = {mono(r, "y"), 1}, .poly = poly(r, "x*z^3 - y*z^3"), .serial = 5};
    CHECK_FALSE(rewritten_detected(mono(r, "x"), r4, rules));
    rules.add(1, mono(r, "x"), 3);
    CHECK_FALSE(rewritten_detected(mono(r, "x"), r4, rules));
    rules.add(1, mono(r, "x"), 6);
    CHECK(rewritten_detected(mono(r, "x"), r4, rules));
    CHECK_FALSE(rewritten_detected(mono(r, "z"), r4, rules));
    rules.add(2, mono(r, "z"), 7);
    CHECK_FALSE(rewritten_detected(mono(r, "z"), r4, rules));
    CHECK_THROWS_AS(rules.add(1, mono(r, "z"), 6), StructuralError);
  }

  TEST_CASE("stepwise run of the three-generator example") {
    Example23 ex;
    EventRecorder rec;
    EventLog log;
    log.attach(rec.sink());
    F5Core core(ex.gens, {}, &log);

    ElementId r3 = core.begin_iteration(3);
    core.end_iteration();

    ElementId r2 = core.begin_iteration(2);
    auto p23 = core.crit_pair(r2, r3);
    CHECK_FALSE(p23.pair.has_value());
    CHECK(p23.outcome == PairOutcome::faugere);
    CHECK(p23.gamma == mono(ex.r, "x^2*y^2"));
    core.end_iteration();

    ElementId r1 = core.begin_iteration(1);
    CHECK_THROWS_AS(core.crit_pair(r1, r1), StructuralError);
    auto p12 = core.crit_pair(r1, r2);
    auto p13 = core.crit_pair(r1, r3);
    REQUIRE(p12.pair.has_value());
    REQUIRE(p13.pair.has_value());
    CHECK(p13.pair->gamma == mono(ex.r, "x*y^2*z"));
    CHECK(format_signature(p13.pair->u_hi * core.element(p13.pair->hi).sig, *ex.r) == "y#1");
    CHECK(format_signature(p12.pair->u_hi * core.element(p12.pair->hi).sig, *ex.r) == "x#1");

    auto f = core.spol({*p12.pair, *p13.pair});
    REQUIRE(f.size() == 2);
    CHECK(sig_string(core, f[0]) == "y#1");
    CHECK(sig_string(core, f[1]) == "x#1");
    CHECK(core.rules().rules(1).size() == 3);

    auto done = core.reduction(f);
    REQUIRE(done.size() == 1);
    ElementId r4 = done[0];
    CHECK(sig_string(core, r4) == "y#1");
    CHECK(core.element(r4).poly == poly(ex.r, "x*z^3 - y*z^3"));
    CHECK_FALSE(core.element(r4).redundant);
    CHECK(core.zero_reductions() == 1);
    CHECK(core.element(f[1]).serial > core.element(r4).serial);
    core.add_to_basis(r4);

    auto p41 = core.crit_pair(r4, r1);
    auto p42 = core.crit_pair(r4, r2);
    auto p43 = core.crit_pair(r4, r3);
    CHECK(p41.outcome == PairOutcome::faugere);
    CHECK(p43.outcome == PairOutcome::faugere);
    CHECK(p42.outcome == PairOutcome::kept);
    CHECK(p42.rewritten_hit);
    CHECK_FALSE(p42.faugere_hit);
    REQUIRE(p42.pair.has_value());
    CHECK(core.spol({*p42.pair}).empty());

    CHECK(core.slice().size() == 2);
    CHECK(core.current_basis().size() == 4);
    CHECK(reduced_basis(core.basis_polynomials()) ==
          reduced_basis(buchberger(ex.gens)));
  }

  TEST_CASE("Rewritten criterion inside CritPair when enabled") {
    Example23 ex;
    F5Core core(ex.gens, {.rewritten_in_critpair = true});
    ElementId r3 = core.begin_iteration(3);
    core.end_iteration();
    ElementId r2 = core.begin_iteration(2);
    core.end_iteration();
    ElementId r1 = core.begin_iteration(1);
    auto f = core.spol({*core.crit_pair(r1, r2).pair, *core.crit_pair(r1, r3).pair});
    auto done = core.reduction(f);
    REQUIRE(done.size() == 1);
    core.add_to_basis(done[0]);
    auto p42 = core.crit_pair(done[0], r2);
    CHECK(p42.outcome == PairOutcome::rewritten);
    CHECK_FALSE(p42.pair.has_value());
  }

  TEST_CASE("Spol drops a second pair with the same label") {
    Example23 ex;
    F5Core core(ex.gens);
    ElementId r3 = core.begin_iteration(3);
    core.end_iteration();
    core.begin_iteration(2);
    core.end_iteration();
    ElementId r1 = core.begin_iteration(1);
    auto p = core.crit_pair(r1, r3).pair;
    REQUIRE(p.has_value());
    CHECK(core.spol({*p, *p}).size() == 1);
    CHECK(core.spol({}).empty());
  }

  TEST_CASE("IsReducible outcomes") {
    Example23 ex;
    F5Core core(ex.gens);
    core.begin_iteration(3);
    core.end_iteration();
    ElementId r2 = core.begin_iteration(2);
    core.end_iteration();
    ElementId r1 = core.begin_iteration(1);

    // The pair (r1, r2) alone: its s-polynomial xy^2z - y^2z^2 carries x*F1 and
    // y*r1 has the smaller label y*F1, with no rule for y yet.
    auto f = core.spol({*core.crit_pair(r1, r2).pair});
    REQUIRE(f.size() == 1);
    CHECK(core.element(f[0]).poly.lm() == mono(ex.r, "x*y^2*z"));
    auto hit = core.is_reducible(f[0], {});
    REQUIRE(hit.reducer.has_value());
    CHECK(*hit.reducer == r1);
    CHECK_FALSE(hit.flag);

    // r1 only divides itself with the same signature: a rejected candidate.
    auto self = core.is_reducible(r1, {});
    CHECK_FALSE(self.reducer.has_value());
    CHECK(self.flag);
  }

  TEST_CASE("IsReducible without a divisor") {
    Example23 ex;
    F5Core core(ex.gens);
    ElementId r3 = core.begin_iteration(3);
    core.end_iteration();
    core.begin_iteration(2);
    core.end_iteration();
    ElementId r1 = core.begin_iteration(1);
    auto f = core.spol({*core.crit_pair(r1, r3).pair});
    REQUIRE(f.size() == 1);
    CHECK(core.element(f[0]).poly.lm() == mono(ex.r, "y^3*z"));
    auto res = core.is_reducible(f[0], {});
    CHECK_FALSE(res.reducer.has_value());
    CHECK_FALSE(res.flag);
  }

  TEST_CASE("degree-8 redundant element of the four-variable example") {
    auto sys = testing::load("example32.sys");
    EventRecorder rec;
    EventLog log;
    log.attach(rec.sink());
    auto res = run_f5(sys.polys, {}, &log);
    REQUIRE(res.terminated());
    std::vector<const Event*> deg7, deg8;
    for (const auto& e : rec.events()) {
      if (e.kind != EventKind::complete) continue;
      if (e.degree == 7) deg7.push_back(&e);
      if (e.degree == 8) deg8.push_back(&e);
    }
    bool found7 = false;
    for (const Event* e : deg7) found7 = found7 || sys.ring->format(*e->lm) == "y^5*t^2";
    CHECK(found7);
    REQUIRE(deg8.size() == 1);
    CHECK(sys.ring->format(*deg8[0]->lm) == "y^6*t^2");
    CHECK(deg8[0]->flag);
    auto audit = audit_redundancy(rec.events(), *sys.ring);
    CHECK(audit.ok);
    CHECK(audit.checked >= 1);
  }

  TEST_CASE("labels are unique per iteration and backed by rules") {
    for (const char* file : {"example23.sys", "example32.sys", "golden/katsura3.sys"}) {
      auto loaded = testing::load(file);
      std::vector<Polynomial> gens = loaded.polys;
      if (!gens.front().is_homogeneous()) gens = homogenize(gens);
      gens = interreduce(gens);
      EventRecorder rec;
      EventLog log;
      log.attach(rec.sink());
      auto res = run_f5(gens, {}, &log);
      REQUIRE(res.terminated());
      std::set<std::string> sigs_with_rules, completed;
      for (const auto& e : rec.events()) {
        if (!e.sig) continue;
        const std::string s = format_signature(*e.sig, *gens.front().ring());
        if (e.kind == EventKind::rule) sigs_with_rules.insert(s);
        if (e.kind == EventKind::complete || e.kind == EventKind::input) {
          CHECK(completed.insert(s).second);
          CHECK(sigs_with_rules.count(s) == 1);
        }
      }
    }
  }

  TEST_CASE("cofactor identity holds for every completed element") {
    auto sys = testing::load("example23.sys");
    VariantConfig cfg;
    cfg.cofactor_audit = true;
    auto res = run_f5(sys.polys, cfg);
    REQUIRE(res.terminated());
    CHECK(res.cofactors.checked >= 1);
    CHECK(res.cofactors.failures == 0);
  }

  TEST_CASE("input validation") {
    auto r = testing::xyz();
    CHECK_THROWS_AS(F5Core(testing::polys(r, {"x^2 - y"})), NonHomogeneousInput);
    CHECK_THROWS_AS(F5Core(testing::polys(r, {"x^2", "x^2*y"})), StructuralError);
    CHECK_THROWS_AS(F5Core(std::vector<Polynomial>{}), StructuralError);
    F5Core single(testing::polys(r, {"x*y - z^2"}));
    single.begin_iteration(1);
    CHECK(single.slice().size() == 1);
    CHECK_THROWS_AS(single.begin_iteration(2), StructuralError);
  }
}
